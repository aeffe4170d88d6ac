#ifndef PVD_RNG_HPP
#define PVD_RNG_HPP

#include <cstdint>

namespace pvd {

// SplitMix64: fixed odd-constant state increment, two-round
// xor-shift-multiply finalizer. Bit-exact on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) by rejection sampling, bound >= 1.
    std::uint64_t bounded(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ULL / bound);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }
};

} // namespace pvd

#endif
