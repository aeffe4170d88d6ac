#include "pvd/stego.hpp"

#include <array>
#include <numeric>

#include "pvd/errors.hpp"
#include "pvd/rng.hpp"

namespace pvd {

namespace {

void check_params(const EmbedParams& p) {
    if (p.plane < 1 || p.plane > plane_count(p.system))
        throw RangeError("plane " + std::to_string(p.plane) +
                         " out of range for " + system_name(p.system));
}

// Per-pixel-value lookup for one (system, plane).
std::array<bool, 256> embeddable_lut(System s, int plane) {
    std::array<bool, 256> lut;
    for (int v = 0; v < 256; ++v) lut[v] = embeddable(v, plane, s);
    return lut;
}

} // namespace

std::vector<std::uint32_t> pixel_permutation(std::uint64_t key, std::size_t n) {
    if (n == 0) throw RangeError("permutation of zero pixels");
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    SplitMix64 rng(key);
    for (std::size_t i = n - 1; i >= 1; --i) {
        const std::size_t j = rng.bounded(i + 1);
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

std::optional<std::uint8_t> embed_bit(std::uint8_t pixel, int secret,
                                      System s, int plane) {
    if (!embeddable(pixel, plane, s)) return std::nullopt;
    CodeWord w = canonicalize(pixel, s);
    const std::uint32_t bit = 1u << (plane - 1);
    w.bits = secret ? (w.bits | bit) : (w.bits & ~bit);
    return static_cast<std::uint8_t>(recompose(w));
}

std::size_t capacity(const GrayImage& cover, int plane, System s) {
    const auto lut = embeddable_lut(s, plane);
    std::size_t count = 0;
    for (std::uint8_t p : cover.data) count += lut[p];
    return count;
}

EmbedOutcome embed_message(const GrayImage& cover, const BitVec& message,
                           const EmbedParams& params) {
    check_params(params);

    BitVec framed;
    if (params.framing == Framing::LengthPrefixed) {
        const std::uint32_t len = static_cast<std::uint32_t>(message.size());
        framed.reserve(32 + message.size());
        for (int i = 31; i >= 0; --i) framed.push_back(len >> i & 1);
        framed.insert(framed.end(), message.begin(), message.end());
    } else {
        framed = message;
    }

    EmbedOutcome out;
    out.stego = cover;
    if (framed.empty()) return out;

    const std::size_t cap = capacity(cover, params.plane, params.system);
    if (framed.size() > cap) throw CapacityError(framed.size(), cap);

    const auto lut = embeddable_lut(params.system, params.plane);
    const auto perm = pixel_permutation(params.key, cover.pixel_count());
    std::size_t next_bit = 0;
    for (std::uint32_t idx : perm) {
        if (next_bit == framed.size()) break;
        ++out.pixels_visited;
        const std::uint8_t p = out.stego.data[idx];
        if (!lut[p]) {
            ++out.pixels_skipped;
            continue;
        }
        out.stego.data[idx] =
            *embed_bit(p, framed[next_bit++], params.system, params.plane);
        ++out.bits_embedded;
    }
    return out;
}

BitVec extract_message(const GrayImage& stego, const EmbedParams& params,
                       std::optional<std::size_t> raw_length) {
    check_params(params);
    if (params.framing == Framing::Raw && !raw_length)
        throw StructuralError("raw framing requires an explicit bit length");

    const std::size_t cap = capacity(stego, params.plane, params.system);
    if (params.framing == Framing::Raw && *raw_length > cap)
        throw TruncationError("requested " + std::to_string(*raw_length) +
                              " bits but stego capacity is " +
                              std::to_string(cap));

    const auto lut = embeddable_lut(params.system, params.plane);
    const auto perm = pixel_permutation(params.key, stego.pixel_count());
    const std::uint32_t bit = 1u << (params.plane - 1);

    BitVec bits;
    std::size_t want = params.framing == Framing::Raw ? *raw_length : 32;
    bool header_pending = params.framing == Framing::LengthPrefixed;
    for (std::uint32_t idx : perm) {
        if (bits.size() == want) {
            if (!header_pending) break;
            // Header complete: decode the big-endian bit length.
            std::uint32_t len = 0;
            for (std::uint8_t b : bits) len = len << 1 | b;
            if (32 + static_cast<std::size_t>(len) > cap)
                throw FramingError("length prefix claims " +
                                   std::to_string(len) +
                                   " bits but stego capacity is " +
                                   std::to_string(cap));
            bits.clear();
            want = len;
            header_pending = false;
            if (want == 0) break;
        }
        const std::uint8_t p = stego.data[idx];
        if (!lut[p]) continue;
        bits.push_back((canonicalize(p, params.system).bits & bit) ? 1 : 0);
    }
    if (header_pending && bits.size() == want) {
        std::uint32_t len = 0;
        for (std::uint8_t b : bits) len = len << 1 | b;
        if (len != 0)
            throw FramingError("length prefix claims " + std::to_string(len) +
                               " bits but none remain extractable");
        bits.clear();
    } else if (bits.size() != want || (header_pending && want != 0)) {
        throw FramingError("stego stream ended before the declared length");
    }
    return bits;
}

BitVec bytes_to_bits(const std::vector<std::uint8_t>& bytes) {
    BitVec bits;
    bits.reserve(bytes.size() * 8);
    for (std::uint8_t b : bytes)
        for (int i = 7; i >= 0; --i) bits.push_back(b >> i & 1);
    return bits;
}

std::vector<std::uint8_t> bits_to_bytes(const BitVec& bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= 0x80u >> (i % 8);
    return bytes;
}

} // namespace pvd
