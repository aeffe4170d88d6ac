#ifndef PVD_STEGO_HPP
#define PVD_STEGO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pvd/image.hpp"
#include "pvd/numsys.hpp"

namespace pvd {

// Secret bit stream, one byte per bit (0 or 1).
using BitVec = std::vector<std::uint8_t>;

enum class Framing {
    LengthPrefixed, // first 32 embedded bits = big-endian message bit length
    Raw,            // length carried out of band
};

struct EmbedParams {
    System system;
    int plane = 1; // 1-based, 1 = LSB
    std::uint64_t key = 0;
    Framing framing = Framing::LengthPrefixed;
};

struct EmbedOutcome {
    GrayImage stego;
    std::size_t bits_embedded = 0;
    std::size_t pixels_visited = 0;
    std::size_t pixels_skipped = 0;
};

// Keyed bijection on [0, n): Fisher-Yates over the identity array, indices
// n-1 down to 1, swap partner drawn by rejection sampling from SplitMix64(key).
std::vector<std::uint32_t> pixel_permutation(std::uint64_t key, std::size_t n);

// Skipped (nullopt) when the pixel is not embeddable at (plane, system);
// otherwise the new pixel value with the plane bit set to `secret`.
std::optional<std::uint8_t> embed_bit(std::uint8_t pixel, int secret,
                                      System s, int plane);

// Number of embeddable pixels = maximum Raw message length in bits.
// Independent of any key.
std::size_t capacity(const GrayImage& cover, int plane, System s);

// Embeds the framed message along the keyed pixel order, skipping
// non-embeddable pixels, stopping once the message is exhausted.
EmbedOutcome embed_message(const GrayImage& cover, const BitVec& message,
                           const EmbedParams& params);

// Blind extraction: same keyed order, reads the plane bit of each embeddable
// pixel. raw_length (in bits) is required iff framing is Raw.
BitVec extract_message(const GrayImage& stego, const EmbedParams& params,
                       std::optional<std::size_t> raw_length = std::nullopt);

// Byte stream <-> bit stream, MSB of each byte first.
BitVec bytes_to_bits(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> bits_to_bytes(const BitVec& bits); // zero-padded tail

} // namespace pvd

#endif
