#ifndef PVD_IMAGE_HPP
#define PVD_IMAGE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pvd {

// 8-bit grayscale image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    std::size_t pixel_count() const { return data.size(); }
    bool operator==(const GrayImage&) const = default;
};

// Decodes binary PGM (P5, maxval 255) or 8-bit single-channel grayscale PNG,
// chosen by file content for PGM and extension otherwise. Color, alpha, and
// 16-bit inputs are rejected, never converted.
GrayImage load_image(const std::string& path);

// Writes PGM or PNG per extension (.pgm/.png). PGM output is byte-for-byte
// deterministic: "P5\n<w> <h>\n255\n" + raw data.
void save_image(const GrayImage& img, const std::string& path);

enum class SynthKind { ConstantZero, Gradient, UniformRandom };

// Deterministic synthetic covers. Gradient pixel = (x + y) mod 256;
// UniformRandom draws SplitMix64(seed) outputs mod 256.
GrayImage synth_image(SynthKind kind, std::uint64_t seed, int width, int height);

} // namespace pvd

#endif
