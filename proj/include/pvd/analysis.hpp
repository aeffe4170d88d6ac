#ifndef PVD_ANALYSIS_HPP
#define PVD_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pvd/image.hpp"
#include "pvd/numsys.hpp"

namespace pvd {

double mse(const GrayImage& a, const GrayImage& b);

// 10*log10(255^2 / MSE); +infinity when the images are identical
// (rendered as "INF" in CSV).
double psnr(const GrayImage& a, const GrayImage& b);

struct NamedImage {
    std::string id;
    GrayImage image;
};

struct CapacityRow {
    std::string image;
    System system;
    int plane;
    std::size_t capacity_bits;
    std::size_t total_pixels;
    double fraction;
};

struct CapacityReport {
    std::vector<CapacityRow> rows;
    void write_csv(std::ostream& out) const;
};

struct QualityRow {
    std::string image; // "AVG" for the per-(system, plane) average rows
    System system;
    int plane;
    std::size_t bits_embedded;
    double mse;
    double psnr_db; // +infinity => INF
};

struct QualityReport {
    std::vector<QualityRow> rows; // per-image rows, then AVG rows
    void write_csv(std::ostream& out) const;
};

// One row per (image, system, plane) for planes 1..8, images sorted by id.
CapacityReport run_capacity_experiment(const std::vector<NamedImage>& images,
                                       const std::vector<System>& systems);

// Full-capacity embedding by default; fixed_payload caps every cell at the
// same bit count for fair cross-system comparison. Secret streams are
// SplitMix64-generated with per-cell seeds derived from `key`.
QualityReport run_quality_experiment(const std::vector<NamedImage>& images,
                                     const std::vector<System>& systems,
                                     std::uint64_t key,
                                     std::optional<std::size_t> fixed_payload =
                                         std::nullopt);

// Measured analogue of the paper-style comparison table: per-system
// "every pixel usable" booleans plus per-plane PSNR rankings.
std::string comparison_summary(const CapacityReport& capacity,
                               const QualityReport& quality);

} // namespace pvd

#endif
