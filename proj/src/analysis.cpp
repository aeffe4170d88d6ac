#include "pvd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "pvd/errors.hpp"
#include "pvd/rng.hpp"
#include "pvd/stego.hpp"

namespace pvd {

namespace {

constexpr int kExperimentPlanes = 8; // 1st LSB through 8th

std::string fmt6(double v) {
    if (std::isinf(v)) return "INF";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Deterministic per-cell seed, independent draws per (image, system, plane).
std::uint64_t derive_seed(std::uint64_t key, std::uint64_t a, std::uint64_t b,
                          std::uint64_t c) {
    SplitMix64 s(key);
    SplitMix64 t(s.next() ^ a);
    SplitMix64 u(t.next() ^ b);
    SplitMix64 v(u.next() ^ c);
    return v.next();
}

std::vector<NamedImage> sorted_by_id(std::vector<NamedImage> images) {
    std::sort(images.begin(), images.end(),
              [](const NamedImage& a, const NamedImage& b) {
                  return a.id < b.id;
              });
    return images;
}

} // namespace

double mse(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw StructuralError("MSE of images with different dimensions");
    double sum = 0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = static_cast<double>(a.data[i]) - b.data[i];
        sum += d * d;
    }
    return sum / static_cast<double>(a.data.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
    const double e = mse(a, b);
    if (e == 0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

void CapacityReport::write_csv(std::ostream& out) const {
    out << "image,system,plane,capacity_bits,total_pixels,capacity_fraction\n";
    for (const auto& r : rows)
        out << r.image << ',' << system_name(r.system) << ',' << r.plane << ','
            << r.capacity_bits << ',' << r.total_pixels << ','
            << fmt6(r.fraction) << '\n';
}

void QualityReport::write_csv(std::ostream& out) const {
    out << "image,system,plane,bits_embedded,mse,psnr_db\n";
    for (const auto& r : rows)
        out << r.image << ',' << system_name(r.system) << ',' << r.plane << ','
            << r.bits_embedded << ',' << fmt6(r.mse) << ',' << fmt6(r.psnr_db)
            << '\n';
}

CapacityReport run_capacity_experiment(const std::vector<NamedImage>& images,
                                       const std::vector<System>& systems) {
    CapacityReport report;
    for (const auto& ni : sorted_by_id(images)) {
        for (System s : systems) {
            const int planes = std::min(kExperimentPlanes, plane_count(s));
            for (int p = 1; p <= planes; ++p) {
                CapacityRow row;
                row.image = ni.id;
                row.system = s;
                row.plane = p;
                row.capacity_bits = capacity(ni.image, p, s);
                row.total_pixels = ni.image.pixel_count();
                row.fraction = static_cast<double>(row.capacity_bits) /
                               static_cast<double>(row.total_pixels);
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

QualityReport run_quality_experiment(const std::vector<NamedImage>& images,
                                     const std::vector<System>& systems,
                                     std::uint64_t key,
                                     std::optional<std::size_t> fixed_payload) {
    QualityReport report;
    const auto sorted = sorted_by_id(images);
    // (system index, plane) -> finite-psnr sum/count, mse sum, bits sum
    struct Acc {
        double psnr_sum = 0;
        std::size_t psnr_n = 0;
        double mse_sum = 0;
        std::size_t bits_sum = 0;
        std::size_t rows_n = 0;
    };
    std::map<std::pair<int, int>, Acc> acc;

    for (std::size_t img_i = 0; img_i < sorted.size(); ++img_i) {
        const auto& ni = sorted[img_i];
        for (std::size_t sys_i = 0; sys_i < systems.size(); ++sys_i) {
            const System s = systems[sys_i];
            const int planes = std::min(kExperimentPlanes, plane_count(s));
            for (int p = 1; p <= planes; ++p) {
                const std::size_t cap = capacity(ni.image, p, s);
                std::size_t len = cap;
                if (fixed_payload) len = std::min(len, *fixed_payload);

                BitVec secret(len);
                SplitMix64 rng(derive_seed(key, img_i, sys_i, p));
                for (auto& bit : secret) bit = rng.next() & 1;

                EmbedParams params{s, p, key, Framing::Raw};
                const EmbedOutcome out = embed_message(ni.image, secret, params);

                QualityRow row;
                row.image = ni.id;
                row.system = s;
                row.plane = p;
                row.bits_embedded = out.bits_embedded;
                row.mse = mse(ni.image, out.stego);
                row.psnr_db = psnr(ni.image, out.stego);
                auto& a = acc[{static_cast<int>(sys_i), p}];
                a.mse_sum += row.mse;
                a.bits_sum += row.bits_embedded;
                a.rows_n += 1;
                if (!std::isinf(row.psnr_db)) {
                    a.psnr_sum += row.psnr_db;
                    a.psnr_n += 1;
                }
                report.rows.push_back(std::move(row));
            }
        }
    }

    for (const auto& [sp, a] : acc) {
        QualityRow row;
        row.image = "AVG";
        row.system = systems[static_cast<std::size_t>(sp.first)];
        row.plane = sp.second;
        row.bits_embedded = a.rows_n ? a.bits_sum / a.rows_n : 0;
        row.mse = a.rows_n ? a.mse_sum / static_cast<double>(a.rows_n) : 0;
        row.psnr_db = a.psnr_n
                          ? a.psnr_sum / static_cast<double>(a.psnr_n)
                          : std::numeric_limits<double>::infinity();
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string comparison_summary(const CapacityReport& capacity,
                               const QualityReport& quality) {
    std::set<std::string> cap_ids, qual_ids;
    for (const auto& r : capacity.rows) cap_ids.insert(r.image);
    for (const auto& r : quality.rows)
        if (r.image != "AVG") qual_ids.insert(r.image);
    if (cap_ids != qual_ids)
        throw StructuralError("capacity and quality reports cover different "
                              "image sets");

    std::ostringstream out;
    out << "system,every_pixel_plane1,every_pixel_higher_planes\n";
    std::set<System> seen;
    for (const auto& r : capacity.rows) seen.insert(r.system);
    for (System s : kAllSystems) {
        if (!seen.count(s)) continue;
        bool plane1 = true, higher = true;
        for (const auto& r : capacity.rows) {
            if (r.system != s) continue;
            const bool full = r.capacity_bits == r.total_pixels;
            if (r.plane == 1 && !full) plane1 = false;
            if (r.plane > 1 && !full) higher = false;
        }
        out << system_name(s) << ',' << (plane1 ? "Yes" : "No") << ','
            << (higher ? "Yes" : "No") << '\n';
    }

    out << "plane,psnr_ranking_best_to_worst\n";
    std::map<int, std::vector<std::pair<double, System>>> ranking;
    for (const auto& r : quality.rows)
        if (r.image == "AVG") ranking[r.plane].push_back({r.psnr_db, r.system});
    for (auto& [plane, entries] : ranking) {
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) {
                             return a.first > b.first;
                         });
        out << plane << ',';
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) out << '>';
            out << system_name(entries[i].second);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace pvd
