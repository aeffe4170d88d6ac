#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pvd/analysis.hpp"
#include "pvd/errors.hpp"
#include "pvd/stego.hpp"

using namespace pvd;

namespace {

std::vector<NamedImage> small_set() {
    return {
        {"img1", synth_image(SynthKind::UniformRandom, 1, 128, 128)},
        {"img2", synth_image(SynthKind::UniformRandom, 2, 128, 128)},
    };
}

const QualityRow& avg_row(const QualityReport& q, System s, int plane) {
    for (const auto& r : q.rows)
        if (r.image == "AVG" && r.system == s && r.plane == plane) return r;
    throw std::logic_error("missing AVG row");
}

} // namespace

TEST_CASE("MSE closed forms") {
    const GrayImage a = synth_image(SynthKind::UniformRandom, 9, 512, 512);
    CHECK(mse(a, a) == 0.0);

    GrayImage c = synth_image(SynthKind::ConstantZero, 0, 512, 512);
    GrayImage d = c;
    d.data[77] = 255;
    CHECK(mse(c, d) == doctest::Approx(255.0 * 255.0 / 262144.0));

    GrayImage e = c;
    for (auto& p : e.data) p = 1;
    CHECK(mse(c, e) == doctest::Approx(1.0));

    GrayImage wrong{8, 8, std::vector<std::uint8_t>(64, 0)};
    CHECK_THROWS_AS(mse(a, wrong), StructuralError);
}

TEST_CASE("PSNR closed forms") {
    const GrayImage zero = synth_image(SynthKind::ConstantZero, 0, 512, 512);
    CHECK(std::isinf(psnr(zero, zero)));

    GrayImage one = zero;
    one.data[0] = 255;
    CHECK(psnr(zero, one) == doctest::Approx(54.1854).epsilon(1e-5));

    GrayImage plus1 = zero;
    for (auto& p : plus1.data) p = 1;
    CHECK(psnr(zero, plus1) == doctest::Approx(48.1308).epsilon(1e-5));
}

TEST_CASE("capacity report structure and facts") {
    const auto images = small_set();
    const std::vector<System> systems(kAllSystems.begin(), kAllSystems.end());
    const auto report = run_capacity_experiment(images, systems);
    // 2 images x 7 systems x 8 planes
    CHECK(report.rows.size() == 2 * 7 * 8);
    for (const auto& r : report.rows) {
        CHECK(r.capacity_bits <= r.total_pixels);
        if (r.system == System::Binary)
            CHECK(r.capacity_bits == r.total_pixels);
        if (r.system == System::NewSystem && r.plane == 1)
            CHECK(r.capacity_bits == r.total_pixels);
    }
    // deterministic CSV
    std::ostringstream a, b;
    report.write_csv(a);
    run_capacity_experiment(images, systems).write_csv(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, a.str().find('\n')) ==
          "image,system,plane,capacity_bits,total_pixels,capacity_fraction");
}

TEST_CASE("quality report: MSE bound and expected value") {
    const std::vector<NamedImage> images = {
        {"u", synth_image(SynthKind::UniformRandom, 4, 512, 512)}};
    const std::vector<System> systems(kAllSystems.begin(), kAllSystems.end());
    const auto report = run_quality_experiment(images, systems, 1234);
    for (const auto& r : report.rows) {
        if (r.image == "AVG") continue;
        const double w = weights(r.system)[r.plane - 1];
        const double n = 512.0 * 512.0;
        const double bound = w * w * double(r.bits_embedded) / n;
        CHECK(r.mse <= bound + 1e-12);
        if (r.bits_embedded > 0)
            CHECK(std::abs(r.mse - 0.5 * bound) <= 0.1 * 0.5 * bound);
        CHECK((r.mse > 0) == !std::isinf(r.psnr_db));
    }
}

TEST_CASE("quality report: fixed payload mode and zero capacity") {
    // constant value 3 is not embeddable at plane 1 in Natural, so the whole
    // cell has zero capacity and reports INF
    const std::vector<NamedImage> images = {
        {"three", GrayImage{64, 64, std::vector<std::uint8_t>(64 * 64, 3)}}};
    const auto zero_cap = run_quality_experiment(images, {System::Natural}, 1);
    bool saw_zero = false;
    for (const auto& r : zero_cap.rows)
        if (r.image != "AVG" && r.plane == 1) {
            CHECK(r.bits_embedded == 0);
            CHECK(std::isinf(r.psnr_db));
            saw_zero = true;
        }
    CHECK(saw_zero);

    const std::vector<NamedImage> uni = {
        {"u", synth_image(SynthKind::UniformRandom, 4, 128, 128)}};
    const auto fixed =
        run_quality_experiment(uni, {System::Binary}, 1, std::size_t{1000});
    for (const auto& r : fixed.rows)
        if (r.image != "AVG") CHECK(r.bits_embedded == 1000);
}

TEST_CASE("quality CSV renders INF and is deterministic") {
    // constant-3 cover at Natural plane 1 has zero capacity -> MSE 0 -> INF
    const std::vector<NamedImage> images = {
        {"three", GrayImage{32, 32, std::vector<std::uint8_t>(32 * 32, 3)}}};
    const auto report = run_quality_experiment(images, {System::Natural}, 7);
    std::ostringstream csv;
    report.write_csv(csv);
    CHECK(csv.str().find("INF") != std::string::npos);
    std::ostringstream again;
    run_quality_experiment(images, {System::Natural}, 7).write_csv(again);
    CHECK(csv.str() == again.str());
}

TEST_CASE("comparison summary booleans match the measured facts") {
    const auto images = small_set();
    const std::vector<System> systems(kAllSystems.begin(), kAllSystems.end());
    const auto cap = run_capacity_experiment(images, systems);
    const auto qual = run_quality_experiment(images, systems, 5);
    const std::string summary = comparison_summary(cap, qual);
    CHECK(summary.find("binary,Yes,Yes") != std::string::npos);
    CHECK(summary.find("new,Yes,No") != std::string::npos);
    CHECK(summary.find("fibonacci,No,No") != std::string::npos);

    const auto other = run_capacity_experiment(
        {{"other", synth_image(SynthKind::UniformRandom, 9, 32, 32)}}, systems);
    CHECK_THROWS_AS(comparison_summary(other, qual), StructuralError);
}

TEST_CASE("PSNR per embedded bit degrades toward higher planes") {
    // higher planes carry larger weights, so at comparable per-bit payload
    // the distortion per bit grows
    const std::vector<NamedImage> images = {
        {"u", synth_image(SynthKind::UniformRandom, 11, 128, 128)}};
    const auto q = run_quality_experiment(images, {System::Binary}, 3);
    double prev = 1e9;
    for (int p = 1; p <= 8; ++p) {
        const auto& r = avg_row(q, System::Binary, p);
        CHECK(r.psnr_db < prev);
        prev = r.psnr_db;
    }
}
