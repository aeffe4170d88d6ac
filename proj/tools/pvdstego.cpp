// pvdstego: embed/extract secret bits in 8-bit grayscale images using seven
// pixel-value decomposition systems, plus capacity/quality experiment drivers.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pvd/analysis.hpp"
#include "pvd/errors.hpp"
#include "pvd/image.hpp"
#include "pvd/numsys.hpp"
#include "pvd/stego.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNoInput = 66;
constexpr int kExitIo = 74;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

pvd::System parse_system_or_throw(const std::string& name) {
    auto s = pvd::parse_system(name);
    if (!s)
        throw UsageError("unknown system '" + name +
                         "' (binary|fibonacci|prime|natural|lucas|cf|new)");
    return *s;
}

std::uint64_t parse_key(const std::string& text) {
    try {
        std::size_t pos = 0;
        const std::uint64_t key = std::stoull(text, &pos, 0); // decimal or 0x
        if (pos != text.size()) throw UsageError("trailing junk in key");
        return key;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("key must be a decimal or 0x-hex 64-bit integer");
    }
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw pvd::IoError(path + ": cannot open");
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pvd::IoError(path + ": cannot open for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw pvd::IoError(path + ": write failed");
}

// "KIND:SEED:WxH" with KIND in zero|gradient|uniform.
struct SynthSpec {
    pvd::SynthKind kind;
    std::uint64_t seed;
    int width, height;
};

SynthSpec parse_synth(const std::string& text) {
    std::istringstream in(text);
    std::string kind, seed, dims;
    if (!std::getline(in, kind, ':') || !std::getline(in, seed, ':') ||
        !std::getline(in, dims))
        throw UsageError("--synth expects KIND:SEED:WxH");
    SynthSpec spec{};
    if (kind == "zero") spec.kind = pvd::SynthKind::ConstantZero;
    else if (kind == "gradient") spec.kind = pvd::SynthKind::Gradient;
    else if (kind == "uniform") spec.kind = pvd::SynthKind::UniformRandom;
    else throw UsageError("synth kind must be zero|gradient|uniform");
    spec.seed = parse_key(seed);
    const auto x = dims.find('x');
    if (x == std::string::npos) throw UsageError("--synth dims must be WxH");
    try {
        spec.width = std::stoi(dims.substr(0, x));
        spec.height = std::stoi(dims.substr(x + 1));
    } catch (const std::exception&) {
        throw UsageError("--synth dims must be WxH");
    }
    if (spec.width <= 0 || spec.height <= 0)
        throw UsageError("--synth dims must be positive");
    return spec;
}

std::vector<pvd::NamedImage> gather_images(const std::string& dir,
                                           const std::string& synth,
                                           int count) {
    std::vector<pvd::NamedImage> images;
    if (!synth.empty()) {
        const SynthSpec spec = parse_synth(synth);
        for (int i = 0; i < count; ++i) {
            const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
            std::string kind_name = synth.substr(0, synth.find(':'));
            images.push_back({kind_name + "-" + std::to_string(seed),
                              pvd::synth_image(spec.kind, seed, spec.width,
                                               spec.height)});
        }
    } else if (!dir.empty()) {
        namespace fs = std::filesystem;
        std::vector<fs::path> paths;
        for (const auto& entry : fs::directory_iterator(dir)) {
            const auto ext = entry.path().extension().string();
            if (entry.is_regular_file() && (ext == ".pgm" || ext == ".png"))
                paths.push_back(entry.path());
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths)
            images.push_back({p.filename().string(),
                              pvd::load_image(p.string())});
    }
    return images;
}

std::vector<pvd::System> parse_systems_csv(const std::string& csv) {
    if (csv.empty())
        return {pvd::kAllSystems.begin(), pvd::kAllSystems.end()};
    std::vector<pvd::System> out;
    std::istringstream in(csv);
    std::string name;
    while (std::getline(in, name, ','))
        out.push_back(parse_system_or_throw(name));
    if (out.empty()) throw UsageError("--systems list is empty");
    return out;
}

void write_report(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw pvd::IoError(out_path + ": cannot open for writing");
    out << text;
    if (!out) throw pvd::IoError(out_path + ": write failed");
}

int run(int argc, char** argv) {
    CLI::App app{"Bit-plane steganography over pixel-value decomposition "
                 "number systems"};
    app.require_subcommand(1);

    std::string cover, message, stego, out, system_name_arg = "new";
    std::string key_text = "0", framing_text = "lengthprefixed";
    std::string images_dir, synth_spec, systems_csv, table_system;
    int plane = 1, count = 1, table_lo = 0, table_hi = 255;
    std::optional<std::uint64_t> raw_length;
    std::optional<std::size_t> payload;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--system", system_name_arg,
                        "binary|fibonacci|prime|natural|lucas|cf|new");
        cmd->add_option("--plane", plane, "1-based bit-plane, 1 = LSB");
        cmd->add_option("--key", key_text, "64-bit key, decimal or 0x-hex");
        cmd->add_option("--framing", framing_text, "lengthprefixed|raw");
    };

    auto* cmd_embed = app.add_subcommand("embed", "Embed a message file");
    cmd_embed->add_option("--cover", cover)->required();
    cmd_embed->add_option("--message", message)->required();
    cmd_embed->add_option("--out", out)->required();
    add_common(cmd_embed);

    auto* cmd_extract = app.add_subcommand("extract", "Extract a message");
    cmd_extract->add_option("--stego", stego)->required();
    cmd_extract->add_option("--out", out)->required();
    cmd_extract->add_option("--raw-length", raw_length,
                            "message bit length (raw framing)");
    add_common(cmd_extract);

    auto* cmd_capacity =
        app.add_subcommand("capacity", "Per-plane payload capacity report");
    cmd_capacity->add_option("--images", images_dir, "directory of covers");
    cmd_capacity->add_option("--synth", synth_spec, "KIND:SEED:WxH");
    cmd_capacity->add_option("--count", count, "number of synthetic covers");
    cmd_capacity->add_option("--systems", systems_csv, "comma-separated list");
    cmd_capacity->add_option("--out", out, "CSV path (default stdout)");

    auto* cmd_quality =
        app.add_subcommand("quality", "Per-plane stego quality (PSNR) report");
    cmd_quality->add_option("--images", images_dir, "directory of covers");
    cmd_quality->add_option("--synth", synth_spec, "KIND:SEED:WxH");
    cmd_quality->add_option("--count", count, "number of synthetic covers");
    cmd_quality->add_option("--systems", systems_csv, "comma-separated list");
    cmd_quality->add_option("--key", key_text, "64-bit key for PRNG streams");
    cmd_quality->add_option("--payload", payload,
                            "fixed payload bits per cell (fair comparison)");
    cmd_quality->add_option("--out", out, "CSV path (default stdout)");

    auto* cmd_table =
        app.add_subcommand("table", "Print canonical decompositions");
    cmd_table->add_option("system", table_system)->required();
    cmd_table->add_option("lo", table_lo);
    cmd_table->add_option("hi", table_hi);

    CLI11_PARSE(app, argc, argv);

    pvd::Framing framing;
    if (framing_text == "lengthprefixed") framing = pvd::Framing::LengthPrefixed;
    else if (framing_text == "raw") framing = pvd::Framing::Raw;
    else throw UsageError("framing must be lengthprefixed|raw");

    if (app.got_subcommand(cmd_embed)) {
        const pvd::EmbedParams params{parse_system_or_throw(system_name_arg),
                                      plane, parse_key(key_text), framing};
        const pvd::GrayImage cover_img = pvd::load_image(cover);
        const pvd::BitVec bits = pvd::bytes_to_bits(read_file(message));
        const pvd::EmbedOutcome outcome =
            pvd::embed_message(cover_img, bits, params);
        pvd::save_image(outcome.stego, out);
        std::cout << "bits_embedded=" << outcome.bits_embedded << '\n'
                  << "pixels_skipped=" << outcome.pixels_skipped << '\n'
                  << "capacity="
                  << pvd::capacity(cover_img, params.plane, params.system)
                  << '\n';
        const double q = pvd::psnr(cover_img, outcome.stego);
        std::cout << "psnr_db=" << (std::isinf(q) ? "INF" : std::to_string(q))
                  << '\n';
        return 0;
    }

    if (app.got_subcommand(cmd_extract)) {
        const pvd::EmbedParams params{parse_system_or_throw(system_name_arg),
                                      plane, parse_key(key_text), framing};
        if (framing == pvd::Framing::Raw && !raw_length)
            throw UsageError("raw framing requires --raw-length");
        const pvd::GrayImage stego_img = pvd::load_image(stego);
        std::optional<std::size_t> len;
        if (raw_length) len = static_cast<std::size_t>(*raw_length);
        const pvd::BitVec bits = pvd::extract_message(stego_img, params, len);
        write_file(out, pvd::bits_to_bytes(bits));
        std::cout << "bits_extracted=" << bits.size() << '\n';
        return 0;
    }

    if (app.got_subcommand(cmd_capacity) || app.got_subcommand(cmd_quality)) {
        const auto images = gather_images(images_dir, synth_spec, count);
        if (images.empty()) {
            std::cerr << "error: no input images\n";
            return kExitNoInput;
        }
        const auto systems = parse_systems_csv(systems_csv);
        std::ostringstream csv;
        if (app.got_subcommand(cmd_capacity)) {
            pvd::run_capacity_experiment(images, systems).write_csv(csv);
        } else {
            if (payload)
                std::cerr << "fixed-payload mode: " << *payload
                          << " bits per cell\n";
            pvd::run_quality_experiment(images, systems, parse_key(key_text),
                                        payload)
                .write_csv(csv);
        }
        write_report(out, csv.str());
        return 0;
    }

    if (app.got_subcommand(cmd_table)) {
        const pvd::System s = parse_system_or_throw(table_system);
        for (const auto& [value, bits] : pvd::build_table(s, table_lo, table_hi))
            std::cout << value << '\t' << bits << '\n';
        return 0;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pvd::RangeError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pvd::StructuralError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const pvd::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pvd::FramingError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pvd::TruncationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const pvd::FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const pvd::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
