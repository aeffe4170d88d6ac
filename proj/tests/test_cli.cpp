#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "pvd/image.hpp"

using namespace pvd;

namespace {

std::string cli() {
    const char* bin = std::getenv("PVDSTEGO_BIN");
    REQUIRE_MESSAGE(bin, "PVDSTEGO_BIN must point at the pvdstego binary");
    return bin;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("pvd_cli_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

int run(const std::string& args) {
    const int status = std::system((cli() + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture(const std::string& args) {
    const std::string cmd = cli() + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

} // namespace

TEST_CASE("table subcommand") {
    CHECK(capture("table binary 5 5") == "5\t00000101\n");
    const std::string fib = capture("table fibonacci 0 255");
    std::size_t rows = 0;
    std::istringstream lines(fib);
    std::string line;
    while (std::getline(lines, line)) {
        ++rows;
        const std::string bits = line.substr(line.find('\t') + 1);
        CHECK(bits.find("11") == std::string::npos); // Zeckendorf scan
    }
    CHECK(rows == 256);
    CHECK(run("table octal 0 10") == 64);
}

TEST_CASE("embed/extract round trip through files") {
    TempDir tmp;
    save_image(synth_image(SynthKind::UniformRandom, 3, 128, 128),
               tmp.file("cover.pgm"));
    spit(tmp.file("msg.bin"), "attack at dawn");
    CHECK(run("embed --cover " + tmp.file("cover.pgm") + " --message " +
              tmp.file("msg.bin") + " --out " + tmp.file("stego.pgm") +
              " --system new --plane 1 --key 0xDEADBEEF") == 0);
    CHECK(run("extract --stego " + tmp.file("stego.pgm") + " --out " +
              tmp.file("recovered.bin") +
              " --system new --plane 1 --key 0xDEADBEEF") == 0);
    CHECK(slurp(tmp.file("recovered.bin")) == "attack at dawn");
}

TEST_CASE("embed prints machine-readable stats") {
    TempDir tmp;
    save_image(synth_image(SynthKind::UniformRandom, 3, 64, 64),
               tmp.file("cover.pgm"));
    spit(tmp.file("msg.bin"), "x");
    const std::string out =
        capture("embed --cover " + tmp.file("cover.pgm") + " --message " +
                tmp.file("msg.bin") + " --out " + tmp.file("s.pgm") +
                " --system binary --plane 1 --key 1");
    CHECK(out.find("bits_embedded=40\n") != std::string::npos); // 32 + 8
    CHECK(out.find("pixels_skipped=0\n") != std::string::npos);
    CHECK(out.find("capacity=4096\n") != std::string::npos);
    CHECK(out.find("psnr_db=") != std::string::npos);
}

TEST_CASE("exit codes") {
    TempDir tmp;
    save_image(synth_image(SynthKind::UniformRandom, 1, 16, 16),
               tmp.file("c.pgm"));
    spit(tmp.file("m.bin"), "hi");
    // plane out of range -> usage
    CHECK(run("embed --cover " + tmp.file("c.pgm") + " --message " +
              tmp.file("m.bin") + " --out " + tmp.file("s.pgm") +
              " --system binary --plane 9 --key 1") == 64);
    // capacity exceeded -> domain error
    spit(tmp.file("big.bin"), std::string(4096, 'z'));
    CHECK(run("embed --cover " + tmp.file("c.pgm") + " --message " +
              tmp.file("big.bin") + " --out " + tmp.file("s.pgm") +
              " --system binary --plane 1 --key 1") == 2);
    // raw extraction without --raw-length -> usage
    CHECK(run("extract --stego " + tmp.file("c.pgm") + " --out " +
              tmp.file("o.bin") + " --system binary --plane 1 --key 1"
              " --framing raw") == 64);
    // missing cover -> I/O
    CHECK(run("embed --cover " + tmp.file("nope.pgm") + " --message " +
              tmp.file("m.bin") + " --out " + tmp.file("s.pgm") +
              " --system binary --plane 1 --key 1") == 74);
    // empty image directory -> no input
    std::filesystem::create_directories(tmp.file("empty"));
    CHECK(run("capacity --images " + tmp.file("empty")) == 66);
}

TEST_CASE("experiment subcommands are byte-deterministic") {
    TempDir tmp;
    const std::string args =
        "--synth uniform:7:64x64 --count 3 --systems binary,new,natural";
    CHECK(run("capacity " + args + " --out " + tmp.file("cap1.csv")) == 0);
    CHECK(run("capacity " + args + " --out " + tmp.file("cap2.csv")) == 0);
    CHECK(slurp(tmp.file("cap1.csv")) == slurp(tmp.file("cap2.csv")));

    CHECK(run("quality " + args + " --key 42 --out " + tmp.file("q1.csv")) == 0);
    CHECK(run("quality " + args + " --key 42 --out " + tmp.file("q2.csv")) == 0);
    const std::string q = slurp(tmp.file("q1.csv"));
    CHECK(q == slurp(tmp.file("q2.csv")));
    CHECK(q.substr(0, q.find('\n')) ==
          "image,system,plane,bits_embedded,mse,psnr_db");
    CHECK(q.find("AVG,") != std::string::npos);

    // binary only: 8 planes x 3 images + 8 AVG rows
    CHECK(run("quality --synth uniform:7:32x32 --count 3 --systems binary"
              " --key 1 --out " + tmp.file("b.csv")) == 0);
    const std::string b = slurp(tmp.file("b.csv"));
    std::size_t lines = 0;
    for (char ch : b) lines += ch == '\n';
    CHECK(lines == 1 + 3 * 8 + 8);
}
