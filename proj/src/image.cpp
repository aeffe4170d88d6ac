#include "pvd/image.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

#include <png.h>

#include "pvd/errors.hpp"
#include "pvd/rng.hpp"

namespace pvd {

namespace {

bool has_suffix(const std::string& s, const char* suffix) {
    const std::size_t n = std::strlen(suffix);
    return s.size() >= n && s.compare(s.size() - n, n, suffix) == 0;
}

// Skips whitespace and '#' comments, then reads one unsigned decimal token.
int read_pgm_int(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c)) throw FormatError("malformed PGM header");
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 20) throw FormatError("PGM header value too large");
        c = in.get();
    }
    if (c != EOF) in.unget();
    return value;
}

GrayImage load_pgm(const std::string& path, std::istream& in) {
    char magic[2] = {};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' || magic[1] != '5')
        throw FormatError(path + ": not a binary PGM (P5) file");
    GrayImage img;
    img.width = read_pgm_int(in);
    img.height = read_pgm_int(in);
    const int maxval = read_pgm_int(in);
    if (img.width <= 0 || img.height <= 0)
        throw FormatError(path + ": zero image dimension");
    if (maxval != 255)
        throw FormatError(path + ": unsupported maxval " +
                          std::to_string(maxval) + " (only 255)");
    in.get(); // single whitespace byte after maxval
    img.data.resize(static_cast<std::size_t>(img.width) * img.height);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.data.size())
        throw FormatError(path + ": truncated pixel data");
    return img;
}

struct PngReadCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngReadCloser() {
        if (png) png_destroy_read_struct(&png, &info, nullptr);
        if (fp) std::fclose(fp);
    }
};

GrayImage load_png(const std::string& path) {
    PngReadCloser c;
    c.fp = std::fopen(path.c_str(), "rb");
    if (!c.fp) throw IoError(path + ": cannot open");
    c.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                   nullptr);
    c.info = png_create_info_struct(c.png);
    if (!c.png || !c.info) throw IoError(path + ": libpng init failed");
    if (setjmp(png_jmpbuf(c.png))) throw FormatError(path + ": corrupt PNG");

    png_init_io(c.png, c.fp);
    png_read_info(c.png, c.info);
    const int color = png_get_color_type(c.png, c.info);
    const int depth = png_get_bit_depth(c.png, c.info);
    if (color != PNG_COLOR_TYPE_GRAY || depth != 8)
        throw FormatError(path +
                          ": only 8-bit single-channel grayscale PNG accepted");
    GrayImage img;
    img.width = static_cast<int>(png_get_image_width(c.png, c.info));
    img.height = static_cast<int>(png_get_image_height(c.png, c.info));
    img.data.resize(static_cast<std::size_t>(img.width) * img.height);
    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y)
        rows[y] = img.data.data() + static_cast<std::size_t>(y) * img.width;
    png_read_image(c.png, rows.data());
    png_read_end(c.png, nullptr);
    return img;
}

struct PngWriteCloser {
    png_structp png = nullptr;
    png_infop info = nullptr;
    std::FILE* fp = nullptr;
    ~PngWriteCloser() {
        if (png) png_destroy_write_struct(&png, &info);
        if (fp) std::fclose(fp);
    }
};

void save_png(const GrayImage& img, const std::string& path) {
    PngWriteCloser c;
    c.fp = std::fopen(path.c_str(), "wb");
    if (!c.fp) throw IoError(path + ": cannot open for writing");
    c.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                    nullptr);
    c.info = png_create_info_struct(c.png);
    if (!c.png || !c.info) throw IoError(path + ": libpng init failed");
    if (setjmp(png_jmpbuf(c.png))) throw IoError(path + ": PNG write failed");

    png_init_io(c.png, c.fp);
    png_set_IHDR(c.png, c.info, img.width, img.height, 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(c.png, c.info);
    std::vector<png_bytep> rows(img.height);
    for (int y = 0; y < img.height; ++y)
        rows[y] = const_cast<png_bytep>(
            img.data.data() + static_cast<std::size_t>(y) * img.width);
    png_write_image(c.png, rows.data());
    png_write_end(c.png, nullptr);
}

void check_image(const GrayImage& img) {
    if (img.width <= 0 || img.height <= 0)
        throw StructuralError("zero image dimension");
    if (img.data.size() != static_cast<std::size_t>(img.width) * img.height)
        throw StructuralError("pixel buffer does not match dimensions");
}

} // namespace

GrayImage load_image(const std::string& path) {
    if (has_suffix(path, ".png")) return load_png(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open");
    return load_pgm(path, in);
}

void save_image(const GrayImage& img, const std::string& path) {
    check_image(img);
    if (has_suffix(path, ".png")) {
        save_png(img, path);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out) throw IoError(path + ": write failed");
}

GrayImage synth_image(SynthKind kind, std::uint64_t seed, int width,
                      int height) {
    if (width <= 0 || height <= 0)
        throw RangeError("synthetic image needs positive dimensions");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.data.resize(static_cast<std::size_t>(width) * height);
    switch (kind) {
    case SynthKind::ConstantZero:
        break;
    case SynthKind::Gradient:
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                img.data[static_cast<std::size_t>(y) * width + x] =
                    static_cast<std::uint8_t>((x + y) % 256);
        break;
    case SynthKind::UniformRandom: {
        SplitMix64 rng(seed);
        for (auto& p : img.data)
            p = static_cast<std::uint8_t>(rng.next() % 256);
        break;
    }
    }
    return img;
}

} // namespace pvd
