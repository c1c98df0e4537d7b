#include "aidct/pgm.hpp"

#include <fstream>
#include <stdexcept>

namespace aidct {

namespace {

// Skips whitespace and '#' comment lines, then reads one unsigned integer.
int read_header_int(std::istream& is) {
    int c = is.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = is.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = is.get();
    }
    if (c == EOF || !std::isdigit(c)) throw std::runtime_error("malformed PGM header");
    int value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 30) throw std::runtime_error("malformed PGM header");
        c = is.get();
    }
    return value;
}

}  // namespace

Image read_pgm(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    char m0 = 0, m1 = 0;
    is.get(m0);
    is.get(m1);
    if (m0 != 'P' || m1 != '5') throw std::runtime_error("'" + path + "' is not a binary (P5) PGM");
    Image img;
    img.width = read_header_int(is);
    img.height = read_header_int(is);
    const int maxval = read_header_int(is);
    if (img.width <= 0 || img.height <= 0) throw std::runtime_error("bad PGM dimensions");
    if (maxval <= 0 || maxval > 255) throw std::runtime_error("only 8-bit PGM is supported");
    // single whitespace byte separates header from raster
    img.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
    is.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
    if (is.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
        throw std::runtime_error("truncated PGM raster in '" + path + "'");
    }
    return img;
}

void write_pgm(const std::string& path, const Image& img) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write '" + path + "'");
    os << "P5\n" << img.width << " " << img.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(img.pixels.data()),
             static_cast<std::streamsize>(img.pixels.size()));
    if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<PixelBlock> read_raw_blocks(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<char> bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    if (bytes.empty() || bytes.size() % 128 != 0) {
        throw std::runtime_error("'" + path + "' is not a whole number of 8x8 int16 blocks");
    }
    std::vector<PixelBlock> blocks(bytes.size() / 128);
    std::size_t pos = 0;
    for (PixelBlock& b : blocks) {
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) {
                const std::uint16_t lo = static_cast<std::uint8_t>(bytes[pos]);
                const std::uint16_t hi = static_cast<std::uint8_t>(bytes[pos + 1]);
                pos += 2;
                b[r][c] = static_cast<std::int16_t>(lo | (hi << 8));
            }
        }
    }
    return blocks;
}

void write_raw_blocks(const std::string& path, const std::vector<PixelBlock>& blocks) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write '" + path + "'");
    for (const PixelBlock& b : blocks) {
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) {
                const auto v = static_cast<std::int16_t>(b[r][c]);
                const char bytes[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
                os.write(bytes, 2);
            }
        }
    }
    if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<PixelBlock> blocks_from_image(const Image& img, int wordlength) {
    if (img.width % 8 != 0 || img.height % 8 != 0) {
        throw std::runtime_error("image dimensions must be multiples of 8");
    }
    if (wordlength != 4 && wordlength != 8) {
        throw std::runtime_error("wordlength must be 4 or 8");
    }
    const int shift = 8 - wordlength;
    std::vector<PixelBlock> blocks;
    blocks.reserve(static_cast<std::size_t>(img.width / 8) * (img.height / 8));
    for (int by = 0; by < img.height / 8; ++by) {
        for (int bx = 0; bx < img.width / 8; ++bx) {
            PixelBlock b{};
            for (int r = 0; r < 8; ++r) {
                for (int c = 0; c < 8; ++c) {
                    b[r][c] = img.at(by * 8 + r, bx * 8 + c) >> shift;
                }
            }
            blocks.push_back(b);
        }
    }
    return blocks;
}

}  // namespace aidct
