#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aidct/arai.hpp"

namespace aidct {

struct Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;   // row-major

    std::uint8_t at(int y, int x) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

// Binary (P5) 8-bit PGM. Malformed files throw std::runtime_error.
Image read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Image& img);

// Raw block files: consecutive 8x8 blocks of little-endian signed 16-bit
// samples, row-major, 128 bytes per block.
std::vector<PixelBlock> read_raw_blocks(const std::string& path);
void write_raw_blocks(const std::string& path, const std::vector<PixelBlock>& blocks);

// Split an image into raster-ordered 8x8 blocks. Dimensions must be
// multiples of 8. Wordlength 8 uses pixels as-is, wordlength 4 keeps the
// high nibble.
std::vector<PixelBlock> blocks_from_image(const Image& img, int wordlength);

}  // namespace aidct
