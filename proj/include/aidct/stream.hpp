#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aidct/frs.hpp"

namespace aidct {

using CoeffBlock = std::array<std::array<double, 8>, 8>;

/**
 * The transpose stage: a chain of eight clocked column registers. One
 * column-pass output vector is shifted in per clock; after every eighth
 * load the read-out taps present the transpose of the last eight columns.
 */
class TransposeBuffer {
public:
    // Returns the transposed block (entry [u] = row u of the loaded
    // columns) on every eighth push, otherwise nothing.
    std::optional<std::array<Z4Vector8, 8>> push(const Z4Vector8& column);

    int fill() const { return fill_; }

private:
    std::array<Z4Vector8, 8> fifo_{};
    int fill_ = 0;
};

struct StreamConfig {
    double clock_hz = 0.0;            // core clock; pixels arrive at 8x this rate
    int wordlength = 8;
    CoefficientDecoder decoder = CoefficientDecoder::dempster_decoder();
};

struct TimingReport {
    double clock_hz = 0.0;
    int wordlength = 8;
    std::string frs_id;
    std::uint64_t blocks = 0;
    std::uint64_t ticks_total = 0;      // core clock periods consumed
    std::uint64_t latency_ticks = 0;    // first pixel in -> block out, steady state

    double block_rate_hz() const { return clock_hz / 8.0; }
    double pixel_rate_hz() const { return clock_hz * 8.0; }
    double frame_rate_hz(int width, int height) const;
};

struct StreamBlock {
    std::size_t index = 0;
    CoeffBlock values{};
};

struct StreamResult {
    std::vector<StreamBlock> blocks;
    TimingReport timing;
};

/**
 * Cycle-approximate run of the streaming pipeline: the serial pixel stream
 * is decimated into eight parallel streams (one block row per tick), blocks
 * feed the column core one column per tick, pass through the transpose
 * buffer, then the four row cores, and finally the configured output stage.
 * Pixels are raster order within stacked 8x8 blocks; the count must be a
 * multiple of 64.
 */
StreamResult run_stream(std::span<const std::int32_t> pixels, const StreamConfig& cfg);

}  // namespace aidct
