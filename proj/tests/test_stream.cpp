#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "aidct/harness.hpp"
#include "aidct/stream.hpp"
#include "support/oracles.hpp"

using namespace aidct;

namespace {

std::vector<std::int32_t> serialize(const std::vector<PixelBlock>& blocks) {
    std::vector<std::int32_t> px;
    px.reserve(blocks.size() * 64);
    for (const PixelBlock& b : blocks) {
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) px.push_back(b[r][c]);
        }
    }
    return px;
}

CoeffBlock batch_decode(const PixelBlock& b, const CoefficientDecoder& dec) {
    const EncodedBlock enc = arai_dct_2d(b);
    CoeffBlock out{};
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) out[i][k] = dec.apply(enc[i][k]);
    }
    return out;
}

}  // namespace

TEST_CASE("transpose buffer: identity and constant columns") {
    TransposeBuffer tb;
    // identity pattern: column c has a 1 at row c
    for (int c = 0; c < 8; ++c) {
        Z4Vector8 col{};
        col[c] = Z4Element::from_int(1);
        auto out = tb.push(col);
        if (c < 7) {
            CHECK_FALSE(out.has_value());
        } else {
            REQUIRE(out.has_value());
            for (int u = 0; u < 8; ++u) {
                for (int v = 0; v < 8; ++v) {
                    CHECK((*out)[u][v] == (u == v ? Z4Element::from_int(1) : Z4Element{}));
                }
            }
        }
    }

    // distinct constant per column comes back as that constant per row entry
    for (int c = 0; c < 8; ++c) {
        Z4Vector8 col;
        for (int r = 0; r < 8; ++r) col[r] = Z4Element::from_int(c + 1);
        auto out = tb.push(col);
        if (c == 7) {
            REQUIRE(out.has_value());
            for (int u = 0; u < 8; ++u) {
                for (int v = 0; v < 8; ++v) CHECK((*out)[u][v] == Z4Element::from_int(v + 1));
            }
        }
    }
}

TEST_CASE("transpose buffer equals the mathematical transpose on random data") {
    oracle::Rng rng(0x7b);
    TransposeBuffer tb;
    std::array<Z4Vector8, 8> cols;
    for (int c = 0; c < 8; ++c) {
        for (int r = 0; r < 8; ++r) cols[c][r] = rng.z4(1 << 20);
    }
    std::optional<std::array<Z4Vector8, 8>> got;
    for (int c = 0; c < 8; ++c) got = tb.push(cols[c]);
    REQUIRE(got.has_value());
    for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) CHECK((*got)[u][v] == cols[v][u]);
    }
}

TEST_CASE("stream output is bit-identical to the batch path") {
    for (const CoefficientDecoder& dec :
         {CoefficientDecoder::dempster_decoder(),
          CoefficientDecoder::expansion_decoder(expansion_set_large())}) {
        StreamConfig cfg;
        cfg.clock_hz = 100e6;
        cfg.decoder = dec;
        const std::vector<PixelBlock> blocks = random_blocks(50, 8, 0x57);
        const StreamResult res = run_stream(serialize(blocks), cfg);
        REQUIRE(res.blocks.size() == blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            CHECK(res.blocks[b].index == b);
            const CoeffBlock ref = batch_decode(blocks[b], dec);
            for (int i = 0; i < 8; ++i) {
                for (int k = 0; k < 8; ++k) {
                    CHECK(res.blocks[b].values[i][k] == ref[i][k]);
                }
            }
        }
    }
}

TEST_CASE("stream rejects a partial block") {
    StreamConfig cfg;
    cfg.clock_hz = 1e6;
    const std::vector<std::int32_t> px(100, 0);
    CHECK_THROWS_AS(run_stream(px, cfg), std::invalid_argument);
}

TEST_CASE("rate identities are exact") {
    StreamConfig cfg;
    cfg.clock_hz = 312.402e6;
    const std::vector<std::int32_t> px(64 * 4, 1);
    const TimingReport t = run_stream(px, cfg).timing;
    CHECK(t.block_rate_hz() * 64.0 == t.pixel_rate_hz());   // both are exact scalings
    CHECK(t.block_rate_hz() == cfg.clock_hz / 8.0);
    CHECK(t.pixel_rate_hz() == 8.0 * cfg.clock_hz);
}

TEST_CASE("published clock figures reproduce to four significant figures") {
    auto matches_4sf = [](double got, double expect) {
        const double unit = std::pow(10.0, std::floor(std::log10(std::abs(expect))) - 3);
        return std::abs(got - expect) <= 0.5 * unit;
    };

    StreamConfig cfg;
    cfg.clock_hz = 312.402e6;
    const std::vector<std::int32_t> px(64 * 2, 0);
    TimingReport t = run_stream(px, cfg).timing;
    CHECK(matches_4sf(t.block_rate_hz(), 39.05e6));
    CHECK(matches_4sf(t.frame_rate_hz(1920, 1080), 1205.25));

    cfg.clock_hz = 307.787e6;
    t = run_stream(px, cfg).timing;
    CHECK(matches_4sf(t.frame_rate_hz(1920, 1080), 1187.35));

    cfg.clock_hz = 8e6;
    t = run_stream(px, cfg).timing;
    CHECK(t.block_rate_hz() == 1e6);

    CHECK_THROWS_AS(t.frame_rate_hz(100, 80), std::invalid_argument);
}

TEST_CASE("latency is constant per block in steady state") {
    StreamConfig cfg;
    cfg.clock_hz = 10e6;
    const std::vector<PixelBlock> blocks = random_blocks(12, 8, 0x1a7);
    const StreamResult res = run_stream(serialize(blocks), cfg);

    // reconstruct per-block completion from a second run with one block
    // appended: every block slot must advance by exactly 8 ticks
    std::vector<PixelBlock> more = blocks;
    more.push_back(random_block(0x1a7, 99, 8));
    const StreamResult res2 = run_stream(serialize(more), cfg);
    CHECK(res2.timing.ticks_total - res.timing.ticks_total == 8);
    CHECK(res.timing.latency_ticks == res2.timing.latency_ticks);
    CHECK(res.timing.ticks_total ==
          8 * (res.timing.blocks - 1) + res.timing.latency_ticks);
}
