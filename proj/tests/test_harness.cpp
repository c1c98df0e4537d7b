#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aidct/harness.hpp"
#include "support/oracles.hpp"

using namespace aidct;

TEST_CASE("reference DCT basics") {
    RealBlock ones;
    for (auto& row : ones) row.fill(1.0);
    const RealBlock t = dct_2d_reference(ones);
    CHECK(t[0][0] == doctest::Approx(8.0).epsilon(1e-12));
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) {
            if (i || k) CHECK(std::abs(t[i][k]) < 1e-12);
        }
    }

    RealBlock zero{};
    const RealBlock tz = dct_2d_reference(zero);
    for (const auto& row : tz) {
        for (double v : row) CHECK(v == 0.0);
    }
}

TEST_CASE("reference DCT is orthonormal: transform round-trip") {
    oracle::Rng rng(0xabc);
    const PixelBlock b = rng.block(8);
    const RealBlock a = to_real(b);
    const RealBlock t = dct_2d_reference(a);

    // apply the transpose transform rows/cols manually via the oracle matrix
    RealBlock back{};
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            double acc = 0.0;
            for (int i = 0; i < 8; ++i) {
                for (int k = 0; k < 8; ++k) {
                    acc += t[i][k] * oracle::dct_entry(i, r) * oracle::dct_entry(k, c);
                }
            }
            back[r][c] = acc;
        }
    }
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) CHECK(back[r][c] == doctest::Approx(a[r][c]).epsilon(1e-12));
    }

    // and it matches the independent cosine-sum oracle
    const RealBlock oracle_t = oracle::dct_2d(a);
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) CHECK(t[i][k] == doctest::Approx(oracle_t[i][k]).epsilon(1e-11));
    }
}

TEST_CASE("random blocks are deterministic and in range") {
    const auto a = random_blocks(10, 8, 42);
    const auto b = random_blocks(10, 8, 42);
    CHECK(a == b);
    const auto c = random_blocks(10, 4, 42);
    for (const PixelBlock& blk : c) {
        for (const auto& row : blk) {
            for (int v : row) {
                CHECK(v >= 0);
                CHECK(v <= 15);
            }
        }
    }
    CHECK(random_block(7, 3, 8) == random_block(7, 3, 8));
    CHECK_FALSE(random_block(7, 3, 8) == random_block(8, 3, 8));
}

TEST_CASE("exact decode control scores 100% at every tolerance") {
    DesignConfig d;
    d.name = "control";
    d.wordlength = 8;
    d.decoder = CoefficientDecoder::exact_decoder();
    const auto blocks = random_blocks(40, 8, 0xc0de);
    const SuccessReport rep = measure_success_serial(blocks, d, default_tolerances_pct());
    for (double rate : rep.success_rate_pct) CHECK(rate == 100.0);
    CHECK(rep.max_abs_err() < 1e-9);
}

TEST_CASE("success rates are monotone in the tolerance") {
    const auto blocks = random_blocks(150, 8, 0x33);
    for (const DesignConfig& d : stock_designs()) {
        if (d.wordlength != 8) continue;
        const SuccessReport rep = measure_success_serial(blocks, d, default_tolerances_pct());
        for (std::size_t t = 1; t < rep.success_rate_pct.size(); ++t) {
            // default tolerances are ordered loosest to tightest
            CHECK(rep.success_rate_pct[t] <= rep.success_rate_pct[t - 1]);
        }
    }
}

TEST_CASE("parallel measurement equals the serial reference") {
    const auto blocks = random_blocks(120, 8, 0x99);
    DesignConfig d;
    d.name = "design-2";
    d.wordlength = 8;
    d.decoder = CoefficientDecoder::dempster_decoder();
    const SuccessReport par = measure_success(blocks, d, default_tolerances_pct());
    const SuccessReport ser = measure_success_serial(blocks, d, default_tolerances_pct());
    REQUIRE(par.success_rate_pct.size() == ser.success_rate_pct.size());
    for (std::size_t t = 0; t < par.success_rate_pct.size(); ++t) {
        CHECK(par.success_rate_pct[t] == ser.success_rate_pct[t]);   // integer tallies
    }
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) {
            CHECK(par.per_coefficient[i][k].within == ser.per_coefficient[i][k].within);
            CHECK(par.per_coefficient[i][k].max_abs_err == ser.per_coefficient[i][k].max_abs_err);
            CHECK(par.per_coefficient[i][k].sum_abs_err ==
                  doctest::Approx(ser.per_coefficient[i][k].sum_abs_err).epsilon(1e-12));
        }
    }
}

TEST_CASE("multi-design measurement matches single-design runs") {
    const auto blocks = random_blocks(60, 8, 0x77);
    std::vector<DesignConfig> designs;
    for (const DesignConfig& d : stock_designs()) {
        if (d.wordlength == 8) designs.push_back(d);
    }
    const auto multi = measure_success_multi(blocks, designs, default_tolerances_pct());
    REQUIRE(multi.size() == designs.size());
    for (std::size_t i = 0; i < designs.size(); ++i) {
        const SuccessReport single =
            measure_success_serial(blocks, designs[i], default_tolerances_pct());
        CHECK(multi[i].success_rate_pct == single.success_rate_pct);
    }
}

TEST_CASE("noise decoupling: switching one coefficient's decoder changes nothing else") {
    const auto blocks = random_blocks(25, 8, 0xdec0);
    const CoefficientDecoder frs = CoefficientDecoder::dempster_decoder();
    const CoefficientDecoder exact = CoefficientDecoder::exact_decoder();
    const DecodeContext ctx(160);
    for (const PixelBlock& b : blocks) {
        const EncodedBlock enc = arai_dct_2d(b);
        CoeffBlock all_frs{};
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 8; ++k) all_frs[i][k] = frs.apply(enc[i][k]);
        }
        // replace (3,5) by the exact decode; all other 63 must be bit-identical
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 8; ++k) {
                const double v = (i == 3 && k == 5) ? exact.apply(enc[i][k], &ctx)
                                                    : frs.apply(enc[i][k]);
                if (i == 3 && k == 5) {
                    CHECK(v != all_frs[i][k]);   // it really did change
                } else {
                    CHECK(v == all_frs[i][k]);
                }
            }
        }
    }
}

TEST_CASE("complexity report") {
    const ComplexityReport small =
        complexity_report(CoefficientDecoder::expansion_decoder(expansion_set_small()));
    CHECK(small.cse_additions == 5);
    const ComplexityReport large =
        complexity_report(CoefficientDecoder::expansion_decoder(expansion_set_large()));
    CHECK(large.cse_additions == 8);
    CHECK(large.total_additions ==
          large.regroup_additions + large.cse_additions + large.booth_additions + 1);
    CHECK(large.booth_additions == 6);
    CHECK(small.booth_additions == 4);

    const ComplexityReport demp = complexity_report(CoefficientDecoder::dempster_decoder());
    CHECK(demp.program_additions == 44);
    CHECK(demp.combine_additions == 15);
    CHECK(demp.total_additions == 59);
    CHECK(demp.adder_bits > 0);

    CHECK(program_for(8).addition_count() == 0);
}

TEST_CASE("csv and json report serialization") {
    const auto blocks = random_blocks(10, 8, 1);
    DesignConfig d;
    d.name = "design-2";
    d.wordlength = 8;
    d.decoder = CoefficientDecoder::dempster_decoder();
    const double tols[] = {1.0, 0.1};
    const SuccessReport rep = measure_success_serial(blocks, d, tols);

    std::ostringstream csv;
    const SuccessReport reps[] = {rep};
    write_success_csv(csv, reps);
    const std::string text = csv.str();
    CHECK(text.find("design,frs,wordlength,blocks,tolerance_pct,success_rate_pct") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);   // header + 2 tolerance rows
    CHECK(text.find("design-2,dempster,8,10,1,") != std::string::npos);

    const std::string json = success_reports_json(reps);
    CHECK(json.find("\"design\": \"design-2\"") != std::string::npos);
    CHECK(json.find("\"per_coefficient\"") != std::string::npos);
}
