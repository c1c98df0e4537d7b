#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aidct/frs.hpp"
#include "aidct/stream.hpp"

namespace aidct {

// Orthonormal 2-D DCT-II of an 8x8 block in double precision.
RealBlock dct_2d_reference(const RealBlock& block);
RealBlock to_real(const PixelBlock& block);

// Deterministic uniform blocks over the L-bit range [0, 2^L - 1]; block i
// depends only on (seed, i), so generation order does not matter.
PixelBlock random_block(std::uint64_t seed, std::uint64_t index, int wordlength);
std::vector<PixelBlock> random_blocks(std::size_t count, int wordlength, std::uint64_t seed);

struct DesignConfig {
    std::string name;
    int wordlength = 8;
    CoefficientDecoder decoder;
};

// Relative tolerance is undefined against a zero reference; below this
// magnitude a coefficient counts as a success iff |out| stays under the
// absolute floor.
inline constexpr double kZeroReferenceEps = 1e-9;
inline constexpr double kZeroReferenceFloor = 1e-3;

struct CoefficientStats {
    double max_abs_err = 0.0;
    double sum_abs_err = 0.0;
    std::vector<std::uint64_t> within;   // per tolerance
};

struct SuccessReport {
    std::string design;
    std::string frs_id;
    int wordlength = 8;
    std::uint64_t block_count = 0;
    std::vector<double> tolerances_pct;
    std::vector<double> success_rate_pct;                       // per tolerance
    std::array<std::array<CoefficientStats, 8>, 8> per_coefficient{};

    double mean_abs_err(int i, int k) const {
        return block_count == 0 ? 0.0 : per_coefficient[i][k].sum_abs_err / static_cast<double>(block_count);
    }
    double max_abs_err() const;
};

/**
 * Runs the exact pipeline plus the configured output stage over the blocks
 * and scores every coefficient against the double-precision reference.
 * Expansion outputs always get 1/alpha applied here, and every output is
 * divided by s[i]*s[k], since the reference is the unscaled orthonormal DCT.
 */
SuccessReport measure_success(std::span<const PixelBlock> blocks, const DesignConfig& design,
                              std::span<const double> tolerances_pct);

// Single-threaded reference for the kernel above; integer tallies agree
// exactly, error sums up to summation order.
SuccessReport measure_success_serial(std::span<const PixelBlock> blocks,
                                     const DesignConfig& design,
                                     std::span<const double> tolerances_pct);

// Several output stages scored against one shared transform pass.
std::vector<SuccessReport> measure_success_multi(std::span<const PixelBlock> blocks,
                                                 std::span<const DesignConfig> designs,
                                                 std::span<const double> tolerances_pct);

// The seven tolerance levels of the accuracy study, in percent.
std::span<const double> default_tolerances_pct();

// The six stock designs: Dempster-Macleod, expansion {12,5,13} and
// expansion {437,181,473}, each at wordlengths 4 and 8.
std::vector<DesignConfig> stock_designs();

struct ComplexityReport {
    std::string frs_id;
    int input_bits = 0;
    int regroup_additions = 0;   // channel regrouping (expansion only)
    int cse_additions = 0;       // factored integer-combination stage
    int booth_additions = 0;     // alpha multiply
    int program_additions = 0;   // shift-add constant multipliers (Dempster only)
    int combine_additions = 0;   // final summations
    int total_additions = 0;
    int adder_bits = 0;          // sum of adder widths at input_bits
};

// Additions executed per coefficient by the configured output stage, plus an
// adder-width estimate at the stated input coordinate width.
ComplexityReport complexity_report(const CoefficientDecoder& decoder, int input_bits = 16);

// One CSV row per design x tolerance.
void write_success_csv(std::ostream& os, std::span<const SuccessReport> reports);
std::string success_reports_json(std::span<const SuccessReport> reports);
std::string timing_report_json(const TimingReport& timing, int frame_width, int frame_height);

}  // namespace aidct
