#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aidct/arai.hpp"

namespace aidct {

// Two's-complement value scaled by 2^frac_bits.
struct FixedPoint {
    std::int64_t raw = 0;
    int frac_bits = 0;

    double to_double() const { return static_cast<double>(raw) / static_cast<double>(std::int64_t{1} << frac_bits); }

    // Round half away from zero to a coarser fraction width.
    FixedPoint rounded(int new_frac_bits) const;
};

// One straight-line instruction: dst = sign1*(src1 << shift1) [+ sign2*(src2 << shift2)].
// Register 0 holds the input x; v1.. are 1-based; signs are +1/-1.
struct MultiplierStep {
    int dst;
    int src1; int shift1; int sign1;
    int src2; int shift2; int sign2;   // src2 < 0: single-term step (pure shift)
};

/**
 * Shift-add program computing y = m*x for a fixed integer m, with the
 * minimal two-input adder chains used by the reconstruction circuits.
 * At most kMaxRegisters registers including the input x.
 */
struct FastMultiplierProgram {
    static constexpr int kMaxRegisters = 8;

    std::int64_t constant = 0;
    std::vector<MultiplierStep> steps;
    int output = 0;

    std::int64_t run(std::int64_t x) const;
    int addition_count() const;                    // steps with two operands
    std::string to_text() const;                   // "m: v1 = ...; y = ..."
    static FastMultiplierProgram parse(const std::string& line);
};

// The eight programs used by the reconstruction step
// (m in {669, 2217, 181, 3135, 473, 437, 2399, 8}).
const std::vector<FastMultiplierProgram>& multiplier_table();
const FastMultiplierProgram& program_for(std::int64_t m);
std::string multiplier_table_text();
std::vector<FastMultiplierProgram> parse_multiplier_table(const std::string& text);

// Sum of adder widths over a program's two-operand steps, with the input
// register input_bits wide and each result one bit wider than its operands.
int program_adder_bits(const FastMultiplierProgram& p, int input_bits);

// Dyadic rational n / 2^shift.
struct DyadicConstant {
    std::int64_t numerator = 0;
    int shift = 0;
    double value() const { return static_cast<double>(numerator) / static_cast<double>(std::int64_t{1} << shift); }
};

/**
 * Closest 12-bit-numerator approximations of the basis products that are not
 * powers of two, plus the exact 8:
 *
 *   z1 ~ 669/2^8, z2 ~ 2217/2^11, z1^2 ~ 437/2^6, z2^2 ~ 2399/2^11,
 *   z1*z2 ~ 181/2^6, z1*z2^2 ~ 3135/2^10, z1^2*z2 ~ 473/2^6, z1^2*z2^2 = 8.
 */
struct TwelveBitConstants {
    DyadicConstant z1{669, 8};
    DyadicConstant z2{2217, 11};
    DyadicConstant z1_sq{437, 6};
    DyadicConstant z2_sq{2399, 11};
    DyadicConstant z1z2{181, 6};
    DyadicConstant z1z2_sq{3135, 10};
    DyadicConstant z1sq_z2{473, 6};
    DyadicConstant eight{8, 0};
};

const TwelveBitConstants& twelve_bit_constants();

// Approximation of basis(p)*basis(q) used for the doubly-encoded term [q][p];
// [0][0] is the exact 1/2^0.
const DyadicConstant& frs_constant(int q, int p);

// Internal scale of the reconstruction arithmetic: 2^11 covers the finest
// constant shift, so everything up to the final descaling stays integer.
inline constexpr int kFrsFracBits = 11;

/**
 * Reconstruction by per-term dyadic constants: every numerator
 * multiplication runs through its shift-add program, terms are aligned at
 * 2^-11 and summed exactly. Only the constants themselves approximate.
 */
FixedPoint frs_dempster(const DoublyEncoded& x);

/**
 * Exact regrouping of a doubly-encoded coefficient onto {1, z1, z2, z1*z2},
 * using the same ring identities as the full product. The result decodes to
 * the same real number; only shifts by 1..3 and adds are involved.
 */
Z4Element compute_y(const DoublyEncoded& x);

// Expansion factor: a real alpha > 1 such that alpha*(z1, z2, z1*z2) is
// nearly integer; m = round(alpha * (z1, z2, z1*z2)).
struct ExpansionFactorSet {
    double alpha = 0.0;
    std::array<std::int64_t, 3> m{};
    int booth_terms = 0;         // term budget reproducing the stock encoding

    bool operator==(const ExpansionFactorSet&) const = default;
};

ExpansionFactorSet expansion_set_large();   // alpha = 167.2309, {437, 181, 473}
ExpansionFactorSet expansion_set_small();   // alpha = 4.5961,   {12, 5, 13}

struct CseResult {
    std::int64_t value = 0;
    int additions = 0;
};

/**
 * m1*yb + m2*yc + m3*yd through the factored schedules
 *
 *   {437,181,473}: 473*(b+c+d) - 36*(b+c) - 256*c      (8 additions)
 *   {12,5,13}:     8*(b+d) + 4*(b+c+d) + d + c         (5 additions)
 *
 * The executed addition count is returned. Unknown sets are rejected.
 */
CseResult cse_combine(std::int64_t yb, std::int64_t yc, std::int64_t yd,
                      const ExpansionFactorSet& set);

struct BoothTerm {
    int exponent = 0;
    bool negative = false;
};

/**
 * Signed-power-of-two expansion of a positive value, at most max_terms
 * terms. Both the plain binary expansion and the nearest-signed-power
 * greedy recoding are formed; whichever leaves the smaller residual wins,
 * with the all-positive expansion preferred on ties.
 */
std::vector<BoothTerm> booth_encode(double value, int max_terms);
double booth_value(const std::vector<BoothTerm>& terms);

struct FrsConfig {
    enum class Method { dempster, expansion };

    Method method = Method::dempster;
    std::optional<ExpansionFactorSet> factors;   // present iff method == expansion
    bool apply_inverse_alpha = false;

    static FrsConfig dempster_config();
    static FrsConfig expansion_config(const ExpansionFactorSet& set, bool inverse_alpha = false);
};

// alpha-scaled integer form: booth(alpha)*Ya*2^11 + (m . (Yb,Yc,Yd)) << 11.
FixedPoint frs_expansion_raw(const DoublyEncoded& x, const ExpansionFactorSet& set);

// Value of the expansion-factor reconstruction; divides by alpha when the
// config says so (otherwise the caller is expected to absorb 1/alpha
// downstream, e.g. in a quantizer).
double frs_expansion(const DoublyEncoded& x, const FrsConfig& cfg);

// Uniform entry point for either method.
double frs_value(const DoublyEncoded& x, const FrsConfig& cfg);

/**
 * Per-coefficient output stage selection: one of the two reconstruction
 * circuits, or the arbitrary-precision decode (no approximation at all).
 */
struct CoefficientDecoder {
    bool exact = false;
    unsigned exact_precision = 160;
    FrsConfig frs;

    static CoefficientDecoder exact_decoder(unsigned precision = 160);
    static CoefficientDecoder dempster_decoder();
    static CoefficientDecoder expansion_decoder(const ExpansionFactorSet& set,
                                                bool inverse_alpha = false);

    double apply(const DoublyEncoded& x, const DecodeContext* exact_ctx = nullptr) const;
    std::string id() const;
};

}  // namespace aidct
