#include "aidct/harness.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace aidct {

namespace {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int thread_num() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

const std::array<std::array<double, 8>, 8>& dct_matrix() {
    static const auto m = [] {
        std::array<std::array<double, 8>, 8> c{};
        for (int k = 0; k < 8; ++k) {
            const double gain = (k == 0) ? std::sqrt(1.0 / 8.0) : 0.5;
            for (int j = 0; j < 8; ++j) {
                c[k][j] = gain * std::cos((2 * j + 1) * k * M_PI / 16.0);
            }
        }
        return c;
    }();
    return m;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RealBlock dct_2d_reference(const RealBlock& block) {
    const auto& c = dct_matrix();
    RealBlock tmp{};   // C * A
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            double acc = 0.0;
            for (int r = 0; r < 8; ++r) acc += c[i][r] * block[r][j];
            tmp[i][j] = acc;
        }
    }
    RealBlock out{};   // (C*A) * C^T
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) {
            double acc = 0.0;
            for (int j = 0; j < 8; ++j) acc += tmp[i][j] * c[k][j];
            out[i][k] = acc;
        }
    }
    return out;
}

RealBlock to_real(const PixelBlock& block) {
    RealBlock out{};
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) out[r][c] = static_cast<double>(block[r][c]);
    }
    return out;
}

PixelBlock random_block(std::uint64_t seed, std::uint64_t index, int wordlength) {
    if (wordlength < 1 || wordlength > 16) {
        throw std::invalid_argument("aidct: wordlength must be in [1, 16]");
    }
    const std::int32_t mask = (1 << wordlength) - 1;
    std::uint64_t state = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    PixelBlock b{};
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            b[r][c] = static_cast<std::int32_t>(splitmix64(state)) & mask;
        }
    }
    return b;
}

std::vector<PixelBlock> random_blocks(std::size_t count, int wordlength, std::uint64_t seed) {
    std::vector<PixelBlock> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = random_block(seed, i, wordlength);
    return out;
}

std::span<const double> default_tolerances_pct() {
    static const double tols[] = {10.0, 5.0, 1.0, 0.1, 0.05, 0.01, 0.005};
    return {tols, 7};
}

std::vector<DesignConfig> stock_designs() {
    std::vector<DesignConfig> designs;
    for (int design = 1; design <= 6; ++design) {
        DesignConfig d;
        d.name = "design-" + std::to_string(design);
        d.wordlength = (design % 2 == 0) ? 8 : 4;
        if (design <= 2) {
            d.decoder = CoefficientDecoder::dempster_decoder();
        } else if (design <= 4) {
            d.decoder = CoefficientDecoder::expansion_decoder(expansion_set_small());
        } else {
            d.decoder = CoefficientDecoder::expansion_decoder(expansion_set_large());
        }
        designs.push_back(std::move(d));
    }
    return designs;
}

double SuccessReport::max_abs_err() const {
    double m = 0.0;
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) m = std::max(m, per_coefficient[i][k].max_abs_err);
    }
    return m;
}

namespace {

struct Accumulator {
    std::array<std::array<CoefficientStats, 8>, 8> per_coefficient{};

    explicit Accumulator(std::size_t n_tols) {
        for (auto& row : per_coefficient) {
            for (auto& s : row) s.within.assign(n_tols, 0);
        }
    }

    void merge(const Accumulator& other) {
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 8; ++k) {
                CoefficientStats& a = per_coefficient[i][k];
                const CoefficientStats& b = other.per_coefficient[i][k];
                a.max_abs_err = std::max(a.max_abs_err, b.max_abs_err);
                a.sum_abs_err += b.sum_abs_err;
                for (std::size_t t = 0; t < a.within.size(); ++t) a.within[t] += b.within[t];
            }
        }
    }
};

// The harness always compares against the unscaled orthonormal reference, so
// 1/alpha is forced on for expansion decoders regardless of the caller's
// descaling policy.
CoefficientDecoder harness_decoder(const CoefficientDecoder& decoder) {
    CoefficientDecoder d = decoder;
    if (!d.exact && d.frs.method == FrsConfig::Method::expansion) {
        d.frs.apply_inverse_alpha = true;
    }
    return d;
}

void score_block(const PixelBlock& block, const CoefficientDecoder& decoder,
                 const DecodeContext* exact_ctx, const ScaleVector& sv,
                 std::span<const double> tols, Accumulator& acc) {
    const RealBlock ref = dct_2d_reference(to_real(block));
    const EncodedBlock enc = arai_dct_2d(block);
    for (int i = 0; i < 8; ++i) {
        for (int k = 0; k < 8; ++k) {
            const double out = decoder.apply(enc[i][k], exact_ctx) / (sv.s[i] * sv.s[k]);
            const double err = std::abs(out - ref[i][k]);
            CoefficientStats& st = acc.per_coefficient[i][k];
            st.max_abs_err = std::max(st.max_abs_err, err);
            st.sum_abs_err += err;
            for (std::size_t t = 0; t < tols.size(); ++t) {
                const bool ok = std::abs(ref[i][k]) < kZeroReferenceEps
                                    ? std::abs(out) <= kZeroReferenceFloor
                                    : err <= (tols[t] / 100.0) * std::abs(ref[i][k]);
                if (ok) ++st.within[t];
            }
        }
    }
}

SuccessReport report_from(const DesignConfig& design, const CoefficientDecoder& decoder,
                          std::span<const double> tols, std::size_t n_blocks, Accumulator&& acc) {
    SuccessReport rep;
    rep.design = design.name.empty() ? decoder.id() : design.name;
    rep.frs_id = decoder.id();
    rep.wordlength = design.wordlength;
    rep.block_count = n_blocks;
    rep.tolerances_pct.assign(tols.begin(), tols.end());
    rep.per_coefficient = std::move(acc.per_coefficient);
    rep.success_rate_pct.resize(tols.size());
    const double total = static_cast<double>(n_blocks) * 64.0;
    for (std::size_t t = 0; t < tols.size(); ++t) {
        std::uint64_t hits = 0;
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 8; ++k) hits += rep.per_coefficient[i][k].within[t];
        }
        rep.success_rate_pct[t] = total == 0.0 ? 0.0 : 100.0 * static_cast<double>(hits) / total;
    }
    return rep;
}

}  // namespace

SuccessReport measure_success_serial(std::span<const PixelBlock> blocks,
                                     const DesignConfig& design,
                                     std::span<const double> tolerances_pct) {
    const ScaleVector sv = derive_scale_vector();
    const CoefficientDecoder decoder = harness_decoder(design.decoder);
    std::optional<DecodeContext> ctx;
    if (decoder.exact) ctx.emplace(decoder.exact_precision);

    Accumulator acc(tolerances_pct.size());
    for (const PixelBlock& block : blocks) {
        score_block(block, decoder, ctx ? &*ctx : nullptr, sv, tolerances_pct, acc);
    }
    return report_from(design, decoder, tolerances_pct, blocks.size(), std::move(acc));
}

SuccessReport measure_success(std::span<const PixelBlock> blocks, const DesignConfig& design,
                              std::span<const double> tolerances_pct) {
    const ScaleVector sv = derive_scale_vector();
    const CoefficientDecoder decoder = harness_decoder(design.decoder);

    // per-thread partials merged in thread order, so a run is reproducible
    // for a fixed thread count
    std::vector<Accumulator> partials(max_threads(), Accumulator(tolerances_pct.size()));
#pragma omp parallel
    {
        Accumulator& local = partials[static_cast<std::size_t>(thread_num())];
        std::optional<DecodeContext> ctx;
        if (decoder.exact) ctx.emplace(decoder.exact_precision);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.size()); ++b) {
            score_block(blocks[static_cast<std::size_t>(b)], decoder, ctx ? &*ctx : nullptr, sv,
                        tolerances_pct, local);
        }
    }
    Accumulator acc(tolerances_pct.size());
    for (const Accumulator& p : partials) acc.merge(p);
    return report_from(design, decoder, tolerances_pct, blocks.size(), std::move(acc));
}

std::vector<SuccessReport> measure_success_multi(std::span<const PixelBlock> blocks,
                                                 std::span<const DesignConfig> designs,
                                                 std::span<const double> tolerances_pct) {
    const ScaleVector sv = derive_scale_vector();
    std::vector<CoefficientDecoder> decoders;
    decoders.reserve(designs.size());
    unsigned exact_precision = 0;
    for (const DesignConfig& d : designs) {
        decoders.push_back(harness_decoder(d.decoder));
        if (decoders.back().exact) {
            exact_precision = std::max(exact_precision, decoders.back().exact_precision);
        }
    }

    std::vector<std::vector<Accumulator>> partials(
        max_threads(), std::vector<Accumulator>(designs.size(), Accumulator(tolerances_pct.size())));
#pragma omp parallel
    {
        std::vector<Accumulator>& local = partials[static_cast<std::size_t>(thread_num())];
        std::optional<DecodeContext> ctx;
        if (exact_precision > 0) ctx.emplace(exact_precision);
#pragma omp for schedule(static)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.size()); ++b) {
            const PixelBlock& block = blocks[static_cast<std::size_t>(b)];
            const RealBlock ref = dct_2d_reference(to_real(block));
            const EncodedBlock enc = arai_dct_2d(block);
            for (std::size_t di = 0; di < decoders.size(); ++di) {
                for (int i = 0; i < 8; ++i) {
                    for (int k = 0; k < 8; ++k) {
                        const double out = decoders[di].apply(enc[i][k], ctx ? &*ctx : nullptr) /
                                           (sv.s[i] * sv.s[k]);
                        const double err = std::abs(out - ref[i][k]);
                        CoefficientStats& st = local[di].per_coefficient[i][k];
                        st.max_abs_err = std::max(st.max_abs_err, err);
                        st.sum_abs_err += err;
                        for (std::size_t t = 0; t < tolerances_pct.size(); ++t) {
                            const bool ok = std::abs(ref[i][k]) < kZeroReferenceEps
                                                ? std::abs(out) <= kZeroReferenceFloor
                                                : err <= (tolerances_pct[t] / 100.0) * std::abs(ref[i][k]);
                            if (ok) ++st.within[t];
                        }
                    }
                }
            }
        }
    }
    std::vector<Accumulator> accs(designs.size(), Accumulator(tolerances_pct.size()));
    for (const std::vector<Accumulator>& local : partials) {
        for (std::size_t di = 0; di < designs.size(); ++di) accs[di].merge(local[di]);
    }

    std::vector<SuccessReport> reports;
    reports.reserve(designs.size());
    for (std::size_t di = 0; di < designs.size(); ++di) {
        reports.push_back(report_from(designs[di], decoders[di], tolerances_pct, blocks.size(),
                                      std::move(accs[di])));
    }
    return reports;
}

ComplexityReport complexity_report(const CoefficientDecoder& decoder, int input_bits) {
    ComplexityReport rep;
    rep.frs_id = decoder.id();
    rep.input_bits = input_bits;
    if (decoder.exact) return rep;   // no fixed adder structure to count

    if (decoder.frs.method == FrsConfig::Method::dempster) {
        // sixteen constant products, then one summation tree
        int width_acc = 0;
        for (int q = 0; q < 4; ++q) {
            for (int p = 0; p < 4; ++p) {
                const DyadicConstant& dc = frs_constant(q, p);
                if (dc.numerator == 1) {
                    width_acc = std::max(width_acc, input_bits + kFrsFracBits);
                    continue;
                }
                const FastMultiplierProgram& prog = program_for(dc.numerator);
                rep.program_additions += prog.addition_count();
                rep.adder_bits += program_adder_bits(prog, input_bits);
                const int prod_bits = input_bits + 12 + (kFrsFracBits - dc.shift);
                width_acc = std::max(width_acc, prod_bits);
            }
        }
        rep.combine_additions = 15;
        for (int a = 0; a < 15; ++a) {
            ++width_acc;   // each summation level can carry one bit
            rep.adder_bits += width_acc;
        }
    } else {
        const ExpansionFactorSet& set = *decoder.frs.factors;
        // regrouping onto the ring basis: 3 adds for the rational channel,
        // 5 each for the other three; operands grow a few bits past the input
        rep.regroup_additions = 3 + 5 + 5 + 5;
        const int y_bits = input_bits + 4;
        rep.adder_bits += 3 * y_bits + 15 * (y_bits + 1);
        const CseResult cse = cse_combine(1, 1, 1, set);
        rep.cse_additions = cse.additions;
        rep.adder_bits += cse.additions * (y_bits + 10);
        rep.booth_additions = static_cast<int>(booth_encode(set.alpha, set.booth_terms).size()) - 1;
        rep.adder_bits += rep.booth_additions * (y_bits + kFrsFracBits + 8);
        rep.combine_additions = 1;
        rep.adder_bits += y_bits + kFrsFracBits + 10;
    }
    rep.total_additions = rep.regroup_additions + rep.cse_additions + rep.booth_additions +
                          rep.program_additions + rep.combine_additions;
    return rep;
}

void write_success_csv(std::ostream& os, std::span<const SuccessReport> reports) {
    os << "design,frs,wordlength,blocks,tolerance_pct,success_rate_pct\n";
    char buf[64];
    for (const SuccessReport& rep : reports) {
        for (std::size_t t = 0; t < rep.tolerances_pct.size(); ++t) {
            std::snprintf(buf, sizeof buf, "%.17g,%.6f", rep.tolerances_pct[t], rep.success_rate_pct[t]);
            os << rep.design << ',' << rep.frs_id << ',' << rep.wordlength << ','
               << rep.block_count << ',' << buf << '\n';
        }
    }
}

std::string success_reports_json(std::span<const SuccessReport> reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const SuccessReport& rep : reports) {
        nlohmann::json j;
        j["design"] = rep.design;
        j["frs"] = rep.frs_id;
        j["wordlength"] = rep.wordlength;
        j["blocks"] = rep.block_count;
        j["tolerances_pct"] = rep.tolerances_pct;
        j["success_rate_pct"] = rep.success_rate_pct;
        nlohmann::json coeffs = nlohmann::json::array();
        for (int i = 0; i < 8; ++i) {
            for (int k = 0; k < 8; ++k) {
                const CoefficientStats& st = rep.per_coefficient[i][k];
                coeffs.push_back({{"i", i},
                                  {"k", k},
                                  {"max_abs_err", st.max_abs_err},
                                  {"mean_abs_err", rep.mean_abs_err(i, k)},
                                  {"within", st.within}});
            }
        }
        j["per_coefficient"] = std::move(coeffs);
        out.push_back(std::move(j));
    }
    return out.dump(2);
}

std::string timing_report_json(const TimingReport& timing, int frame_width, int frame_height) {
    nlohmann::json j;
    j["clock_hz"] = timing.clock_hz;
    j["wordlength"] = timing.wordlength;
    j["frs"] = timing.frs_id;
    j["blocks"] = timing.blocks;
    j["ticks_total"] = timing.ticks_total;
    j["latency_ticks"] = timing.latency_ticks;
    j["block_rate_hz"] = timing.block_rate_hz();
    j["pixel_rate_hz"] = timing.pixel_rate_hz();
    j["frame"] = {{"width", frame_width},
                  {"height", frame_height},
                  {"rate_hz", timing.frame_rate_hz(frame_width, frame_height)}};
    return j.dump(2);
}

}  // namespace aidct
