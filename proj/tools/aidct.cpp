#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aidct/alpha_search.hpp"
#include "aidct/harness.hpp"
#include "aidct/pgm.hpp"
#include "aidct/stream.hpp"

namespace {

using namespace aidct;

CoefficientDecoder decoder_from_name(const std::string& name, bool descale) {
    if (name == "exact") return CoefficientDecoder::exact_decoder();
    if (name == "dempster") return CoefficientDecoder::dempster_decoder();
    if (name == "exp-small") return CoefficientDecoder::expansion_decoder(expansion_set_small(), descale);
    if (name == "exp-large") return CoefficientDecoder::expansion_decoder(expansion_set_large(), descale);
    throw std::runtime_error("unknown FRS '" + name + "' (use dempster|exp-small|exp-large|exact)");
}

std::pair<int, int> parse_resolution(const std::string& text) {
    const auto xpos = text.find('x');
    if (xpos == std::string::npos) throw std::runtime_error("resolution must look like 1920x1080");
    const int w = std::stoi(text.substr(0, xpos));
    const int h = std::stoi(text.substr(xpos + 1));
    if (w <= 0 || h <= 0) throw std::runtime_error("resolution must be positive");
    return {w, h};
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_transform(const std::string& input, const std::string& output, const std::string& frs,
                  int wordlength, bool descale, const std::string& format, double clock_hz) {
    std::vector<PixelBlock> blocks;
    if (ends_with(input, ".pgm")) {
        blocks = blocks_from_image(read_pgm(input), wordlength);
    } else {
        blocks = read_raw_blocks(input);
    }

    std::vector<std::int32_t> pixels;
    pixels.reserve(blocks.size() * 64);
    for (const PixelBlock& b : blocks) {
        for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) pixels.push_back(b[r][c]);
        }
    }

    StreamConfig cfg;
    cfg.clock_hz = clock_hz;
    cfg.wordlength = wordlength;
    cfg.decoder = decoder_from_name(frs, descale);
    StreamResult res = run_stream(pixels, cfg);

    if (descale) {
        const ScaleVector sv = derive_scale_vector();
        for (StreamBlock& sb : res.blocks) {
            for (int i = 0; i < 8; ++i) {
                for (int k = 0; k < 8; ++k) sb.values[i][k] /= sv.s[i] * sv.s[k];
            }
        }
    }

    std::ofstream os(output, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write '" + output + "'");
    if (format == "csv") {
        os << "block,i,k,value\n";
        char buf[64];
        for (const StreamBlock& sb : res.blocks) {
            for (int i = 0; i < 8; ++i) {
                for (int k = 0; k < 8; ++k) {
                    std::snprintf(buf, sizeof buf, "%.17g", sb.values[i][k]);
                    os << sb.index << ',' << i << ',' << k << ',' << buf << '\n';
                }
            }
        }
    } else if (format == "bin") {
        for (const StreamBlock& sb : res.blocks) {
            for (int i = 0; i < 8; ++i) {
                os.write(reinterpret_cast<const char*>(sb.values[i].data()), 8 * sizeof(double));
            }
        }
    } else {
        throw std::runtime_error("transform supports --format csv|bin");
    }
    if (!os) throw std::runtime_error("failed writing '" + output + "'");

    std::printf("transformed %zu blocks (%s, L=%d) -> %s\n", res.blocks.size(),
                cfg.decoder.id().c_str(), wordlength, output.c_str());
    std::printf("latency %llu ticks, block rate %.6g MHz\n",
                static_cast<unsigned long long>(res.timing.latency_ticks),
                res.timing.block_rate_hz() / 1e6);
    return 0;
}

int cmd_analyze(std::size_t n_blocks, std::uint64_t seed, std::vector<double> tolerances,
                const std::string& format, const std::string& output) {
    if (n_blocks < 1) throw std::runtime_error("--blocks must be at least 1");
    if (tolerances.empty()) {
        tolerances.assign(default_tolerances_pct().begin(), default_tolerances_pct().end());
    }

    std::vector<DesignConfig> designs = stock_designs();
    for (int wl : {4, 8}) {
        DesignConfig control;
        control.name = "exact-L" + std::to_string(wl);
        control.wordlength = wl;
        control.decoder = CoefficientDecoder::exact_decoder();
        designs.push_back(std::move(control));
    }

    // group by wordlength so each input set is transformed once
    std::vector<SuccessReport> reports(designs.size());
    for (int wl : {4, 8}) {
        std::vector<DesignConfig> group;
        std::vector<std::size_t> slots;
        for (std::size_t i = 0; i < designs.size(); ++i) {
            if (designs[i].wordlength == wl) {
                group.push_back(designs[i]);
                slots.push_back(i);
            }
        }
        const std::vector<PixelBlock> blocks = random_blocks(n_blocks, wl, seed);
        std::vector<SuccessReport> got = measure_success_multi(blocks, group, tolerances);
        for (std::size_t g = 0; g < got.size(); ++g) reports[slots[g]] = std::move(got[g]);
    }

    std::printf("%-10s %-22s %2s %8s", "design", "frs", "L", "blocks");
    for (double t : tolerances) std::printf(" %8.3f%%", t);
    std::printf("\n");
    for (const SuccessReport& rep : reports) {
        std::printf("%-10s %-22s %2d %8llu", rep.design.c_str(), rep.frs_id.c_str(),
                    rep.wordlength, static_cast<unsigned long long>(rep.block_count));
        for (double r : rep.success_rate_pct) std::printf(" %9.4f", r);
        std::printf("\n");
    }

    if (!output.empty()) {
        std::ofstream os(output, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write '" + output + "'");
        if (format == "json") {
            os << success_reports_json(reports) << '\n';
        } else if (format == "csv") {
            write_success_csv(os, reports);
        } else {
            throw std::runtime_error("analyze supports --format csv|json");
        }
        std::printf("report written to %s\n", output.c_str());
    }
    return 0;
}

int cmd_search_alpha(double lo, double hi, double step, std::size_t top) {
    const AlphaSearchResult res = search_expansion_factor(lo, hi, step, top);
    std::printf("%4s %12s %-22s %12s\n", "rank", "alpha", "round(alpha*zeta)", "norm");
    for (std::size_t r = 0; r < res.ranked.size(); ++r) {
        const AlphaCandidate& c = res.ranked[r];
        char triple[48];
        std::snprintf(triple, sizeof triple, "{%lld, %lld, %lld}",
                      static_cast<long long>(c.triple[0]), static_cast<long long>(c.triple[1]),
                      static_cast<long long>(c.triple[2]));
        std::printf("%4zu %12.4f %-22s %12.6g\n", r + 1, c.alpha, triple, c.norm);
    }
    return 0;
}

int cmd_report(double clock_hz, const std::string& resolution, const std::string& frs,
               int wordlength, const std::string& output) {
    if (!(clock_hz > 0.0)) throw std::runtime_error("--clock must be positive");
    const auto [width, height] = parse_resolution(resolution);

    StreamConfig cfg;
    cfg.clock_hz = clock_hz;
    cfg.wordlength = wordlength;
    cfg.decoder = decoder_from_name(frs, false);

    // probe the pipeline with a few blocks to get the fill latency
    const std::vector<std::int32_t> probe(64 * 4, 0);
    const TimingReport timing = run_stream(probe, cfg).timing;

    std::printf("clock        %.6f MHz\n", clock_hz / 1e6);
    std::printf("block rate   %.6f MHz   (clock / 8)\n", timing.block_rate_hz() / 1e6);
    std::printf("pixel rate   %.6f MHz   (8 x clock)\n", timing.pixel_rate_hz() / 1e6);
    std::printf("frame rate   %.2f Hz    (%dx%d, %d blocks/frame)\n",
                timing.frame_rate_hz(width, height), width, height, (width / 8) * (height / 8));
    std::printf("latency      %llu ticks\n", static_cast<unsigned long long>(timing.latency_ticks));

    const ComplexityReport cx = complexity_report(cfg.decoder, wordlength + 8);
    if (cfg.decoder.exact) {
        std::printf("frs          exact decode (no fixed adder structure)\n");
    } else {
        std::printf("frs          %s: %d additions per coefficient", cx.frs_id.c_str(),
                    cx.total_additions);
        if (cx.cse_additions > 0) std::printf(" (%d in the integer-combination stage)", cx.cse_additions);
        std::printf(", ~%d adder bits at %d-bit inputs\n", cx.adder_bits, cx.input_bits);
    }

    if (!output.empty()) {
        std::ofstream os(output, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write '" + output + "'");
        os << timing_report_json(timing, width, height) << '\n';
        std::printf("timing record written to %s\n", output.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bit-exact 8x8 2-D DCT over a bivariate algebraic-integer ring"};
    app.require_subcommand(1);

    // transform
    std::string t_input, t_output = "coefficients.csv", t_frs = "exact", t_format = "csv";
    int t_wordlength = 8;
    std::string t_descale = "on";
    double t_clock = 100e6;
    CLI::App* transform = app.add_subcommand("transform", "Transform an image or raw block file");
    transform->add_option("--input", t_input, "PGM image or raw int16 block file")->required();
    transform->add_option("--output", t_output, "output coefficient file");
    transform->add_option("--frs", t_frs, "dempster|exp-small|exp-large|exact");
    transform->add_option("--wordlength", t_wordlength, "input wordlength (4 or 8)");
    transform->add_option("--descale", t_descale, "on|off: divide by the pass gains (and alpha)");
    transform->add_option("--format", t_format, "csv|bin");
    transform->add_option("--clock", t_clock, "core clock in Hz for the timing footer");

    // analyze
    std::size_t a_blocks = 10000;
    std::uint64_t a_seed = 1;
    std::vector<double> a_tols;
    std::string a_format = "csv", a_output = "success_report.csv";
    CLI::App* analyze = app.add_subcommand("analyze", "Success-rate study over random blocks");
    analyze->add_option("--blocks", a_blocks, "number of random 8x8 blocks");
    analyze->add_option("--seed", a_seed, "RNG seed (runs are reproducible)");
    analyze->add_option("--tolerances", a_tols, "tolerance list in percent")->delimiter(',');
    analyze->add_option("--format", a_format, "csv|json");
    analyze->add_option("--output", a_output, "report path ('' to skip)");

    // search-alpha
    double s_lo = 1.0, s_hi = 256.0, s_step = 1e-4;
    std::size_t s_top = 10;
    CLI::App* search = app.add_subcommand("search-alpha", "Grid search for expansion factors");
    search->add_option("--lo", s_lo, "lower bound (>= 1)");
    search->add_option("--hi", s_hi, "upper bound");
    search->add_option("--step", s_step, "grid step");
    search->add_option("--top", s_top, "ranked rows to print");

    // report
    double r_clock = 307.787e6;
    std::string r_resolution = "1920x1080", r_frs = "exp-large", r_output;
    int r_wordlength = 8;
    CLI::App* report = app.add_subcommand("report", "Timing and complexity summary");
    report->add_option("--clock", r_clock, "core clock in Hz");
    report->add_option("--resolution", r_resolution, "frame size WxH");
    report->add_option("--frs", r_frs, "dempster|exp-small|exp-large|exact");
    report->add_option("--wordlength", r_wordlength, "input wordlength");
    report->add_option("--output", r_output, "write the timing record as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transform->parsed()) {
            if (t_descale != "on" && t_descale != "off") throw std::runtime_error("--descale takes on|off");
            return cmd_transform(t_input, t_output, t_frs, t_wordlength, t_descale == "on",
                                 t_format, t_clock);
        }
        if (analyze->parsed()) return cmd_analyze(a_blocks, a_seed, a_tols, a_format, a_output);
        if (search->parsed()) return cmd_search_alpha(s_lo, s_hi, s_step, s_top);
        if (report->parsed()) return cmd_report(r_clock, r_resolution, r_frs, r_wordlength, r_output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
