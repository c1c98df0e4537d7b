// Compares the OpenMP kernels against their single-threaded references and
// checks that both sides produce the same numbers.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aidct/alpha_search.hpp"
#include "aidct/harness.hpp"

using namespace aidct;

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds(t0);
}

void row(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-28s %10.3f s %10.3f s %8.2fx   %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n_blocks = 20000;
    if (argc > 1) n_blocks = std::strtoull(argv[1], nullptr, 10);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const auto blocks = random_blocks(n_blocks, 8, 0xb3);
        DesignConfig d;
        d.name = "design-6";
        d.wordlength = 8;
        d.decoder = CoefficientDecoder::expansion_decoder(expansion_set_large());
        SuccessReport ser, par;
        const double ts = timed([&] { ser = measure_success_serial(blocks, d, default_tolerances_pct()); });
        const double tp = timed([&] { par = measure_success(blocks, d, default_tolerances_pct()); });
        row("success measurement", ts, tp, ser.success_rate_pct == par.success_rate_pct);
    }

    {
        AlphaSearchResult ser, par;
        const double ts = timed([&] { ser = search_expansion_factor_serial(1.0, 256.0, 1e-4, 16); });
        const double tp = timed([&] { par = search_expansion_factor(1.0, 256.0, 1e-4, 16); });
        const bool equal = ser.best.alpha == par.best.alpha && ser.best.norm == par.best.norm &&
                           ser.ranked.size() == par.ranked.size();
        row("expansion factor search", ts, tp, equal);
    }

    return 0;
}
