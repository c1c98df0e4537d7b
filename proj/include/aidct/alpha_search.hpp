#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aidct/frs.hpp"

namespace aidct {

struct AlphaCandidate {
    double alpha = 0.0;
    std::array<std::int64_t, 3> triple{};
    double norm = 0.0;

    ExpansionFactorSet to_set(int booth_terms = 7) const { return {alpha, triple, booth_terms}; }
};

struct AlphaSearchResult {
    AlphaCandidate best;
    // Best grid point per distinct rounded triple, sorted by ascending norm
    // (smallest alpha wins a norm tie), truncated to the requested length.
    std::vector<AlphaCandidate> ranked;
};

/**
 * Exhaustive grid search for expansion factors: scans alpha = lo + i*step
 * over [lo, hi] (grid points <= 1 are excluded since a factor must be > 1)
 * and minimises the Euclidean norm of alpha*(z1, z2, z1*z2) minus its
 * rounding. Throws std::invalid_argument for an empty or senseless range.
 */
AlphaSearchResult search_expansion_factor(double lo, double hi, double step,
                                          std::size_t max_ranked = 20);

// Single-threaded reference for the OpenMP kernel above; identical results.
AlphaSearchResult search_expansion_factor_serial(double lo, double hi, double step,
                                                 std::size_t max_ranked = 20);

}  // namespace aidct
