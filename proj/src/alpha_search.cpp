#include "aidct/alpha_search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace aidct {

namespace {

struct Zeta {
    double z1, z2, z12;
};

Zeta zeta_values() {
    const double p = std::sqrt(2.0 + std::sqrt(2.0));
    const double q = std::sqrt(2.0 - std::sqrt(2.0));
    return {p + q, p - q, (p + q) * (p - q)};
}

struct TripleBest {
    double norm2;
    double alpha;
};

// m components stay well under 2^21 for any alpha in a sane range, so a
// distinct triple packs into one 64-bit key.
std::int64_t pack_triple(std::int64_t m1, std::int64_t m2, std::int64_t m3) {
    return m1 + (m2 << 21) + (m3 << 42);
}

void merge_triple(std::unordered_map<std::int64_t, TripleBest>& into, std::int64_t key,
                  const TripleBest& cand) {
    auto [it, inserted] = into.try_emplace(key, cand);
    if (!inserted) {
        TripleBest& cur = it->second;
        if (cand.norm2 < cur.norm2 || (cand.norm2 == cur.norm2 && cand.alpha < cur.alpha)) {
            cur = cand;
        }
    }
}

AlphaSearchResult finish(const Zeta& z,
                         std::unordered_map<std::int64_t, TripleBest>& per_triple,
                         std::size_t max_ranked) {
    std::vector<AlphaCandidate> ranked;
    ranked.reserve(per_triple.size());
    for (const auto& [key, tb] : per_triple) {
        AlphaCandidate c;
        c.alpha = tb.alpha;
        c.norm = std::sqrt(tb.norm2);
        c.triple = {std::llround(tb.alpha * z.z1), std::llround(tb.alpha * z.z2),
                    std::llround(tb.alpha * z.z12)};
        ranked.push_back(c);
    }
    std::sort(ranked.begin(), ranked.end(), [](const AlphaCandidate& a, const AlphaCandidate& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return a.alpha < b.alpha;
    });
    if (ranked.empty()) throw std::invalid_argument("aidct: expansion factor range contains no grid point > 1");

    AlphaSearchResult result;
    result.best = ranked.front();
    if (ranked.size() > max_ranked) ranked.resize(max_ranked);
    result.ranked = std::move(ranked);
    return result;
}

void check_range(double lo, double hi, double step) {
    if (!(lo >= 1.0) || !(hi > lo) || !(step > 0.0)) {
        throw std::invalid_argument("aidct: expansion factor search needs 1 <= lo < hi and step > 0");
    }
}

double candidate_norm2(const Zeta& z, double alpha) {
    const double e1 = alpha * z.z1 - static_cast<double>(std::llround(alpha * z.z1));
    const double e2 = alpha * z.z2 - static_cast<double>(std::llround(alpha * z.z2));
    const double e3 = alpha * z.z12 - static_cast<double>(std::llround(alpha * z.z12));
    return e1 * e1 + e2 * e2 + e3 * e3;
}

}  // namespace

AlphaSearchResult search_expansion_factor_serial(double lo, double hi, double step,
                                                 std::size_t max_ranked) {
    check_range(lo, hi, step);
    const Zeta z = zeta_values();
    const std::int64_t n = static_cast<std::int64_t>(std::floor((hi - lo) / step + 0.5));

    std::unordered_map<std::int64_t, TripleBest> per_triple;
    for (std::int64_t i = 0; i <= n; ++i) {
        const double alpha = lo + static_cast<double>(i) * step;
        if (alpha <= 1.0 || alpha > hi + step * 0.5) continue;
        const double norm2 = candidate_norm2(z, alpha);
        const std::int64_t key = pack_triple(std::llround(alpha * z.z1), std::llround(alpha * z.z2),
                                             std::llround(alpha * z.z12));
        merge_triple(per_triple, key, {norm2, alpha});
    }
    return finish(z, per_triple, max_ranked);
}

AlphaSearchResult search_expansion_factor(double lo, double hi, double step,
                                          std::size_t max_ranked) {
    check_range(lo, hi, step);
    const Zeta z = zeta_values();
    const std::int64_t n = static_cast<std::int64_t>(std::floor((hi - lo) / step + 0.5));

    std::unordered_map<std::int64_t, TripleBest> per_triple;
#pragma omp parallel
    {
        std::unordered_map<std::int64_t, TripleBest> local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i <= n; ++i) {
            const double alpha = lo + static_cast<double>(i) * step;
            if (alpha <= 1.0 || alpha > hi + step * 0.5) continue;
            const double norm2 = candidate_norm2(z, alpha);
            const std::int64_t key = pack_triple(std::llround(alpha * z.z1),
                                                 std::llround(alpha * z.z2),
                                                 std::llround(alpha * z.z12));
            merge_triple(local, key, {norm2, alpha});
        }
#pragma omp critical(aidct_alpha_merge)
        for (const auto& [key, tb] : local) {
            merge_triple(per_triple, key, tb);
        }
    }
    return finish(z, per_triple, max_ranked);
}

}  // namespace aidct
