#pragma once

// Shared helpers for the test suites: weight enumeration, deterministic
// random monomials, and graph comparison by label.

#include "crystal/cartan.hpp"
#include "crystal/crystal.hpp"
#include "crystal/monomial.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace crystal::testing {

/// All dominant weights of the given rank with coefficient sum <= total.
inline std::vector<Weight> dominant_weights(int rank, int total) {
    std::vector<Weight> result;
    std::vector<int> coeffs(static_cast<std::size_t>(rank), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == rank) {
            result.push_back(Weight(coeffs));
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            coeffs[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, remaining - a);
        }
        coeffs[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, total);
    return result;
}

/// Uniformly random monomial with up to `max_factors` factors, exponents in
/// [-exp_bound, exp_bound] \ {0} and levels in [-level_bound, level_bound].
inline Monomial random_monomial(std::mt19937& rng, int rank, int max_factors, int exp_bound,
                                int level_bound) {
    std::uniform_int_distribution<int> count(0, max_factors);
    std::uniform_int_distribution<int> index(1, rank);
    std::uniform_int_distribution<int> level(-level_bound, level_bound);
    std::uniform_int_distribution<int> expo(-exp_bound, exp_bound);
    Monomial m = Monomial::one(rank);
    const int k = count(rng);
    for (int t = 0; t < k; ++t) {
        int e = expo(rng);
        if (e == 0) continue;
        m *= Monomial::y(rank, index(rng), level(rng), e);
    }
    return m;
}

/// Node labels as a multiset.
inline std::multiset<std::string> label_multiset(const CrystalGraph& g) {
    return {g.labels().begin(), g.labels().end()};
}

/// Edges as (source label, color, target label), order-free.
inline std::set<std::tuple<std::string, int, std::string>> labeled_edges(const CrystalGraph& g) {
    std::set<std::tuple<std::string, int, std::string>> out;
    for (const auto& [from, color, to] : g.edges())
        out.emplace(g.label(from), color, g.label(to));
    return out;
}

}  // namespace crystal::testing
