// Acceptance suite: one criterion per section, one PASS/FAIL line each, with
// the stated budgets enforced. Exits nonzero if any criterion fails.

#include "crystal/cartan.hpp"
#include "crystal/correspondence.hpp"
#include "crystal/crystal.hpp"
#include "crystal/membership.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableaux.hpp"
#include "crystal/verify.hpp"
#include "test_support.hpp"

#include <chrono>
#include <functional>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace crystal;
using crystal::testing::dominant_weights;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    bool passed = true;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& message) {
        if (!ok) {
            passed = false;
            if (failures.size() < 5) failures.push_back(message);
        }
    }
};

std::vector<Weight> test_matrix() {
    std::vector<Weight> result;
    for (int rank = 1; rank <= 3; ++rank)
        for (const Weight& lambda : dominant_weights(rank, 3)) result.push_back(lambda);
    result.push_back(Weight({1, 2, 1, 0}));
    return result;
}

using Edge = std::tuple<std::string, int, std::string>;

void check_golden_graph(Criterion& c, const Weight& lambda,
                        const std::multiset<std::string>& nodes, const std::set<Edge>& edges) {
    CrystalGraph g = generate(Monomial::highest_weight(lambda));
    c.expect(testing::label_multiset(g) == nodes,
             "node multiset differs for weight " + lambda.to_string());
    c.expect(testing::labeled_edges(g) == edges,
             "edge set differs for weight " + lambda.to_string());
}

double run_criterion(Criterion& c, const std::function<void(Criterion&)>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (c.budget_seconds > 0 && elapsed.count() >= c.budget_seconds)
        c.expect(false, "exceeded budget of " + std::to_string(c.budget_seconds) + " s");
    return elapsed.count();
}

void criterion_golden_graphs(Criterion& c) {
    check_golden_graph(c, Weight({1, 0}),
                       {"Y1(0)", "Y2(0)*Y1(1)^-1", "Y2(1)^-1"},
                       {{"Y1(0)", 1, "Y2(0)*Y1(1)^-1"}, {"Y2(0)*Y1(1)^-1", 2, "Y2(1)^-1"}});

    check_golden_graph(
        c, Weight({2, 0}),
        {"Y1(0)^2", "Y1(0)*Y2(0)*Y1(1)^-1", "Y1(0)*Y2(1)^-1", "Y2(0)^2*Y1(1)^-2",
         "Y2(0)*Y1(1)^-1*Y2(1)^-1", "Y2(1)^-2"},
        {{"Y1(0)^2", 1, "Y1(0)*Y2(0)*Y1(1)^-1"},
         {"Y1(0)*Y2(0)*Y1(1)^-1", 1, "Y2(0)^2*Y1(1)^-2"},
         {"Y1(0)*Y2(0)*Y1(1)^-1", 2, "Y1(0)*Y2(1)^-1"},
         {"Y1(0)*Y2(1)^-1", 1, "Y2(0)*Y1(1)^-1*Y2(1)^-1"},
         {"Y2(0)^2*Y1(1)^-2", 2, "Y2(0)*Y1(1)^-1*Y2(1)^-1"},
         {"Y2(0)*Y1(1)^-1*Y2(1)^-1", 2, "Y2(1)^-2"}});

    check_golden_graph(
        c, Weight({1, 1}),
        {"Y1(0)*Y2(0)", "Y2(0)^2*Y1(1)^-1", "Y1(0)*Y1(1)*Y2(1)^-1", "Y2(0)*Y2(1)^-1",
         "Y1(0)*Y1(2)^-1", "Y1(1)*Y2(1)^-2", "Y2(0)*Y1(1)^-1*Y1(2)^-1", "Y2(1)^-1*Y1(2)^-1"},
        {{"Y1(0)*Y2(0)", 1, "Y2(0)^2*Y1(1)^-1"},
         {"Y1(0)*Y2(0)", 2, "Y1(0)*Y1(1)*Y2(1)^-1"},
         {"Y2(0)^2*Y1(1)^-1", 2, "Y2(0)*Y2(1)^-1"},
         {"Y1(0)*Y1(1)*Y2(1)^-1", 1, "Y1(0)*Y1(2)^-1"},
         {"Y2(0)*Y2(1)^-1", 2, "Y1(1)*Y2(1)^-2"},
         {"Y1(0)*Y1(2)^-1", 1, "Y2(0)*Y1(1)^-1*Y1(2)^-1"},
         {"Y1(1)*Y2(1)^-2", 1, "Y2(1)^-1*Y1(2)^-1"},
         {"Y2(0)*Y1(1)^-1*Y1(2)^-1", 2, "Y2(1)^-1*Y1(2)^-1"}});

    // the specifically pinned edge of the eight-node graph
    CrystalGraph adjoint = generate(Monomial::highest_weight(Weight({1, 1})));
    c.expect(testing::labeled_edges(adjoint).count(
                 {"Y1(0)*Y2(0)", 2, "Y1(0)*Y1(1)*Y2(1)^-1"}) == 1,
             "pinned color-2 edge missing from the eight-node graph");
}

void criterion_counting(Criterion& c) {
    for (const Weight& lambda : test_matrix()) {
        CartanDatum cartan(lambda.rank());
        CrystalGraph g = generate(Monomial::highest_weight(lambda));
        c.expect(g.node_count() == cartan.weyl_dim(lambda),
                 "node count != dimension for weight " + lambda.to_string());
    }
    // the three pinned counts
    c.expect(generate(Monomial::highest_weight(Weight({1, 0}))).node_count() == 3, "3-chain");
    c.expect(generate(Monomial::highest_weight(Weight({2, 0}))).node_count() == 6, "6-graph");
    c.expect(generate(Monomial::highest_weight(Weight({1, 1}))).node_count() == 8, "8-graph");
}

void criterion_characterization(Criterion& c) {
    for (const Weight& lambda : test_matrix()) {
        const int rank = lambda.rank();
        auto gen = generate_with_elements(Monomial::highest_weight(lambda));
        std::set<Monomial> members(gen.elements.begin(), gen.elements.end());
        for (const Monomial& m : gen.elements) {
            c.expect(is_member(m, lambda), "node rejected for " + lambda.to_string());
            auto x = x_factorize(m);
            c.expect(x.has_value() && x->all_nonnegative(),
                     "node has no valid grid for " + lambda.to_string());
            if (x && x->all_nonnegative())
                c.expect(is_member_theorem(pair_decomposition(*x), lambda),
                         "paired form rejects a node for " + lambda.to_string());
            for (int i = 1; i <= rank; ++i) {
                if (auto down = m.f_tilde(i)) {
                    c.expect(members.count(*down) == 1, "lowering escapes the member set");
                    c.expect(is_member(*down, lambda), "lowering image rejected");
                }
                if (auto up = m.e_tilde(i)) {
                    c.expect(members.count(*up) == 1, "raising escapes the member set");
                    c.expect(is_member(*up, lambda), "raising image rejected");
                }
            }
        }
        // the two characterizations agree on nearby non-members as well
        std::mt19937 rng(42u + static_cast<unsigned>(rank) + static_cast<unsigned>(members.size()));
        for (int t = 0; t < 40; ++t) {
            Monomial m = testing::random_monomial(rng, rank, 4, 2, 2);
            bool grid = is_member(m, lambda);
            auto x = x_factorize(m);
            bool paired = x.has_value() && x->all_nonnegative() &&
                          is_member_theorem(pair_decomposition(*x), lambda);
            c.expect(grid == paired, "characterizations disagree at " + m.to_string());
            c.expect(grid == (members.count(m) == 1),
                     "grid membership disagrees with generation at " + m.to_string());
        }
    }
}

void criterion_golden_membership(Criterion& c) {
    const Weight lambda({1, 2, 1, 0});
    const Monomial golden = Monomial::parse("Y1(0)*Y1(1)*Y1(2)^-1*Y2(1)^-1*Y3(0)^3", 4);
    c.expect(is_member(golden, lambda), "golden monomial rejected");
    auto x = x_factorize(golden);
    c.expect(x.has_value(), "golden monomial has no grid");
    if (x) {
        const long long sums[] = {4, 3, 1, 0};
        for (int j = 0; j <= 3; ++j)
            c.expect(x->column_sum(j) == sums[j], "column sum mismatch at " + std::to_string(j));
    }

    auto gen = generate_with_elements(Monomial::highest_weight(lambda));
    std::set<Monomial> members(gen.elements.begin(), gen.elements.end());
    c.expect(members.count(golden) == 1, "golden monomial missing from generation");

    std::mt19937 rng(1050);
    const auto& factors = golden.factors();
    for (int t = 0; t < 20; ++t) {
        const YFactor& f = factors[rng() % factors.size()];
        int delta = rng() % 2 == 0 ? 1 : -1;
        Monomial mutant = golden * Monomial::y(4, f.index, f.level, delta);
        bool accepted = is_member(mutant, lambda);
        c.expect(accepted == (members.count(mutant) == 1),
                 "mutation verdict disagrees with generation: " + mutant.to_string());
    }
}

void criterion_golden_maps(Criterion& c) {
    const Weight lambda({1, 2, 1});
    const Monomial golden = Monomial::parse("Y1(3)^-1*Y2(0)^2*Y3(1)^-1", 3);

    auto x = x_factorize(golden);
    c.expect(x.has_value(), "golden monomial has no grid");
    if (x) {
        XMatrix expected(3);
        expected.set(2, 2, 1);
        expected.set(3, 1, 1);
        expected.set(1, 1, 2);
        expected.set(4, 0, 2);
        expected.set(2, 0, 2);
        c.expect(*x == expected, "grid mismatch");
    }

    Tableau s = psi(golden, lambda);
    c.expect(s.rows() == std::vector<std::vector<int>>({{2, 2, 4, 4}, {1, 1, 3}, {2}}),
             "reverse tableau mismatch");
    c.expect(psi_inverse(s) == golden, "psi does not invert");

    Tableau t = phi_map(golden, lambda);
    c.expect(t.rows() == std::vector<std::vector<int>>({{1, 1, 2, 4}, {2, 2, 3}, {4}}),
             "standard tableau mismatch");

    ExtractionTrace trace = varphi_inverse_trace(t);
    c.expect(trace.popped == std::vector<int>({2, 3, 4, 1, 4, 1, 2, 2}),
             "extraction sequence mismatch");
    c.expect(trace.reverse_tableau == s, "extraction does not recover the reverse tableau");
    c.expect(psi_inverse(varphi_inverse(t)) == golden, "composite inverse fails");
}

void criterion_isomorphism(Criterion& c) {
    for (const Weight& lambda : test_matrix()) {
        const int rank = lambda.rank();
        auto mono = generate_with_elements(Monomial::highest_weight(lambda));
        auto tab = generate_with_elements(Tableau::highest(lambda, Orientation::standard));
        std::vector<int> iso;
        try {
            iso = canonical_iso(mono.graph, tab.graph);
        } catch (const IsoError& e) {
            c.expect(false, std::string("no canonical isomorphism: ") + e.what());
            continue;
        }
        for (std::size_t u = 0; u < mono.elements.size(); ++u) {
            const Monomial& m = mono.elements[u];
            c.expect(phi_map(m, lambda) == tab.elements[static_cast<std::size_t>(iso[u])],
                     "composite differs from canonical isomorphism for " + lambda.to_string());
            const Tableau s = psi(m, lambda);
            for (int i = 1; i <= rank; ++i) {
                auto m_down = m.f_tilde(i);
                auto s_down = s.f_tilde(i);
                c.expect(m_down.has_value() == s_down.has_value(),
                         "lowering defined-ness differs for " + lambda.to_string());
                if (m_down && s_down)
                    c.expect(psi(*m_down, lambda) == *s_down,
                             "psi does not commute with lowering for " + lambda.to_string());
                auto m_up = m.e_tilde(i);
                auto s_up = s.e_tilde(i);
                c.expect(m_up.has_value() == s_up.has_value(),
                         "raising defined-ness differs for " + lambda.to_string());
                if (m_up && s_up)
                    c.expect(psi(*m_up, lambda) == *s_up,
                             "psi does not commute with raising for " + lambda.to_string());
            }
        }
    }
}

void criterion_axioms(Criterion& c) {
    // (a) every generated node in the matrix range
    for (const Weight& lambda : test_matrix()) {
        CartanDatum cartan(lambda.rank());
        auto gen = generate_with_elements(Monomial::highest_weight(lambda));
        for (const Monomial& m : gen.elements) {
            for (int i = 1; i <= lambda.rank(); ++i) {
                c.expect(m.phi(i) - m.epsilon(i) == cartan.pairing(m.weight(), i),
                         "statistics mismatch on a node");
                if (auto down = m.f_tilde(i)) {
                    c.expect(down->weight() == m.weight() - cartan.simple_root(i),
                             "weight shift fails on a node");
                    auto back = down->e_tilde(i);
                    c.expect(back.has_value() && *back == m, "inverse pair fails on a node");
                }
            }
        }
    }

    // (b) fuzzed standalone monomials
    std::mt19937 rng(8675309);
    CartanDatum cartans[] = {CartanDatum(1), CartanDatum(2), CartanDatum(3), CartanDatum(4)};
    for (int t = 0; t < 10000; ++t) {
        const int rank = 1 + static_cast<int>(rng() % 4);
        const CartanDatum& cartan = cartans[rank - 1];
        Monomial m = testing::random_monomial(rng, rank, 6, 3, 4);
        for (int i = 1; i <= rank; ++i) {
            const int phi = m.phi(i), eps = m.epsilon(i);
            c.expect(phi >= 0 && eps >= 0, "negative statistic");
            c.expect(phi - eps == cartan.pairing(m.weight(), i), "statistics mismatch");
            auto down = m.f_tilde(i);
            c.expect(down.has_value() == (phi > 0), "lowering defined-ness");
            if (down) {
                c.expect(down->weight() == m.weight() - cartan.simple_root(i), "weight shift");
                auto back = down->e_tilde(i);
                c.expect(back.has_value() && *back == m, "raising does not invert lowering");
            }
            auto up = m.e_tilde(i);
            c.expect(up.has_value() == (eps > 0), "raising defined-ness");
            if (up) {
                c.expect(up->weight() == m.weight() + cartan.simple_root(i), "weight shift");
                auto back = up->f_tilde(i);
                c.expect(back.has_value() && *back == m, "lowering does not invert raising");
            }
            // string length equals phi, then the operator dies
            Monomial walk = m;
            for (int step = 0; step < phi; ++step) {
                auto next = walk.f_tilde(i);
                c.expect(next.has_value(), "string ended early");
                if (!next) break;
                walk = *next;
            }
            c.expect(!walk.f_tilde(i).has_value(), "string exceeded phi");
            c.expect(walk.epsilon(i) == eps + phi, "epsilon does not grow along the string");
        }
    }
}

void criterion_verify_runtime(Criterion& c) {
    for (const Weight& lambda : test_matrix()) {
        VerifyReport report = verify_weight(lambda);
        for (const CheckResult& check : report.checks)
            c.expect(check.passed, "verify check " + check.name + " failed for " +
                                       lambda.to_string() + ": " + check.detail);
    }
}

}  // namespace

int main() {
    std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> criteria;
    criteria.push_back({Criterion{"golden graphs", 1.0}, criterion_golden_graphs});
    criteria.push_back({Criterion{"counting", 30.0}, criterion_counting});
    criteria.push_back({Criterion{"characterization equivalence", 0}, criterion_characterization});
    criteria.push_back({Criterion{"golden membership", 0}, criterion_golden_membership});
    criteria.push_back({Criterion{"golden maps", 1.0}, criterion_golden_maps});
    criteria.push_back({Criterion{"isomorphism property", 0}, criterion_isomorphism});
    criteria.push_back({Criterion{"crystal axioms", 30.0}, criterion_axioms});
    criteria.push_back({Criterion{"verify runtime", 60.0}, criterion_verify_runtime});

    bool all_passed = true;
    int index = 0;
    for (auto& [criterion, body] : criteria) {
        ++index;
        double seconds = run_criterion(criterion, body);
        std::printf("criterion %d (%s): %s (%.2f s)\n", index, criterion.name.c_str(),
                    criterion.passed ? "PASS" : "FAIL", seconds);
        for (const std::string& message : criterion.failures)
            std::printf("  - %s\n", message.c_str());
        all_passed = all_passed && criterion.passed;
    }
    return all_passed ? 0 : 1;
}
