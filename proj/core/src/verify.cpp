#include "crystal/verify.hpp"

#include "crystal/correspondence.hpp"
#include "crystal/membership.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableaux.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace crystal {

namespace {

using Check = CheckResult;

Check check_dimension(const Generated<Monomial>& mono, const Generated<Tableau>& tab,
                      const Generated<Tableau>& rev, unsigned long long dim) {
    std::ostringstream detail;
    detail << "monomial " << mono.elements.size() << ", tableau " << tab.elements.size()
           << ", reverse " << rev.elements.size() << ", dimension " << dim;
    bool ok = mono.elements.size() == dim && tab.elements.size() == dim && rev.elements.size() == dim;
    return Check{"dimension-count", ok, detail.str()};
}

Check check_axioms(const Generated<Monomial>& mono) {
    const CartanDatum cartan(mono.graph.rank());
    std::size_t checked = 0;
    for (const Monomial& m : mono.elements) {
        for (int i = 1; i <= cartan.rank(); ++i) {
            ++checked;
            const int phi = m.phi(i), eps = m.epsilon(i);
            if (phi - eps != cartan.pairing(m.weight(), i))
                return Check{"crystal-axioms", false,
                             "phi - epsilon mismatch at " + m.to_string() + " color " +
                                 std::to_string(i)};
            auto down = m.f_tilde(i);
            if (down.has_value() != (phi > 0))
                return Check{"crystal-axioms", false,
                             "lowering defined-ness mismatch at " + m.to_string()};
            auto up = m.e_tilde(i);
            if (up.has_value() != (eps > 0))
                return Check{"crystal-axioms", false,
                             "raising defined-ness mismatch at " + m.to_string()};
            if (down) {
                if (down->weight() != m.weight() - cartan.simple_root(i))
                    return Check{"crystal-axioms", false, "weight shift fails at " + m.to_string()};
                auto back = down->e_tilde(i);
                if (!back || *back != m)
                    return Check{"crystal-axioms", false,
                                 "raising does not invert lowering at " + m.to_string()};
            }
            if (up) {
                if (up->weight() != m.weight() + cartan.simple_root(i))
                    return Check{"crystal-axioms", false, "weight shift fails at " + m.to_string()};
                auto back = up->f_tilde(i);
                if (!back || *back != m)
                    return Check{"crystal-axioms", false,
                                 "lowering does not invert raising at " + m.to_string()};
            }
            // the forward string has length exactly phi
            Monomial walk = m;
            for (int step = 0; step < phi; ++step) {
                auto next = walk.f_tilde(i);
                if (!next)
                    return Check{"crystal-axioms", false,
                                 "forward string shorter than phi at " + m.to_string()};
                walk = *next;
            }
            if (walk.f_tilde(i))
                return Check{"crystal-axioms", false,
                             "forward string longer than phi at " + m.to_string()};
        }
    }
    return Check{"crystal-axioms", true, std::to_string(checked) + " node/color pairs"};
}

Check check_membership_grid(const Generated<Monomial>& mono, const Weight& lambda) {
    for (const Monomial& m : mono.elements)
        if (!is_member(m, lambda))
            return Check{"membership-grid", false, "generated node rejected: " + m.to_string()};
    return Check{"membership-grid", true,
                 "all " + std::to_string(mono.elements.size()) + " nodes accepted"};
}

Check check_membership_paired(const Generated<Monomial>& mono, const Weight& lambda) {
    for (const Monomial& m : mono.elements) {
        auto x = x_factorize(m);
        if (!x || !x->all_nonnegative())
            return Check{"membership-paired-form", false, "no pairing for " + m.to_string()};
        if (!is_member_theorem(pair_decomposition(*x), lambda))
            return Check{"membership-paired-form", false,
                         "paired form rejected: " + m.to_string()};
        if (pair_decomposition(*x).product() != m)
            return Check{"membership-paired-form", false,
                         "pairs do not multiply back to " + m.to_string()};
    }
    return Check{"membership-paired-form", true,
                 "agrees on all " + std::to_string(mono.elements.size()) + " nodes"};
}

std::optional<int> fundamental_index(const Weight& lambda) {
    int k = 0;
    for (int i = 1; i <= lambda.rank(); ++i) {
        if (lambda.coeff(i) == 0) continue;
        if (lambda.coeff(i) != 1 || k != 0) return std::nullopt;
        k = i;
    }
    return k == 0 ? std::nullopt : std::optional<int>(k);
}

Check check_fundamental(const Generated<Monomial>& mono, int k) {
    for (const Monomial& m : mono.elements) {
        if (!is_member_fundamental(m, k))
            return Check{"fundamental-membership", false, "grid route rejected " + m.to_string()};
        if (!is_member_fundamental_pairform(m, k))
            return Check{"fundamental-membership", false, "pair route rejected " + m.to_string()};
    }
    return Check{"fundamental-membership", true,
                 "both routes accept all " + std::to_string(mono.elements.size()) + " nodes"};
}

Check check_multiplicities(const Generated<Monomial>& mono, const Weight& lambda) {
    const int rank = mono.graph.rank();
    std::map<Weight, std::size_t> expected;
    for_each_ssyt(Shape::of_weight(lambda), rank + 1,
                  [&](const std::vector<std::vector<int>>& grid) {
                      ++expected[Tableau(rank, Orientation::standard, grid).weight()];
                  });
    auto actual = mono.graph.weight_multiplicities();
    if (actual != expected) {
        for (const auto& [w, count] : expected) {
            auto it = actual.find(w);
            std::size_t got = it == actual.end() ? 0 : it->second;
            if (got != count)
                return Check{"weight-multiplicities", false,
                             "weight " + w.to_string() + ": graph " + std::to_string(got) +
                                 ", enumeration " + std::to_string(count)};
        }
        return Check{"weight-multiplicities", false, "graph carries extra weights"};
    }
    return Check{"weight-multiplicities", true,
                 std::to_string(expected.size()) + " distinct weights"};
}

Check check_tableau_iso(const Generated<Monomial>& mono, const Generated<Tableau>& tab,
                        const Weight& lambda) {
    std::vector<int> iso;
    try {
        iso = canonical_iso(mono.graph, tab.graph);
    } catch (const IsoError& e) {
        return Check{"tableau-isomorphism", false, e.what()};
    }
    for (std::size_t u = 0; u < mono.elements.size(); ++u) {
        const Tableau image = phi_map(mono.elements[u], lambda);
        if (image != tab.elements[static_cast<std::size_t>(iso[u])])
            return Check{"tableau-isomorphism", false,
                         "composite map disagrees with the canonical isomorphism at " +
                             mono.elements[u].to_string()};
    }
    return Check{"tableau-isomorphism", true,
                 "composite map equals the canonical isomorphism on " +
                     std::to_string(mono.elements.size()) + " nodes"};
}

Check check_reverse_iso(const Generated<Monomial>& mono, const Generated<Tableau>& rev,
                        const Weight& lambda) {
    std::map<Tableau, std::size_t> rev_index;
    for (std::size_t v = 0; v < rev.elements.size(); ++v) rev_index.emplace(rev.elements[v], v);

    std::vector<bool> hit(rev.elements.size(), false);
    for (const Monomial& m : mono.elements) {
        const Tableau image = psi(m, lambda);
        auto it = rev_index.find(image);
        if (it == rev_index.end())
            return Check{"reverse-isomorphism", false,
                         "psi image is not a generated reverse tableau: " + m.to_string()};
        if (hit[it->second])
            return Check{"reverse-isomorphism", false, "psi is not injective at " + m.to_string()};
        hit[it->second] = true;

        for (int i = 1; i <= mono.graph.rank(); ++i) {
            auto m_down = m.f_tilde(i);
            auto t_down = image.f_tilde(i);
            if (m_down.has_value() != t_down.has_value())
                return Check{"reverse-isomorphism", false,
                             "lowering defined-ness differs at " + m.to_string() + " color " +
                                 std::to_string(i)};
            if (m_down && psi(*m_down, lambda) != *t_down)
                return Check{"reverse-isomorphism", false,
                             "psi does not commute with lowering at " + m.to_string() + " color " +
                                 std::to_string(i)};
            auto m_up = m.e_tilde(i);
            auto t_up = image.e_tilde(i);
            if (m_up.has_value() != t_up.has_value())
                return Check{"reverse-isomorphism", false,
                             "raising defined-ness differs at " + m.to_string() + " color " +
                                 std::to_string(i)};
            if (m_up && psi(*m_up, lambda) != *t_up)
                return Check{"reverse-isomorphism", false,
                             "psi does not commute with raising at " + m.to_string() + " color " +
                                 std::to_string(i)};
        }
    }
    return Check{"reverse-isomorphism", true,
                 "psi is a commuting bijection on " + std::to_string(mono.elements.size()) +
                     " nodes"};
}

Check check_round_trips(const Generated<Monomial>& mono, const Generated<Tableau>& tab,
                        const Generated<Tableau>& rev, const Weight& lambda) {
    for (const Monomial& m : mono.elements)
        if (psi_inverse(psi(m, lambda)) != m)
            return Check{"round-trips", false, "psi round trip fails at " + m.to_string()};
    for (const Tableau& s : rev.elements) {
        if (psi(psi_inverse(s), lambda) != s)
            return Check{"round-trips", false,
                         "psi-inverse round trip fails at " + s.canonical_string()};
        if (varphi_inverse(varphi(s)) != s)
            return Check{"round-trips", false,
                         "insertion round trip fails at " + s.canonical_string()};
    }
    for (const Tableau& t : tab.elements)
        if (varphi(varphi_inverse(t)) != t)
            return Check{"round-trips", false,
                         "extraction round trip fails at " + t.canonical_string()};
    return Check{"round-trips", true, "all four identities hold"};
}

Check check_product_factorization(const Generated<Monomial>& mono, const Weight& lambda) {
    const int rank = mono.graph.rank();
    for (const Monomial& m : mono.elements) {
        const Tableau s = psi(m, lambda);
        Monomial product = Monomial::one(rank);
        const Shape& shape = s.shape();
        for (int c = 0; c < shape.width(); ++c) {
            const int height = shape.column_length(c);
            Monomial factor = Monomial::one(rank);
            for (int r = height - 1; r >= 0; --r)  // top to bottom
                factor *= x_var(rank, s.entry(r, shape.row(r) - 1 - c), r);
            if (!is_member_fundamental(factor, height) ||
                !is_member_fundamental_pairform(factor, height))
                return Check{"product-factorization", false,
                             "column factor " + factor.to_string() + " of " + m.to_string() +
                                 " is not a fundamental member"};
            product *= factor;
        }
        if (product != m)
            return Check{"product-factorization", false,
                         "column factors do not multiply back to " + m.to_string()};
    }
    return Check{"product-factorization", true,
                 "every node splits into fundamental members"};
}

}  // namespace

VerifyReport verify_weight(const Weight& lambda, std::size_t max_nodes) {
    VerifyReport report;
    report.rank = lambda.rank();
    report.lambda = lambda;

    const CartanDatum cartan(lambda.rank());
    const auto mono = generate_with_elements(Monomial::highest_weight(lambda), max_nodes);
    const auto tab = generate_with_elements(Tableau::highest(lambda, Orientation::standard), max_nodes);
    const auto rev = generate_with_elements(Tableau::highest(lambda, Orientation::reverse), max_nodes);

    report.checks.push_back(check_dimension(mono, tab, rev, cartan.weyl_dim(lambda)));
    report.checks.push_back(check_axioms(mono));
    report.checks.push_back(check_membership_grid(mono, lambda));
    report.checks.push_back(check_membership_paired(mono, lambda));
    if (auto k = fundamental_index(lambda)) report.checks.push_back(check_fundamental(mono, *k));
    report.checks.push_back(check_multiplicities(mono, lambda));
    report.checks.push_back(check_tableau_iso(mono, tab, lambda));
    report.checks.push_back(check_reverse_iso(mono, rev, lambda));
    report.checks.push_back(check_round_trips(mono, tab, rev, lambda));
    report.checks.push_back(check_product_factorization(mono, lambda));
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream os;
    os << "verify rank=" << report.rank << " weight=" << report.lambda.to_string() << "\n";
    std::size_t passed = 0;
    for (const CheckResult& c : report.checks) {
        os << c.name << ": " << (c.passed ? "PASS" : "FAIL");
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
        if (c.passed) ++passed;
    }
    os << (passed == report.checks.size() ? "all checks passed" : "CHECKS FAILED") << " ("
       << passed << "/" << report.checks.size() << ")\n";
    return os.str();
}

}  // namespace crystal
