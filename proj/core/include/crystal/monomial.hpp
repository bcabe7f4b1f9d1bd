#pragma once

// Nakajima monomials for type A_n: exact Laurent monomials in the commuting
// variables Y_i(n), the statistics wt / phi_i / epsilon_i, the correction
// monomials A_i(m), and the Kashiwara raising/lowering operators.

#include "crystal/cartan.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace crystal {

/// One Laurent factor Y_index(level)^exponent. Canonical order is by
/// (level ascending, index ascending).
struct YFactor {
    int level = 0;
    int index = 0;
    int exponent = 0;

    friend bool operator==(const YFactor&, const YFactor&) = default;
    friend auto operator<=>(const YFactor&, const YFactor&) = default;
};

/// Sign choice c_ij in {0,1}, c_ij + c_ji = 1, steering which level the
/// off-diagonal variables of a correction monomial live on. The standard
/// choice (c_ij = 0 for i > j, 1 for i < j) is the only one the closed-form
/// membership tests and tableau correspondences cover.
class CijChoice {
public:
    static const CijChoice& standard();

    /// Table entries are consulted as table[i-1][j-1] for i != j; every
    /// off-diagonal pair must satisfy c_ij + c_ji = 1.
    static CijChoice from_table(std::vector<std::vector<int>> table);

    int at(int i, int j) const;
    bool is_standard() const { return table_.empty(); }

private:
    CijChoice() = default;
    std::vector<std::vector<int>> table_;
};

class Monomial {
public:
    /// The empty monomial (the constant 1).
    explicit Monomial(int rank);

    static Monomial one(int rank) { return Monomial(rank); }

    /// Y_index(level)^exponent. Indices 0 and rank+1 denote the constant 1
    /// and are dropped; indices outside 0..rank+1 are range errors.
    static Monomial y(int rank, int index, int level, int exponent = 1);

    /// Y_1(0)^{a_1} ... Y_n(0)^{a_n} for dominant lambda; every raising
    /// operator kills it.
    static Monomial highest_weight(const Weight& lambda);

    /// Correction monomial A_i(level); its inverse implements the lowering
    /// operator in color i.
    static Monomial a_monomial(int rank, int i, int level,
                               const CijChoice& cij = CijChoice::standard());

    /// Grammar: factor := "Y" int "(" int ")" ["^" int];
    ///          monomial := factor ("*" factor)* | "1"; whitespace ignored.
    static Monomial parse(const std::string& text, int rank);

    int rank() const { return rank_; }
    bool is_one() const { return factors_.empty(); }
    const std::vector<YFactor>& factors() const { return factors_; }
    int exponent_of(int index, int level) const;

    Monomial inverse() const;
    Monomial pow(int k) const;
    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    Weight weight() const;

    /// Largest running sum of color-i exponents over level prefixes (at
    /// least 0); the length of the forward i-string.
    int phi(int i) const;

    /// Length of the backward i-string; equals phi(i) - <h_i, weight()>.
    int epsilon(int i) const;

    /// Level at which the lowering (resp. raising) operator corrects:
    /// smallest (resp. largest) integer level whose exponent prefix sum
    /// attains phi(i). Precondition phi(i) > 0 (resp. epsilon(i) > 0).
    int n_f(int i) const;
    int n_e(int i) const;

    std::optional<Monomial> f_tilde(int i, const CijChoice& cij = CijChoice::standard()) const;
    std::optional<Monomial> e_tilde(int i, const CijChoice& cij = CijChoice::standard()) const;

    /// Canonical form, factors sorted by (level, index): "Y1(0)^2*Y2(1)^-1";
    /// the empty monomial prints as "1".
    std::string to_string() const;
    std::string canonical_string() const { return to_string(); }

    /// {"factors": [{"i":..., "n":..., "e":...}, ...]} in canonical order.
    std::string to_json_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    void insert(int index, int level, int exponent);

    int rank_ = 0;
    std::vector<YFactor> factors_;
};

}  // namespace crystal
