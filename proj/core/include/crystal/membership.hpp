#pragma once

// Closed-form membership tests for the connected monomial crystal of a
// dominant weight: the X-variable change of basis and its exponent grid, the
// paired Y-form with its dominance order, and the resulting predicates.

#include "crystal/cartan.hpp"
#include "crystal/monomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crystal {

/// Exponent grid m_ij of the X-variable factorization, i = 1..rank+1,
/// j = 0..rank-1. Solved entries may be negative; membership checks signs.
class XMatrix {
public:
    explicit XMatrix(int rank);

    int rank() const { return rank_; }
    long long at(int i, int j) const;
    void set(int i, int j, long long value);

    bool all_nonnegative() const;
    /// m_ij = 0 whenever i + j >= rank + 2.
    bool zero_pattern_holds() const;
    long long column_sum(int j) const;

    /// Product of X_i(j)^{m_ij}.
    Monomial expand() const;

    std::string to_ascii() const;
    /// {"rank": n, "m": [[row i=1], ..., [row i=n+1]]}, columns j = 0..n-1.
    std::string to_json_string() const;

    friend bool operator==(const XMatrix&, const XMatrix&) = default;

private:
    std::size_t slot(int i, int j) const;

    int rank_ = 0;
    std::vector<long long> m_;
};

/// X_i(m) = Y_{i-1}(m+1)^{-1} Y_i(m) with the boundary variables dropped, so
/// X_1(m) = Y_1(m) and X_{rank+1}(m) = Y_rank(m+1)^{-1}. i in 1..rank+1.
Monomial x_var(int rank, int i, int level);

/// The unique integer grid whose X-product equals M, solved along
/// anti-diagonals; empty when M has support at levels outside 0..rank.
std::optional<XMatrix> x_factorize(const Monomial& m);

/// One paired factor Y_a(m)^{-1} Y_b(n) with a + m = b + n and a < b.
struct YPair {
    int a = 0;
    int m = 0;
    int b = 0;
    int n = 0;

    friend bool operator==(const YPair&, const YPair&) = default;
    friend auto operator<=>(const YPair&, const YPair&) = default;
};

/// A monomial written as a product of pairs; the written form on which the
/// paired characterization is evaluated.
class PairDecomposition {
public:
    /// Validates every pair: 0 <= a < b <= rank+1 and a + m = b + n.
    PairDecomposition(int rank, std::vector<YPair> pairs);

    int rank() const { return rank_; }
    const std::vector<YPair>& pairs() const { return pairs_; }
    Monomial product() const;

private:
    int rank_ = 0;
    std::vector<YPair> pairs_;
};

/// Canonical pairing of a nonnegative grid: on each anti-diagonal the column
/// multiplicities decompose into level sets of maximal consecutive runs, and
/// a run over rows a+1..b at diagonal d becomes the pair Y_a(d-a)^{-1} Y_b(d-b).
/// Pairs are returned sorted. Negative entries are a domain error.
PairDecomposition pair_decomposition(const XMatrix& x);

/// Weakly decreasing integer sequence; construction validates monotonicity.
class DecreasingSeq {
public:
    DecreasingSeq() = default;
    explicit DecreasingSeq(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const DecreasingSeq&, const DecreasingSeq&) = default;

private:
    std::vector<int> entries_;
};

/// Strict entrywise domination: p precedes q when p is no longer than q and
/// every entry of p is strictly below the matching entry of q.
bool precedes(const DecreasingSeq& p, const DecreasingSeq& q);

/// Descending b's of the pairs whose positive factor sits at level k.
DecreasingSeq lambda_plus(const PairDecomposition& d, int k);
/// Descending a's of the pairs whose negative factor sits at level k.
DecreasingSeq lambda_minus(const PairDecomposition& d, int k);

/// Membership in the fundamental crystal of the k-th fundamental weight via
/// the X-grid: one unit entry per column k-1..0 with strictly increasing row
/// indices as the column descends.
bool is_member_fundamental(const Monomial& m, int k);

/// The same predicate evaluated on the paired Y-form directly; an
/// independent route kept for cross-validation.
bool is_member_fundamental_pairform(const Monomial& m, int k);

/// Membership in the connected crystal of dominant `lambda` via the exponent
/// grid: solvable, nonnegative, zero pattern, column sums matching the
/// partial sums of lambda, and nested column-tail inequalities.
bool is_member(const Monomial& m, const Weight& lambda);

/// The paired-form characterization evaluated literally on a given
/// decomposition: drops outside the level window fail; otherwise the plus
/// sequence must precede the minus sequence in every interior level and the
/// pair counts must differ by the matching coefficient of lambda.
bool is_member_theorem(const PairDecomposition& d, const Weight& lambda);

}  // namespace crystal
