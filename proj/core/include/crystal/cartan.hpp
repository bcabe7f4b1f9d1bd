#pragma once

// Weight-lattice bookkeeping for the type A_n root system: integral weights
// in the fundamental-weight basis, simple roots as columns of the Cartan
// matrix, and an exact dimension count for dominant weights.

#include <compare>
#include <string>
#include <vector>

namespace crystal {

/// Integral weight written in the fundamental-weight basis; entry k is the
/// coefficient of the k-th fundamental weight (k = 1..rank).
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

    static Weight zero(int rank);
    /// The k-th fundamental weight, k in 1..rank.
    static Weight fundamental(int rank, int k);
    /// Parses "a1,a2,...,an"; entries may be negative.
    static Weight parse(const std::string& text, int rank);

    int rank() const { return static_cast<int>(coeffs_.size()); }

    /// Coefficient of the k-th fundamental weight; throws std::out_of_range
    /// unless 1 <= k <= rank.
    int coeff(int k) const;

    /// Pairing with the i-th simple coroot. In this basis that is just the
    /// i-th coefficient.
    int pairing(int i) const { return coeff(i); }

    bool is_zero() const;
    bool is_dominant() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string to_string() const;

private:
    std::vector<int> coeffs_;
};

/// The A_n Cartan datum for sl_{n+1}; matrix entries are derived on demand.
class CartanDatum {
public:
    explicit CartanDatum(int rank);

    int rank() const { return rank_; }

    /// Cartan matrix entry a_ij for i, j in 1..rank.
    int entry(int i, int j) const;

    /// <h_i, w>; range-checked.
    int pairing(const Weight& w, int i) const;

    /// The i-th simple root in the fundamental-weight basis, i.e. the i-th
    /// column of the Cartan matrix.
    Weight simple_root(int i) const;

    /// Dimension of the irreducible module with dominant highest weight
    /// `lambda`, equal to the number of semistandard tableaux of the
    /// corresponding shape with entries at most rank+1. Exact integer
    /// arithmetic; throws std::domain_error for non-dominant weights and
    /// std::overflow_error if the product leaves 64 bits.
    unsigned long long weyl_dim(const Weight& lambda) const;

private:
    int rank_;
};

}  // namespace crystal
