#pragma once

// Single-box letters (the vector representation crystal, values 1..rank+1)
// and the prefix machinery that applies the tensor-product rule along a word
// of letters. Tableaux reuse this through their reading words.

#include "crystal/cartan.hpp"

#include <cassert>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

/// Basis element of the rank+1 dimensional vector representation crystal:
/// a chain 1 -> 2 -> ... -> rank+1 where the arrow of color i turns i into i+1.
class Letter {
public:
    Letter(int rank, int value) : rank_(rank), value_(value) {
        if (rank < 1) throw std::domain_error("rank must be positive");
        if (value < 1 || value > rank + 1)
            throw std::out_of_range("letter " + std::to_string(value) + " outside 1.." +
                                    std::to_string(rank + 1));
    }

    int rank() const { return rank_; }
    int value() const { return value_; }

    Weight weight() const {
        std::vector<int> coeffs(static_cast<std::size_t>(rank_), 0);
        if (value_ <= rank_) coeffs[static_cast<std::size_t>(value_ - 1)] += 1;
        if (value_ >= 2) coeffs[static_cast<std::size_t>(value_ - 2)] -= 1;
        return Weight(std::move(coeffs));
    }

    int phi(int i) const { return value_ == i ? 1 : 0; }
    int epsilon(int i) const { return value_ == i + 1 ? 1 : 0; }

    std::optional<Letter> f_tilde(int i) const {
        if (value_ != i) return std::nullopt;
        return Letter(rank_, value_ + 1);
    }
    std::optional<Letter> e_tilde(int i) const {
        if (value_ != i + 1) return std::nullopt;
        return Letter(rank_, value_ - 1);
    }

    std::string canonical_string() const { return std::to_string(value_); }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

private:
    int rank_;
    int value_;
};

/// Per-letter data in one fixed color: the letter's epsilon and phi and the
/// coroot pairing of its weight.
struct LetterStats {
    int eps = 0;
    int phi = 0;
    int h = 0;
};

/// The statistics of the whole word and, when an operator applies, the index
/// (0-based) of the letter it acts on under the left-nested tensor rule:
/// the lowering operator acts on the left factor when phi(left) > eps(right),
/// the raising operator when phi(left) >= eps(right).
struct WordProfile {
    int phi = 0;
    int eps = 0;
    std::optional<std::size_t> f_pos;
    std::optional<std::size_t> e_pos;
};

inline WordProfile word_profile(std::span<const LetterStats> letters) {
    const std::size_t n = letters.size();
    std::vector<int> prefix_phi(n + 1, 0), prefix_eps(n + 1, 0);
    int h_sum = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const LetterStats& b = letters[k - 1];
        prefix_eps[k] = std::max(prefix_eps[k - 1], b.eps - h_sum);
        prefix_phi[k] = std::max(b.phi, prefix_phi[k - 1] + b.h);
        h_sum += b.h;
    }

    WordProfile out;
    out.phi = prefix_phi[n];
    out.eps = prefix_eps[n];
    if (out.phi > 0) {
        std::size_t k = n;
        while (k >= 2 && prefix_phi[k - 1] > letters[k - 1].eps) --k;
        out.f_pos = k - 1;
    }
    if (out.eps > 0) {
        std::size_t k = n;
        while (k >= 2 && prefix_phi[k - 1] >= letters[k - 1].eps) --k;
        out.e_pos = k - 1;
    }
    return out;
}

inline LetterStats letter_stats(const Letter& b, int i) {
    return LetterStats{b.epsilon(i), b.phi(i), b.weight().pairing(i)};
}

/// A word of letters carrying the left-nested tensor structure. This is the
/// crystal of the full tensor power; it doubles as an independent route for
/// checking pairwise tensor nesting.
class LetterWord {
public:
    LetterWord(int rank, std::vector<Letter> letters) : rank_(rank), letters_(std::move(letters)) {
        for (const Letter& b : letters_)
            if (b.rank() != rank_) throw std::invalid_argument("letter rank mismatch");
    }

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }

    Weight weight() const {
        Weight w = Weight::zero(rank_);
        for (const Letter& b : letters_) w += b.weight();
        return w;
    }

    int phi(int i) const { return profile(i).phi; }
    int epsilon(int i) const { return profile(i).eps; }

    std::optional<LetterWord> f_tilde(int i) const {
        auto pos = profile(i).f_pos;
        if (!pos) return std::nullopt;
        LetterWord next = *this;
        auto image = next.letters_[*pos].f_tilde(i);
        assert(image.has_value());
        next.letters_[*pos] = *image;
        return next;
    }

    std::optional<LetterWord> e_tilde(int i) const {
        auto pos = profile(i).e_pos;
        if (!pos) return std::nullopt;
        LetterWord next = *this;
        auto image = next.letters_[*pos].e_tilde(i);
        assert(image.has_value());
        next.letters_[*pos] = *image;
        return next;
    }

    std::string canonical_string() const {
        std::string s;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            if (k > 0) s += '.';
            s += letters_[k].canonical_string();
        }
        return s.empty() ? "()" : s;
    }

    friend bool operator==(const LetterWord&, const LetterWord&) = default;
    friend auto operator<=>(const LetterWord&, const LetterWord&) = default;

private:
    WordProfile profile(int i) const {
        std::vector<LetterStats> stats;
        stats.reserve(letters_.size());
        for (const Letter& b : letters_) stats.push_back(letter_stats(b, i));
        return word_profile(stats);
    }

    int rank_;
    std::vector<Letter> letters_;
};

}  // namespace crystal
