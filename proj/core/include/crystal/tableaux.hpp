#pragma once

// Semistandard tableaux in two orientations: the usual top-aligned,
// left-justified filling and the reflected bottom-aligned, right-justified
// one. Crystal operators act through the reading word via the tensor rule
// over single-box letters.

#include "crystal/cartan.hpp"
#include "crystal/letters.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crystal {

/// Row lengths, weakly decreasing. The shape of a dominant weight has i-th
/// row a_i + a_{i+1} + ... + a_n.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> rows);

    static Shape of_weight(const Weight& lambda);

    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row(int r) const { return rows_.at(static_cast<std::size_t>(r)); }  // 0-based
    int width() const { return rows_.empty() ? 0 : rows_.front(); }
    int boxes() const;
    /// Number of rows of length > c; the height of the c-th column.
    int column_length(int c) const;
    const std::vector<int>& rows() const { return rows_; }

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;

private:
    std::vector<int> rows_;
};

enum class Orientation { standard, reverse };

/// Filled diagram with entries in 1..rank+1. Standard rows are stored
/// top-to-bottom and left-justified; reverse rows bottom-to-top and
/// right-justified, so rows_[0] is always the longest row.
class Tableau {
public:
    Tableau(int rank, Orientation orientation, std::vector<std::vector<int>> rows);

    /// The filling every raising operator kills: row i of the standard
    /// orientation holds i throughout; row r of the reverse orientation
    /// holds i with multiplicity lambda's coefficient at i + r - 1.
    static Tableau highest(const Weight& lambda, Orientation orientation);

    int rank() const { return rank_; }
    Orientation orientation() const { return orientation_; }
    const Shape& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int entry(int r, int pos) const { return rows_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(pos)); }
    bool empty() const { return rows_.empty(); }

    /// Both monotonicity conditions for this orientation: rows weakly
    /// increase along the reading direction, columns strictly increase
    /// downward.
    bool is_semistandard() const;

    /// Letters column by column from the right, top to bottom within a
    /// column, for either orientation.
    std::vector<int> reading_word() const;

    Weight weight() const;
    int phi(int i) const;
    int epsilon(int i) const;
    std::optional<Tableau> f_tilde(int i) const;
    std::optional<Tableau> e_tilde(int i) const;

    std::string canonical_string() const;
    std::string to_ascii() const;
    /// {"orientation": ..., "rows": [[...], ...]} with rows as stored.
    std::string to_json_string() const;
    static Tableau from_json_string(const std::string& text, int rank);

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    struct Cell {
        int row;
        int pos;
    };
    std::vector<Cell> reading_cells() const;
    WordProfile color_profile(int i) const;

    int rank_ = 0;
    Orientation orientation_ = Orientation::standard;
    Shape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Runs `fn` on every semistandard filling of `shape` with entries at most
/// `max_entry`, built by direct backtracking over the monotonicity
/// constraints. Independent of the crystal operators; serves as the counting
/// and weight-multiplicity oracle.
void for_each_ssyt(const Shape& shape, int max_entry,
                   const std::function<void(const std::vector<std::vector<int>>&)>& fn);

unsigned long long count_ssyt(const Shape& shape, int max_entry);

}  // namespace crystal
