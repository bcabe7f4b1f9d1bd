#include "crystal/tableaux.hpp"

#include "crystal/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace crystal {

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r] <= 0) throw std::domain_error("shape rows must be positive");
        if (r > 0 && rows_[r - 1] < rows_[r])
            throw std::domain_error("shape rows must weakly decrease");
    }
}

Shape Shape::of_weight(const Weight& lambda) {
    if (!lambda.is_dominant())
        throw std::domain_error("shape needs a dominant weight, got " + lambda.to_string());
    std::vector<int> rows;
    int tail = 0;
    for (int i = lambda.rank(); i >= 1; --i) {
        tail += lambda.coeff(i);
        rows.push_back(tail);
    }
    std::reverse(rows.begin(), rows.end());
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Shape(std::move(rows));
}

int Shape::boxes() const {
    int total = 0;
    for (int r : rows_) total += r;
    return total;
}

int Shape::column_length(int c) const {
    int len = 0;
    for (int r : rows_)
        if (r > c) ++len;
    return len;
}

Tableau::Tableau(int rank, Orientation orientation, std::vector<std::vector<int>> rows)
    : rank_(rank), orientation_(orientation), rows_(std::move(rows)) {
    if (rank < 1) throw std::domain_error("rank must be positive");
    std::vector<int> lengths;
    lengths.reserve(rows_.size());
    for (const auto& row : rows_) {
        if (row.empty()) throw std::domain_error("tableau rows must be nonempty");
        for (int v : row)
            if (v < 1 || v > rank + 1)
                throw std::domain_error("entry " + std::to_string(v) + " outside 1.." +
                                        std::to_string(rank + 1));
        lengths.push_back(static_cast<int>(row.size()));
    }
    shape_ = Shape(std::move(lengths));  // rejects non-decreasing grids
}

Tableau Tableau::highest(const Weight& lambda, Orientation orientation) {
    const Shape shape = Shape::of_weight(lambda);
    std::vector<std::vector<int>> rows;
    if (orientation == Orientation::standard) {
        for (int r = 0; r < shape.num_rows(); ++r)
            rows.emplace_back(static_cast<std::size_t>(shape.row(r)), r + 1);
    } else {
        for (int r = 0; r < shape.num_rows(); ++r) {
            std::vector<int> row;
            for (int i = 1; i + r <= lambda.rank(); ++i)
                row.insert(row.end(), static_cast<std::size_t>(lambda.coeff(i + r)), i);
            rows.push_back(std::move(row));
        }
    }
    return Tableau(lambda.rank(), orientation, std::move(rows));
}

bool Tableau::is_semistandard() const {
    for (const auto& row : rows_)
        for (std::size_t k = 1; k < row.size(); ++k)
            if (row[k - 1] > row[k]) return false;

    if (orientation_ == Orientation::standard) {
        // columns counted from the left; row r sits above row r+1
        for (std::size_t r = 0; r + 1 < rows_.size(); ++r)
            for (std::size_t c = 0; c < rows_[r + 1].size(); ++c)
                if (rows_[r][c] >= rows_[r + 1][c]) return false;
    } else {
        // columns counted from the right; row r+1 sits above row r
        for (std::size_t r = 0; r + 1 < rows_.size(); ++r) {
            const auto& below = rows_[r];
            const auto& above = rows_[r + 1];
            for (std::size_t c = 0; c < above.size(); ++c) {
                int above_entry = above[above.size() - 1 - c];
                int below_entry = below[below.size() - 1 - c];
                if (above_entry >= below_entry) return false;
            }
        }
    }
    return true;
}

std::vector<Tableau::Cell> Tableau::reading_cells() const {
    std::vector<Cell> cells;
    if (orientation_ == Orientation::standard) {
        for (int c = shape_.width() - 1; c >= 0; --c)
            for (int r = 0; r < shape_.num_rows() && shape_.row(r) > c; ++r)
                cells.push_back(Cell{r, c});
    } else {
        for (int c = 0; c < shape_.width(); ++c)
            for (int r = shape_.column_length(c) - 1; r >= 0; --r)
                cells.push_back(Cell{r, shape_.row(r) - 1 - c});
    }
    return cells;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (const Cell& cell : reading_cells()) word.push_back(entry(cell.row, cell.pos));
    return word;
}

Weight Tableau::weight() const {
    std::vector<int> content(static_cast<std::size_t>(rank_) + 2, 0);
    for (const auto& row : rows_)
        for (int v : row) ++content[static_cast<std::size_t>(v)];
    std::vector<int> coeffs(static_cast<std::size_t>(rank_), 0);
    for (int i = 1; i <= rank_; ++i)
        coeffs[static_cast<std::size_t>(i - 1)] =
            content[static_cast<std::size_t>(i)] - content[static_cast<std::size_t>(i) + 1];
    return Weight(std::move(coeffs));
}

WordProfile Tableau::color_profile(int i) const {
    if (i < 1 || i > rank_)
        throw std::out_of_range("color " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank_));
    std::vector<LetterStats> stats;
    for (const Cell& cell : reading_cells()) {
        const int v = entry(cell.row, cell.pos);
        stats.push_back(LetterStats{v == i + 1 ? 1 : 0, v == i ? 1 : 0,
                                    (v == i ? 1 : 0) - (v == i + 1 ? 1 : 0)});
    }
    return word_profile(stats);
}

int Tableau::phi(int i) const { return color_profile(i).phi; }

int Tableau::epsilon(int i) const { return color_profile(i).eps; }

std::optional<Tableau> Tableau::f_tilde(int i) const {
    auto pos = color_profile(i).f_pos;
    if (!pos) return std::nullopt;
    const Cell cell = reading_cells()[*pos];
    auto rows = rows_;
    int& value = rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.pos)];
    assert(value == i);
    value = i + 1;
    Tableau next(rank_, orientation_, std::move(rows));
    if (!next.is_semistandard())
        throw std::logic_error("lowering operator broke semistandardness at color " +
                               std::to_string(i) + " of " + canonical_string());
    return next;
}

std::optional<Tableau> Tableau::e_tilde(int i) const {
    auto pos = color_profile(i).e_pos;
    if (!pos) return std::nullopt;
    const Cell cell = reading_cells()[*pos];
    auto rows = rows_;
    int& value = rows[static_cast<std::size_t>(cell.row)][static_cast<std::size_t>(cell.pos)];
    assert(value == i + 1);
    value = i;
    Tableau next(rank_, orientation_, std::move(rows));
    if (!next.is_semistandard())
        throw std::logic_error("raising operator broke semistandardness at color " +
                               std::to_string(i) + " of " + canonical_string());
    return next;
}

std::string Tableau::canonical_string() const {
    std::string s = orientation_ == Orientation::reverse ? "r:" : "";
    if (rows_.empty()) return s + "-";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0) s += '/';
        for (std::size_t k = 0; k < rows_[r].size(); ++k) {
            if (k > 0) s += ',';
            s += std::to_string(rows_[r][k]);
        }
    }
    return s;
}

std::string Tableau::to_ascii() const {
    if (rows_.empty()) return "(empty)\n";
    int digits = 1;
    for (const auto& row : rows_)
        for (int v : row) digits = std::max(digits, static_cast<int>(std::to_string(v).size()));
    std::ostringstream os;
    auto emit = [&](const std::vector<int>& row, bool right_justify) {
        const int missing = shape_.width() - static_cast<int>(row.size());
        if (right_justify)
            for (int k = 0; k < missing; ++k) os << std::string(static_cast<std::size_t>(digits), ' ') << ' ';
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::string v = std::to_string(row[k]);
            os << std::string(static_cast<std::size_t>(digits) - v.size(), ' ') << v;
            if (k + 1 < row.size()) os << ' ';
        }
        os << '\n';
    };
    if (orientation_ == Orientation::standard) {
        for (const auto& row : rows_) emit(row, false);
    } else {
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) emit(*it, true);
    }
    return os.str();
}

std::string Tableau::to_json_string() const {
    nlohmann::json j;
    j["orientation"] = orientation_ == Orientation::standard ? "standard" : "reverse";
    j["rows"] = rows_;
    return j.dump();
}

Tableau Tableau::from_json_string(const std::string& text, int rank) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid tableau JSON: ") + e.what(),
                         e.byte > 0 ? static_cast<std::size_t>(e.byte - 1) : 0);
    }
    try {
        const std::string orient = j.at("orientation").get<std::string>();
        if (orient != "standard" && orient != "reverse")
            throw ParseError("orientation must be \"standard\" or \"reverse\"", 0);
        auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
        return Tableau(rank, orient == "standard" ? Orientation::standard : Orientation::reverse,
                       std::move(rows));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid tableau JSON: ") + e.what(), 0);
    }
}

namespace {

void fill_ssyt(const Shape& shape, int max_entry, std::vector<std::vector<int>>& grid, int r, int c,
               const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    if (r == shape.num_rows()) {
        fn(grid);
        return;
    }
    const auto [next_r, next_c] =
        c + 1 < shape.row(r) ? std::pair(r, c + 1) : std::pair(r + 1, 0);
    int low = 1;
    if (c > 0) low = std::max(low, grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && shape.row(r - 1) > c)
        low = std::max(low, grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = low; v <= max_entry; ++v) {
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        fill_ssyt(shape, max_entry, grid, next_r, next_c, fn);
    }
}

}  // namespace

void for_each_ssyt(const Shape& shape, int max_entry,
                   const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    std::vector<std::vector<int>> grid;
    for (int r = 0; r < shape.num_rows(); ++r)
        grid.emplace_back(static_cast<std::size_t>(shape.row(r)), 0);
    fill_ssyt(shape, max_entry, grid, 0, 0, fn);
}

unsigned long long count_ssyt(const Shape& shape, int max_entry) {
    unsigned long long count = 0;
    for_each_ssyt(shape, max_entry, [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

}  // namespace crystal
