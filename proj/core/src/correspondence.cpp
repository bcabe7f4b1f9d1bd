#include "crystal/correspondence.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace crystal {

namespace {

void require_orientation(const Tableau& t, Orientation expected, const char* what) {
    if (t.orientation() != expected)
        throw std::domain_error(std::string(what) + " expects a " +
                                (expected == Orientation::reverse ? "reverse" : "standard") +
                                " tableau");
    if (!t.is_semistandard())
        throw std::domain_error(std::string(what) + " expects a semistandard tableau, got " +
                                t.canonical_string());
}

/// Schensted row insertion: place the value at the end of the first row if
/// it fits, otherwise displace the leftmost strictly larger entry downward.
void row_insert(std::vector<std::vector<int>>& rows, int value) {
    for (auto& row : rows) {
        auto it = std::upper_bound(row.begin(), row.end(), value);
        if (it == row.end()) {
            row.push_back(value);
            return;
        }
        std::swap(*it, value);
    }
    rows.push_back({value});
}

/// Inverse step: remove the last box of stored row `r` and bump its value
/// back up, returning what pops out of the first row.
int reverse_bump(std::vector<std::vector<int>>& rows, std::size_t r) {
    int value = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    for (std::size_t above = r; above-- > 0;) {
        auto& row = rows[above];
        // rightmost entry strictly below the incoming value
        auto it = std::lower_bound(row.begin(), row.end(), value);
        assert(it != row.begin());
        --it;
        std::swap(*it, value);
    }
    return value;
}

}  // namespace

Tableau psi(const Monomial& m, const Weight& lambda) {
    if (!is_member(m, lambda))
        throw std::domain_error(m.to_string() + " is not a member for weight " +
                                lambda.to_string());
    auto x = x_factorize(m);
    assert(x.has_value());
    const int n = m.rank();
    std::vector<std::vector<int>> rows;
    for (int j = 0; j <= n - 1; ++j) {
        std::vector<int> row;
        for (int i = 1; i <= n + 1; ++i)
            row.insert(row.end(), static_cast<std::size_t>(x->at(i, j)), i);
        if (row.empty()) break;  // columns above are empty as well
        rows.push_back(std::move(row));
    }
    Tableau result(n, Orientation::reverse, std::move(rows));
    assert(result.shape() == Shape::of_weight(lambda));
    assert(result.is_semistandard());
    return result;
}

Monomial psi_inverse(const Tableau& reverse_tableau) {
    require_orientation(reverse_tableau, Orientation::reverse, "psi_inverse");
    Monomial m = Monomial::one(reverse_tableau.rank());
    const auto& rows = reverse_tableau.rows();
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (int i : rows[j]) m *= x_var(reverse_tableau.rank(), i, static_cast<int>(j));
    return m;
}

Tableau varphi(const Tableau& reverse_tableau) {
    require_orientation(reverse_tableau, Orientation::reverse, "varphi");
    const Shape& shape = reverse_tableau.shape();
    std::vector<std::vector<int>> inserted;
    // columns left to right are offsets width-1 down to 0 from the right edge
    for (int c = shape.width() - 1; c >= 0; --c) {
        for (int r = 0; r < shape.column_length(c); ++r)
            row_insert(inserted, reverse_tableau.entry(r, shape.row(r) - 1 - c));
    }
    Tableau result(reverse_tableau.rank(), Orientation::standard, std::move(inserted));
    if (result.shape() != shape)
        throw std::logic_error("insertion changed the shape: " + reverse_tableau.canonical_string() +
                               " -> " + result.canonical_string());
    assert(result.is_semistandard());
    return result;
}

ExtractionTrace varphi_inverse_trace(const Tableau& standard_tableau) {
    require_orientation(standard_tableau, Orientation::standard, "varphi_inverse");
    const Shape shape = standard_tableau.shape();
    const int rank = standard_tableau.rank();

    auto rows = standard_tableau.rows();
    ExtractionTrace trace{Tableau(rank, Orientation::reverse, {}), {}};
    std::vector<std::vector<int>> columns(static_cast<std::size_t>(shape.width()));

    // Undo the insertions column by column, rightmost (inserted last) first.
    // Each column of height h removed one box from every row 1..h, deepest
    // last, so extraction pops rows h down to 1 and the values come out in
    // increasing order, rebuilding the column top to bottom.
    for (int c = 0; c < shape.width(); ++c) {
        const int height = shape.column_length(c);
        std::vector<int>& column = columns[static_cast<std::size_t>(c)];
        for (int r = height; r >= 1; --r) {
            if (static_cast<int>(rows.size()) < r || rows[static_cast<std::size_t>(r - 1)].empty())
                throw std::logic_error("extraction ran out of boxes in row " + std::to_string(r));
            if (r < static_cast<int>(rows.size()) &&
                rows[static_cast<std::size_t>(r - 1)].size() <= rows[static_cast<std::size_t>(r)].size())
                throw std::logic_error("extraction hit a non-removable box in row " + std::to_string(r));
            int value = reverse_bump(rows, static_cast<std::size_t>(r - 1));
            if (!column.empty() && column.back() >= value)
                throw std::logic_error("extracted column is not strictly increasing");
            column.push_back(value);
            trace.popped.push_back(value);
        }
    }
    if (!rows.empty()) throw std::logic_error("extraction left boxes behind");

    // Assemble the reverse tableau: the column at offset c from the right
    // edge contributes its k-th entry from the bottom to stored row k.
    std::vector<std::vector<int>> reverse_rows;
    for (int r = 0; r < shape.num_rows(); ++r) {
        std::vector<int> row;
        for (int c = shape.row(r) - 1; c >= 0; --c) {
            const auto& column = columns[static_cast<std::size_t>(c)];
            row.push_back(column[column.size() - 1 - static_cast<std::size_t>(r)]);
        }
        reverse_rows.push_back(std::move(row));
    }
    trace.reverse_tableau = Tableau(rank, Orientation::reverse, std::move(reverse_rows));
    if (!trace.reverse_tableau.is_semistandard())
        throw std::logic_error("extraction produced a non-semistandard tableau: " +
                               trace.reverse_tableau.canonical_string());
    return trace;
}

Tableau varphi_inverse(const Tableau& standard_tableau) {
    return varphi_inverse_trace(standard_tableau).reverse_tableau;
}

Tableau phi_map(const Monomial& m, const Weight& lambda) { return varphi(psi(m, lambda)); }

}  // namespace crystal
