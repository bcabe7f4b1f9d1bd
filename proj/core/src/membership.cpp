#include "crystal/membership.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace crystal {

XMatrix::XMatrix(int rank) : rank_(rank) {
    if (rank < 1) throw std::domain_error("rank must be positive");
    m_.assign(static_cast<std::size_t>(rank + 1) * static_cast<std::size_t>(rank), 0);
}

std::size_t XMatrix::slot(int i, int j) const {
    if (i < 1 || i > rank_ + 1)
        throw std::out_of_range("row " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank_ + 1));
    if (j < 0 || j > rank_ - 1)
        throw std::out_of_range("column " + std::to_string(j) + " out of range 0.." +
                                std::to_string(rank_ - 1));
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(j);
}

long long XMatrix::at(int i, int j) const { return m_[slot(i, j)]; }

void XMatrix::set(int i, int j, long long value) { m_[slot(i, j)] = value; }

bool XMatrix::all_nonnegative() const {
    return std::all_of(m_.begin(), m_.end(), [](long long v) { return v >= 0; });
}

bool XMatrix::zero_pattern_holds() const {
    for (int i = 1; i <= rank_ + 1; ++i)
        for (int j = 0; j <= rank_ - 1; ++j)
            if (i + j >= rank_ + 2 && at(i, j) != 0) return false;
    return true;
}

long long XMatrix::column_sum(int j) const {
    long long sum = 0;
    for (int i = 1; i <= rank_ + 1; ++i) sum += at(i, j);
    return sum;
}

Monomial XMatrix::expand() const {
    Monomial result(rank_);
    for (int i = 1; i <= rank_ + 1; ++i)
        for (int j = 0; j <= rank_ - 1; ++j)
            if (long long e = at(i, j); e != 0)
                result *= x_var(rank_, i, j).pow(static_cast<int>(e));
    return result;
}

std::string XMatrix::to_ascii() const {
    std::ostringstream os;
    for (int i = 1; i <= rank_ + 1; ++i) {
        for (int j = 0; j <= rank_ - 1; ++j) {
            if (j > 0) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::string XMatrix::to_json_string() const {
    nlohmann::json j;
    j["rank"] = rank_;
    j["m"] = nlohmann::json::array();
    for (int i = 1; i <= rank_ + 1; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c <= rank_ - 1; ++c) row.push_back(at(i, c));
        j["m"].push_back(std::move(row));
    }
    return j.dump();
}

Monomial x_var(int rank, int i, int level) {
    if (i < 1 || i > rank + 1)
        throw std::out_of_range("x-variable index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank + 1));
    Monomial m = Monomial::one(rank);
    m *= Monomial::y(rank, i - 1, level + 1, -1);
    m *= Monomial::y(rank, i, level, 1);
    return m;
}

std::optional<XMatrix> x_factorize(const Monomial& m) {
    const int n = m.rank();
    for (const YFactor& f : m.factors())
        if (f.level < 0 || f.level > n) return std::nullopt;

    // The Y-exponent of Y_i(l) equals m_{i,l} - m_{i+1,l-1}; each
    // anti-diagonal i + j = d of the grid is a triangular chain. For d <= n
    // the chain closes at the bottom (m_{d,0} alone), for d > n it closes at
    // the top against the absent column j = n.
    XMatrix x(n);
    for (int d = 1; d <= 2 * n; ++d) {
        if (d <= n) {
            long long below = 0;  // m_{i+1, d-i-1}
            for (int i = d; i >= 1; --i) {
                long long v = m.exponent_of(i, d - i) + below;
                x.set(i, d - i, v);
                below = v;
            }
        } else {
            long long above = 0;  // m_{i, d-i}, starting at the forced zero row
            for (int i = d - n; i <= n; ++i) {
                long long v = above - m.exponent_of(i, d - i);
                x.set(i + 1, d - i - 1, v);
                above = v;
            }
        }
    }
    assert(x.expand() == m);
    return x;
}

PairDecomposition::PairDecomposition(int rank, std::vector<YPair> pairs)
    : rank_(rank), pairs_(std::move(pairs)) {
    if (rank < 1) throw std::domain_error("rank must be positive");
    for (const YPair& p : pairs_) {
        if (!(0 <= p.a && p.a < p.b && p.b <= rank_ + 1))
            throw std::domain_error("pair indices must satisfy 0 <= a < b <= rank+1");
        if (p.a + p.m != p.b + p.n)
            throw std::domain_error("pair levels must satisfy a + m = b + n");
    }
}

Monomial PairDecomposition::product() const {
    Monomial result(rank_);
    for (const YPair& p : pairs_) {
        result *= Monomial::y(rank_, p.a, p.m, -1);
        result *= Monomial::y(rank_, p.b, p.n, 1);
    }
    return result;
}

PairDecomposition pair_decomposition(const XMatrix& x) {
    if (!x.all_nonnegative())
        throw std::domain_error("pair decomposition needs a nonnegative grid");
    const int n = x.rank();
    std::vector<YPair> pairs;
    for (int d = 1; d <= 2 * n; ++d) {
        std::vector<int> open;  // run start rows, most recent last
        long long prev = 0;
        auto close_runs = [&](long long count, int end_row) {
            for (long long c = 0; c < count; ++c) {
                int start = open.back();
                open.pop_back();
                pairs.push_back(YPair{start - 1, d - (start - 1), end_row, d - end_row});
            }
        };
        const int lo = std::max(1, d - (n - 1));
        const int hi = std::min(n + 1, d);
        for (int i = lo; i <= hi; ++i) {
            long long v = x.at(i, d - i);
            if (v > prev)
                for (long long c = prev; c < v; ++c) open.push_back(i);
            else if (v < prev)
                close_runs(prev - v, i - 1);
            prev = v;
        }
        close_runs(prev, hi);
    }
    std::sort(pairs.begin(), pairs.end());
    return PairDecomposition(n, std::move(pairs));
}

DecreasingSeq::DecreasingSeq(std::vector<int> entries) : entries_(std::move(entries)) {
    for (std::size_t k = 1; k < entries_.size(); ++k)
        if (entries_[k - 1] < entries_[k])
            throw std::domain_error("sequence is not weakly decreasing");
}

bool precedes(const DecreasingSeq& p, const DecreasingSeq& q) {
    if (p.size() > q.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p.entries()[k] >= q.entries()[k]) return false;
    return true;
}

namespace {

DecreasingSeq sorted_desc(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return DecreasingSeq(std::move(values));
}

}  // namespace

DecreasingSeq lambda_plus(const PairDecomposition& d, int k) {
    std::vector<int> values;
    for (const YPair& p : d.pairs())
        if (p.n == k) values.push_back(p.b);
    return sorted_desc(std::move(values));
}

DecreasingSeq lambda_minus(const PairDecomposition& d, int k) {
    std::vector<int> values;
    for (const YPair& p : d.pairs())
        if (p.m == k) values.push_back(p.a);
    return sorted_desc(std::move(values));
}

bool is_member_fundamental(const Monomial& m, int k) {
    const int n = m.rank();
    if (k < 1 || k > n)
        throw std::out_of_range("fundamental index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(n));
    auto x = x_factorize(m);
    if (!x) return false;
    int prev_row = 0;
    for (int j = n - 1; j >= 0; --j) {
        int unit_row = -1;
        long long sum = 0;
        for (int i = 1; i <= n + 1; ++i) {
            long long v = x->at(i, j);
            if (v < 0 || v > 1) return false;
            sum += v;
            if (v == 1) unit_row = i;
        }
        if (j >= k) {
            if (sum != 0) return false;
        } else {
            if (sum != 1) return false;
            if (unit_row <= prev_row) return false;
            prev_row = unit_row;
        }
    }
    return true;
}

bool is_member_fundamental_pairform(const Monomial& m, int k) {
    const int n = m.rank();
    if (k < 1 || k > n)
        throw std::out_of_range("fundamental index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(n));

    // Read the written pair chain off the stored factors. Every exponent must
    // be a bare +-1; the boundary variables at index 0 and n+1 are invisible,
    // so the chain may need a leading a_1 = 0 at level k and a trailing
    // b_r = n+1 at level 0.
    std::vector<std::pair<int, int>> neg, pos;  // (index, level), index-ascending
    for (const YFactor& f : m.factors()) {
        if (f.exponent == -1)
            neg.emplace_back(f.index, f.level);
        else if (f.exponent == 1)
            pos.emplace_back(f.index, f.level);
        else
            return false;
    }
    std::sort(neg.begin(), neg.end());
    std::sort(pos.begin(), pos.end());

    auto chain_ok = [&](std::vector<std::pair<int, int>> a, std::vector<std::pair<int, int>> b) {
        const std::size_t r = a.size();
        if (b.size() != r || r == 0 || static_cast<int>(r) > k) return false;
        // interleaving 0 <= a_1 < b_1 < a_2 < ... < a_r < b_r <= n+1
        for (std::size_t t = 0; t < r; ++t) {
            if (a[t].first >= b[t].first) return false;
            if (t + 1 < r && b[t].first >= a[t + 1].first) return false;
        }
        if (a.front().first < 0 || b.back().first > n + 1) return false;
        // levels k = m_0 > m_1 > ... > m_r = 0 with m_{t-1} attached to a_t
        // and m_t to b_t, tied by a_t + m_{t-1} = b_t + m_t
        if (a.front().second != k || b.back().second != 0) return false;
        for (std::size_t t = 0; t < r; ++t) {
            if (a[t].first + a[t].second != b[t].first + b[t].second) return false;
            if (a[t].second <= b[t].second) return false;
            if (t + 1 < r && b[t].second != a[t + 1].second) return false;
        }
        return true;
    };

    const std::size_t p = pos.size(), q = neg.size();
    if (p == q + 1) {
        neg.insert(neg.begin(), {0, k});
        return chain_ok(std::move(neg), std::move(pos));
    }
    if (q == p + 1) {
        pos.push_back({n + 1, 0});
        return chain_ok(std::move(neg), std::move(pos));
    }
    if (p == q) {
        if (chain_ok(neg, pos)) return true;
        neg.insert(neg.begin(), {0, k});
        pos.push_back({n + 1, 0});
        return chain_ok(std::move(neg), std::move(pos));
    }
    return false;
}

bool is_member(const Monomial& m, const Weight& lambda) {
    const int n = m.rank();
    if (lambda.rank() != n) throw std::invalid_argument("weight rank mismatch");
    if (!lambda.is_dominant())
        throw std::domain_error("membership needs a dominant weight, got " + lambda.to_string());

    auto x = x_factorize(m);
    if (!x) return false;
    if (!x->all_nonnegative()) return false;
    if (!x->zero_pattern_holds()) return false;

    long long tail = 0;
    for (int j = n - 1; j >= 0; --j) {
        tail += lambda.coeff(j + 1);  // a_{j+1} + ... + a_n
        if (x->column_sum(j) != tail) return false;
    }
    for (int j = 1; j <= n - 1; ++j) {
        for (int i = 1; i <= n + 1; ++i) {
            long long left = 0, right = 0;
            for (int r = i; r <= n + 1; ++r) left += x->at(r, j);
            for (int r = i + 1; r <= n + 1; ++r) right += x->at(r, j - 1);
            if (left > right) return false;
        }
    }
    return true;
}

bool is_member_theorem(const PairDecomposition& d, const Weight& lambda) {
    const int n = d.rank();
    if (lambda.rank() != n) throw std::invalid_argument("weight rank mismatch");
    if (!lambda.is_dominant())
        throw std::domain_error("membership needs a dominant weight, got " + lambda.to_string());

    for (const YPair& p : d.pairs())
        if (p.n < 0 || p.n > n - 1 || p.m < 1 || p.m > n) return false;
    for (int k = 1; k <= n - 1; ++k)
        if (!precedes(lambda_plus(d, k), lambda_minus(d, k))) return false;
    for (int k = 1; k <= n; ++k) {
        long long diff = static_cast<long long>(lambda_minus(d, k).size()) -
                         static_cast<long long>(lambda_plus(d, k).size());
        if (diff != lambda.coeff(k)) return false;
    }
    return true;
}

}  // namespace crystal
