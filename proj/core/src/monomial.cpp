#include "crystal/monomial.hpp"

#include "crystal/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace crystal {

namespace {

int checked_add(int a, int b) {
    int r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent sum overflows");
    return r;
}

}  // namespace

const CijChoice& CijChoice::standard() {
    static const CijChoice instance;
    return instance;
}

CijChoice CijChoice::from_table(std::vector<std::vector<int>> table) {
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) throw std::invalid_argument("c_ij table must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (table[i][j] + table[j][i] != 1)
                throw std::invalid_argument("c_ij + c_ji must be 1 for i != j");
        }
    }
    CijChoice c;
    c.table_ = std::move(table);
    return c;
}

int CijChoice::at(int i, int j) const {
    if (i == j) throw std::invalid_argument("c_ij is only defined for i != j");
    if (table_.empty()) return i > j ? 0 : 1;
    if (i < 1 || j < 1 || i > static_cast<int>(table_.size()) || j > static_cast<int>(table_.size()))
        throw std::out_of_range("c_ij index outside table");
    return table_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

Monomial::Monomial(int rank) : rank_(rank) {
    if (rank < 1) throw std::domain_error("rank must be positive, got " + std::to_string(rank));
}

void Monomial::insert(int index, int level, int exponent) {
    if (index < 0 || index > rank_ + 1)
        throw std::out_of_range("variable index " + std::to_string(index) + " out of range 0.." +
                                std::to_string(rank_ + 1));
    if (index == 0 || index == rank_ + 1 || exponent == 0) return;  // Y_0 = Y_{n+1} = 1
    YFactor key{level, index, 0};
    auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                               [](const YFactor& f, const YFactor& k) {
                                   return std::pair(f.level, f.index) < std::pair(k.level, k.index);
                               });
    if (it != factors_.end() && it->level == level && it->index == index) {
        it->exponent = checked_add(it->exponent, exponent);
        if (it->exponent == 0) factors_.erase(it);
    } else {
        factors_.insert(it, YFactor{level, index, exponent});
    }
}

Monomial Monomial::y(int rank, int index, int level, int exponent) {
    Monomial m(rank);
    m.insert(index, level, exponent);
    return m;
}

Monomial Monomial::highest_weight(const Weight& lambda) {
    if (!lambda.is_dominant())
        throw std::domain_error("highest-weight monomial needs a dominant weight, got " +
                                lambda.to_string());
    Monomial m(lambda.rank());
    for (int i = 1; i <= lambda.rank(); ++i) m.insert(i, 0, lambda.coeff(i));
    return m;
}

Monomial Monomial::a_monomial(int rank, int i, int level, const CijChoice& cij) {
    if (i < 1 || i > rank)
        throw std::out_of_range("correction index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank));
    Monomial m(rank);
    m.insert(i, level, 1);
    m.insert(i, level + 1, 1);
    for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > rank) continue;
        m.insert(j, level + cij.at(j, i), -1);
    }
    return m;
}

int Monomial::exponent_of(int index, int level) const {
    for (const YFactor& f : factors_)
        if (f.index == index && f.level == level) return f.exponent;
    return 0;
}

Monomial Monomial::inverse() const {
    Monomial m(rank_);
    m.factors_ = factors_;
    for (YFactor& f : m.factors_) f.exponent = -f.exponent;
    return m;
}

Monomial Monomial::pow(int k) const {
    Monomial m(rank_);
    if (k == 0) return m;
    m.factors_ = factors_;
    for (YFactor& f : m.factors_) {
        long long e = static_cast<long long>(f.exponent) * k;
        if (e < std::numeric_limits<int>::min() || e > std::numeric_limits<int>::max())
            throw std::overflow_error("exponent power overflows");
        f.exponent = static_cast<int>(e);
    }
    return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
    if (rank_ != other.rank_) throw std::invalid_argument("monomial rank mismatch");
    for (const YFactor& f : other.factors_) insert(f.index, f.level, f.exponent);
    return *this;
}

Weight Monomial::weight() const {
    std::vector<int> coeffs(static_cast<std::size_t>(rank_), 0);
    for (const YFactor& f : factors_)
        coeffs[static_cast<std::size_t>(f.index - 1)] =
            checked_add(coeffs[static_cast<std::size_t>(f.index - 1)], f.exponent);
    return Weight(std::move(coeffs));
}

int Monomial::phi(int i) const {
    int run = 0, best = 0;
    for (const YFactor& f : factors_) {
        if (f.index != i) continue;
        run = checked_add(run, f.exponent);
        best = std::max(best, run);
    }
    return best;
}

int Monomial::epsilon(int i) const {
    int run = 0, best = 0;
    for (const YFactor& f : factors_) {
        if (f.index != i) continue;
        run = checked_add(run, f.exponent);
        best = std::max(best, run);
    }
    return best - run;  // phi minus the total color-i exponent
}

#ifndef NDEBUG
namespace {

// Sum of color-i exponents at levels <= cutoff; the forward and backward
// descriptions of the correction level both reduce to this prefix attaining
// phi, so the chosen level is re-checked against it directly.
int prefix_at(const std::vector<YFactor>& factors, int i, int cutoff) {
    int sum = 0;
    for (const YFactor& f : factors)
        if (f.index == i && f.level <= cutoff) sum += f.exponent;
    return sum;
}

}  // namespace
#endif

int Monomial::n_f(int i) const {
    const int target = phi(i);
    if (target <= 0) throw std::domain_error("n_f needs phi > 0 in color " + std::to_string(i));
    int run = 0;
    for (const YFactor& f : factors_) {
        if (f.index != i) continue;
        run += f.exponent;
        if (run == target) {
            assert(prefix_at(factors_, i, f.level) == target &&
                   prefix_at(factors_, i, f.level - 1) < target);
            return f.level;
        }
    }
    throw std::logic_error("phi maximum not attained on support");
}

int Monomial::n_e(int i) const {
    const int target = phi(i);
    if (epsilon(i) <= 0) throw std::domain_error("n_e needs epsilon > 0 in color " + std::to_string(i));
    // Largest integer level whose prefix sum attains phi(i). The prefix is a
    // step function, so that level is one below the support level following
    // the last attaining position (which exists because epsilon > 0 makes the
    // prefix drop below phi eventually).
    int run = 0;
    bool attained = (target == 0);  // the empty prefix attains phi = 0
    int result = 0;
    bool have_result = false;
    for (const YFactor& f : factors_) {
        if (f.index != i) continue;
        if (attained) {
            result = f.level - 1;
            have_result = true;
        }
        run += f.exponent;
        attained = (run == target);
    }
    if (attained || !have_result) throw std::logic_error("epsilon characterization not attained on support");
    assert(prefix_at(factors_, i, result) == target && prefix_at(factors_, i, result + 1) != target);
    return result;
}

std::optional<Monomial> Monomial::f_tilde(int i, const CijChoice& cij) const {
    if (phi(i) == 0) return std::nullopt;
    return *this * a_monomial(rank_, i, n_f(i), cij).inverse();
}

std::optional<Monomial> Monomial::e_tilde(int i, const CijChoice& cij) const {
    if (epsilon(i) == 0) return std::nullopt;
    return *this * a_monomial(rank_, i, n_e(i), cij);
}

std::string Monomial::to_string() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
        const YFactor& f = factors_[k];
        if (k > 0) s += '*';
        s += 'Y';
        s += std::to_string(f.index);
        s += '(';
        s += std::to_string(f.level);
        s += ')';
        if (f.exponent != 1) {
            s += '^';
            s += std::to_string(f.exponent);
        }
    }
    return s;
}

std::string Monomial::to_json_string() const {
    nlohmann::json j;
    j["factors"] = nlohmann::json::array();
    for (const YFactor& f : factors_)
        j["factors"].push_back({{"i", f.index}, {"n", f.level}, {"e", f.exponent}});
    return j.dump();
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int integer(const char* what) {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError(std::string("expected ") + what, start);
        try {
            return std::stoi(text.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            throw ParseError(std::string(what) + " out of integer range", start);
        }
    }
};

}  // namespace

Monomial Monomial::parse(const std::string& text, int rank) {
    Monomial m(rank);
    Cursor cur{text};
    cur.skip_ws();
    if (cur.pos == text.size()) throw ParseError("empty monomial", 0);
    if (cur.eat('1')) {
        cur.skip_ws();
        if (cur.pos != text.size()) throw ParseError("unexpected input after \"1\"", cur.pos);
        return m;
    }
    while (true) {
        cur.skip_ws();
        std::size_t factor_start = cur.pos;
        if (!cur.eat('Y')) throw ParseError("expected 'Y'", cur.pos);
        int index = cur.integer("variable index");
        if (index < 0 || index > rank + 1)
            throw ParseError("variable index " + std::to_string(index) + " out of range 0.." +
                                 std::to_string(rank + 1),
                             factor_start);
        if (!cur.eat('(')) throw ParseError("expected '('", cur.pos);
        int level = cur.integer("level");
        if (!cur.eat(')')) throw ParseError("expected ')'", cur.pos);
        int exponent = 1;
        if (cur.eat('^')) exponent = cur.integer("exponent");
        m.insert(index, level, exponent);
        cur.skip_ws();
        if (cur.pos == text.size()) break;
        if (!cur.eat('*')) throw ParseError("expected '*'", cur.pos);
    }
    return m;
}

}  // namespace crystal
