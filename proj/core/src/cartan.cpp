#include "crystal/cartan.hpp"

#include "crystal/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace crystal {

namespace {

void check_rank(int rank) {
    if (rank < 1) throw std::domain_error("rank must be positive, got " + std::to_string(rank));
}

void check_index(int i, int rank, const char* what) {
    if (i < 1 || i > rank)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(rank));
}

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
    unsigned long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("dimension product overflows 64 bits");
    return r;
}

}  // namespace

Weight Weight::zero(int rank) {
    check_rank(rank);
    return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0));
}

Weight Weight::fundamental(int rank, int k) {
    Weight w = zero(rank);
    check_index(k, rank, "fundamental weight");
    w.coeffs_[static_cast<std::size_t>(k - 1)] = 1;
    return w;
}

Weight Weight::parse(const std::string& text, int rank) {
    check_rank(rank);
    std::vector<int> coeffs;
    std::size_t pos = 0;
    const std::size_t size = text.size();
    while (true) {
        std::size_t start = pos;
        if (pos < size && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < size && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer in weight", start);
        coeffs.push_back(std::atoi(text.substr(start, pos - start).c_str()));
        if (pos == size) break;
        if (text[pos] != ',') throw ParseError("expected ',' in weight", pos);
        ++pos;
    }
    if (static_cast<int>(coeffs.size()) != rank)
        throw ParseError("weight has " + std::to_string(coeffs.size()) + " entries, expected " +
                             std::to_string(rank),
                         0);
    return Weight(std::move(coeffs));
}

int Weight::coeff(int k) const {
    check_index(k, rank(), "weight coefficient");
    return coeffs_[static_cast<std::size_t>(k - 1)];
}

bool Weight::is_zero() const {
    for (int c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Weight::is_dominant() const {
    for (int c : coeffs_)
        if (c < 0) return false;
    return true;
}

Weight& Weight::operator+=(const Weight& other) {
    if (rank() != other.rank()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (rank() != other.rank()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

std::string Weight::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) s += ',';
        s += std::to_string(coeffs_[k]);
    }
    return s;
}

CartanDatum::CartanDatum(int rank) : rank_(rank) { check_rank(rank); }

int CartanDatum::entry(int i, int j) const {
    check_index(i, rank_, "Cartan matrix");
    check_index(j, rank_, "Cartan matrix");
    if (i == j) return 2;
    if (i - j == 1 || j - i == 1) return -1;
    return 0;
}

int CartanDatum::pairing(const Weight& w, int i) const {
    if (w.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
    check_index(i, rank_, "coroot");
    return w.coeff(i);
}

Weight CartanDatum::simple_root(int i) const {
    check_index(i, rank_, "simple root");
    std::vector<int> coeffs(static_cast<std::size_t>(rank_), 0);
    for (int j = 1; j <= rank_; ++j) coeffs[static_cast<std::size_t>(j - 1)] = entry(j, i);
    return Weight(std::move(coeffs));
}

unsigned long long CartanDatum::weyl_dim(const Weight& lambda) const {
    if (lambda.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
    if (!lambda.is_dominant()) throw std::domain_error("weyl_dim needs a dominant weight, got " + lambda.to_string());

    // Partition mu_i = a_i + ... + a_n, with mu_{n+1} = 0; the dimension is
    // the product over i < j of (mu_i - mu_j + j - i)/(j - i), kept exact by
    // gcd reduction as factors accumulate.
    std::vector<long long> mu(static_cast<std::size_t>(rank_) + 1, 0);
    for (int i = rank_; i >= 1; --i)
        mu[static_cast<std::size_t>(i - 1)] = mu[static_cast<std::size_t>(i)] + lambda.coeff(i);

    unsigned long long num = 1, den = 1;
    for (int i = 1; i <= rank_ + 1; ++i) {
        for (int j = i + 1; j <= rank_ + 1; ++j) {
            auto top = static_cast<unsigned long long>(mu[static_cast<std::size_t>(i - 1)] -
                                                       mu[static_cast<std::size_t>(j - 1)] + j - i);
            auto bottom = static_cast<unsigned long long>(j - i);
            unsigned long long g = std::gcd(top, bottom);
            num = checked_mul(num, top / g);
            den = checked_mul(den, bottom / g);
            g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    if (den != 1) throw std::logic_error("dimension product did not divide exactly");
    return num;
}

}  // namespace crystal
