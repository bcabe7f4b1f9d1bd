#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystal/crystal.hpp"
#include "crystal/membership.hpp"
#include "crystal/monomial.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace crystal;

namespace {

XMatrix matrix_from(int rank, std::initializer_list<std::array<int, 3>> entries) {
    XMatrix x(rank);
    for (const auto& [i, j, v] : entries) x.set(i, j, v);
    return x;
}

std::multiset<std::array<int, 4>> pair_set(const PairDecomposition& d) {
    std::multiset<std::array<int, 4>> out;
    for (const YPair& p : d.pairs()) out.insert({p.a, p.m, p.b, p.n});
    return out;
}

}  // namespace

TEST_CASE("x variables at the boundary lose their unit factor") {
    CHECK(x_var(2, 1, 0) == Monomial::parse("Y1(0)", 2));
    CHECK(x_var(2, 3, 0) == Monomial::parse("Y2(1)^-1", 2));
    CHECK(x_var(2, 2, 0) == Monomial::parse("Y1(1)^-1*Y2(0)", 2));
    CHECK(x_var(2, 2, 0).weight() == Weight({-1, 1}));
    CHECK_THROWS_AS(x_var(2, 4, 0), std::out_of_range);
    CHECK_THROWS_AS(x_var(2, 0, 0), std::out_of_range);
}

TEST_CASE("factorization solves the anti-diagonal chains") {
    auto x = x_factorize(Monomial::parse("Y1(3)^-1*Y2(0)^2*Y3(1)^-1", 3));
    REQUIRE(x.has_value());
    CHECK(*x == matrix_from(3, {{2, 2, 1}, {3, 1, 1}, {1, 1, 2}, {4, 0, 2}, {2, 0, 2}}));
    CHECK(x->expand() == Monomial::parse("Y1(3)^-1*Y2(0)^2*Y3(1)^-1", 3));
}

TEST_CASE("factorization of fundamental seeds is a staircase") {
    for (int rank = 1; rank <= 4; ++rank) {
        for (int k = 1; k <= rank; ++k) {
            auto x = x_factorize(Monomial::y(rank, k, 0));
            REQUIRE(x.has_value());
            for (int i = 1; i <= rank + 1; ++i)
                for (int j = 0; j <= rank - 1; ++j)
                    CHECK(x->at(i, j) == ((i <= k && j == k - i) ? 1 : 0));
        }
    }
}

TEST_CASE("factorization of the empty monomial is the zero grid") {
    auto x = x_factorize(Monomial::one(3));
    REQUIRE(x.has_value());
    CHECK(*x == XMatrix(3));
}

TEST_CASE("support outside the level window is not representable") {
    CHECK_FALSE(x_factorize(Monomial::parse("Y1(-1)", 2)).has_value());
    CHECK_FALSE(x_factorize(Monomial::parse("Y1(3)", 2)).has_value());
    CHECK(x_factorize(Monomial::parse("Y1(2)", 2)).has_value());  // solvable, negative entries
    CHECK_FALSE(x_factorize(Monomial::parse("Y1(2)", 2))->all_nonnegative());
}

TEST_CASE("expanding a random valid grid and re-solving returns it") {
    std::mt19937 rng(24680);
    for (int t = 0; t < 400; ++t) {
        int rank = 1 + static_cast<int>(rng() % 4);
        XMatrix x(rank);
        std::uniform_int_distribution<int> value(0, 3);
        for (int i = 1; i <= rank + 1; ++i)
            for (int j = 0; j <= rank - 1; ++j)
                if (i + j <= rank + 1 && rng() % 2 == 0) x.set(i, j, value(rng));
        auto back = x_factorize(x.expand());
        REQUIRE(back.has_value());
        CHECK(*back == x);
    }
}

TEST_CASE("the domination order on decreasing sequences") {
    CHECK(precedes(DecreasingSeq({1}), DecreasingSeq({2})));
    CHECK(precedes(DecreasingSeq(), DecreasingSeq()));
    CHECK(precedes(DecreasingSeq(), DecreasingSeq({5, 0})));
    CHECK_FALSE(precedes(DecreasingSeq({3, 3}), DecreasingSeq({3, 1})));
    CHECK_FALSE(precedes(DecreasingSeq({1, 0}), DecreasingSeq({2})));
    CHECK(precedes(DecreasingSeq({2, 1}), DecreasingSeq({3, 2, 0})));
    CHECK_THROWS_AS(DecreasingSeq({1, 2}), std::domain_error);
}

TEST_CASE("level-selected sequences of a paired form") {
    // three pairs with mixed levels across rank 3
    PairDecomposition d(3, {YPair{1, 2, 3, 0}, YPair{0, 2, 1, 1}, YPair{2, 1, 3, 0}});
    CHECK(lambda_plus(d, 0).entries() == std::vector<int>({3, 3}));
    CHECK(lambda_plus(d, 1).entries() == std::vector<int>({1}));
    CHECK(lambda_minus(d, 1).entries() == std::vector<int>({2}));
    CHECK(lambda_minus(d, 2).entries() == std::vector<int>({1, 0}));
    CHECK(precedes(lambda_plus(d, 1), lambda_minus(d, 1)));

    PairDecomposition empty(3, {});
    CHECK(lambda_plus(empty, 0).entries().empty());
    CHECK(lambda_minus(empty, 1).entries().empty());

    CHECK_THROWS_AS(PairDecomposition(3, {YPair{1, 2, 3, 1}}), std::domain_error);
    CHECK_THROWS_AS(PairDecomposition(3, {YPair{3, 2, 1, 4}}), std::domain_error);
}

TEST_CASE("fundamental membership by grid and by pairs") {
    CHECK(is_member_fundamental(Monomial::parse("Y1(1)^-1*Y2(0)", 2), 1));
    CHECK(is_member_fundamental_pairform(Monomial::parse("Y1(1)^-1*Y2(0)", 2), 1));
    CHECK(is_member_fundamental(Monomial::parse("Y2(1)^-1", 2), 1));
    CHECK(is_member_fundamental_pairform(Monomial::parse("Y2(1)^-1", 2), 1));
    CHECK_FALSE(is_member_fundamental(Monomial::y(2, 1, 0), 2));
    CHECK_FALSE(is_member_fundamental_pairform(Monomial::y(2, 1, 0), 2));
    CHECK_THROWS_AS(is_member_fundamental(Monomial::one(2), 3), std::out_of_range);

    // both routes agree with generation for every fundamental weight
    for (int rank = 1; rank <= 3; ++rank) {
        for (int k = 1; k <= rank; ++k) {
            auto gen = generate_with_elements(Monomial::y(rank, k, 0));
            std::set<Monomial> members(gen.elements.begin(), gen.elements.end());
            for (const Monomial& m : gen.elements) {
                CHECK(is_member_fundamental(m, k));
                CHECK(is_member_fundamental_pairform(m, k));
            }
            // nearby non-members are rejected by both routes
            std::mt19937 rng(1000u * static_cast<unsigned>(rank) + static_cast<unsigned>(k));
            for (int t = 0; t < 50; ++t) {
                Monomial m = testing::random_monomial(rng, rank, 3, 2, 2);
                if (members.count(m)) continue;
                CHECK_FALSE(is_member_fundamental(m, k));
                CHECK_FALSE(is_member_fundamental_pairform(m, k));
            }
        }
    }
}

TEST_CASE("canonical pairing of a grid") {
    auto x = x_factorize(Monomial::y(3, 3, 0));
    REQUIRE(x.has_value());
    CHECK(pair_set(pair_decomposition(*x)) ==
          std::multiset<std::array<int, 4>>({{0, 3, 3, 0}}));

    auto golden = x_factorize(Monomial::parse("Y1(3)^-1*Y2(0)^2*Y3(1)^-1", 3));
    REQUIRE(golden.has_value());
    CHECK(pair_set(pair_decomposition(*golden)) ==
          std::multiset<std::array<int, 4>>(
              {{0, 2, 2, 0}, {0, 2, 2, 0}, {1, 3, 4, 0}, {3, 1, 4, 0}}));
    CHECK(pair_decomposition(*golden).product() ==
          Monomial::parse("Y1(3)^-1*Y2(0)^2*Y3(1)^-1", 3));

    auto wide = x_factorize(Monomial::parse("Y1(0)*Y1(1)*Y1(2)^-1*Y2(1)^-1*Y3(0)^3", 4));
    REQUIRE(wide.has_value());
    CHECK(pair_set(pair_decomposition(*wide)) ==
          std::multiset<std::array<int, 4>>(
              {{0, 1, 1, 0}, {0, 2, 1, 1}, {0, 3, 3, 0}, {1, 2, 3, 0}, {2, 1, 3, 0}}));

    CHECK(pair_decomposition(XMatrix(3)).pairs().empty());

    XMatrix negative(2);
    negative.set(1, 0, -1);
    CHECK_THROWS_AS(pair_decomposition(negative), std::domain_error);
}

TEST_CASE("grid membership accepts the wide golden monomial") {
    Weight lambda({1, 2, 1, 0});
    Monomial m = Monomial::parse("Y1(0)*Y1(1)*Y1(2)^-1*Y2(1)^-1*Y3(0)^3", 4);
    CHECK(is_member(m, lambda));
    auto x = x_factorize(m);
    REQUIRE(x.has_value());
    CHECK(x->column_sum(0) == 4);
    CHECK(x->column_sum(1) == 3);
    CHECK(x->column_sum(2) == 1);
    CHECK(x->column_sum(3) == 0);

    CHECK(is_member(Monomial::highest_weight(lambda), lambda));
    CHECK_FALSE(is_member(Monomial::parse("Y1(0)^2", 2), Weight({1, 0})));
    CHECK_THROWS_AS(is_member(Monomial::one(2), Weight({-1, 0})), std::domain_error);
}

TEST_CASE("paired-form membership agrees with the theorem's conditions") {
    Weight lambda({1, 2, 1, 0});
    PairDecomposition golden(
        4, {YPair{0, 3, 3, 0}, YPair{1, 2, 3, 0}, YPair{0, 2, 1, 1}, YPair{2, 1, 3, 0},
            YPair{0, 1, 1, 0}});
    CHECK(is_member_theorem(golden, lambda));

    // the highest-weight seed written as pairs dropping to level zero
    Weight small({1, 1, 0});
    PairDecomposition seed(3, {YPair{0, 1, 1, 0}, YPair{0, 2, 2, 0}});
    CHECK(is_member_theorem(seed, small));

    // a single pair whose counts disagree with the weight
    PairDecomposition off(2, {YPair{1, 1, 2, 0}});
    CHECK_FALSE(is_member_theorem(off, Weight({0, 1})));
    CHECK(is_member_theorem(off, Weight({1, 0})));
}

TEST_CASE("generation equals grid membership equals paired membership") {
    for (int rank = 1; rank <= 3; ++rank) {
        for (const Weight& lambda : testing::dominant_weights(rank, 2)) {
            auto gen = generate_with_elements(Monomial::highest_weight(lambda));
            std::set<Monomial> members(gen.elements.begin(), gen.elements.end());
            for (const Monomial& m : gen.elements) {
                CHECK(is_member(m, lambda));
                auto x = x_factorize(m);
                REQUIRE(x.has_value());
                CHECK(is_member_theorem(pair_decomposition(*x), lambda));
                // closure under both operators
                for (int i = 1; i <= rank; ++i) {
                    if (auto down = m.f_tilde(i)) CHECK(members.count(*down) == 1);
                    if (auto up = m.e_tilde(i)) CHECK(members.count(*up) == 1);
                }
            }
            // agreement on non-members near the crystal
            std::mt19937 rng(77u + static_cast<unsigned>(rank));
            for (int t = 0; t < 60; ++t) {
                Monomial m = testing::random_monomial(rng, rank, 4, 2, 2);
                bool in_graph = members.count(m) == 1;
                CHECK(is_member(m, lambda) == in_graph);
                auto x = x_factorize(m);
                bool paired_ok = x.has_value() && x->all_nonnegative() &&
                                 is_member_theorem(pair_decomposition(*x), lambda);
                CHECK(paired_ok == in_graph);
            }
        }
    }
}

TEST_CASE("grid json and ascii forms") {
    XMatrix x(2);
    x.set(1, 0, 1);
    x.set(2, 1, 3);
    CHECK(x.to_json_string() == R"({"m":[[1,0],[0,3],[0,0]],"rank":2})");
    CHECK(x.to_ascii() == "1 0\n0 3\n0 0\n");
    CHECK_THROWS_AS(x.at(4, 0), std::out_of_range);
    CHECK_THROWS_AS(x.at(1, 2), std::out_of_range);
}
