#include "crystal/cartan.hpp"
#include "crystal/correspondence.hpp"
#include "crystal/crystal.hpp"
#include "crystal/membership.hpp"
#include "crystal/monomial.hpp"
#include "crystal/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace crystal;

namespace {

void BM_GenerateMonomialCrystal(benchmark::State& state) {
    const Weight lambda({1, 1, 1});
    for (auto _ : state) {
        auto graph = generate(Monomial::highest_weight(lambda));
        benchmark::DoNotOptimize(graph.node_count());
    }
}
BENCHMARK(BM_GenerateMonomialCrystal);

void BM_GenerateTableauCrystal(benchmark::State& state) {
    const Weight lambda({1, 1, 1});
    for (auto _ : state) {
        auto graph = generate(Tableau::highest(lambda, Orientation::standard));
        benchmark::DoNotOptimize(graph.node_count());
    }
}
BENCHMARK(BM_GenerateTableauCrystal);

void BM_GenerateWide(benchmark::State& state) {
    const Weight lambda({1, 2, 1, 0});
    for (auto _ : state) {
        auto graph = generate(Monomial::highest_weight(lambda));
        benchmark::DoNotOptimize(graph.node_count());
    }
}
BENCHMARK(BM_GenerateWide);

void BM_XFactorize(benchmark::State& state) {
    const Monomial m = Monomial::parse("Y1(0)*Y1(1)*Y1(2)^-1*Y2(1)^-1*Y3(0)^3", 4);
    for (auto _ : state) {
        auto x = x_factorize(m);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_XFactorize);

void BM_Membership(benchmark::State& state) {
    const Weight lambda({1, 2, 1, 0});
    const Monomial m = Monomial::parse("Y1(0)*Y1(1)*Y1(2)^-1*Y2(1)^-1*Y3(0)^3", 4);
    for (auto _ : state) benchmark::DoNotOptimize(is_member(m, lambda));
}
BENCHMARK(BM_Membership);

void BM_PhiMap(benchmark::State& state) {
    const Weight lambda({1, 2, 1});
    const Monomial m = Monomial::parse("Y1(3)^-1*Y2(0)^2*Y3(1)^-1", 3);
    for (auto _ : state) benchmark::DoNotOptimize(phi_map(m, lambda));
}
BENCHMARK(BM_PhiMap);

void BM_WeylDim(benchmark::State& state) {
    const CartanDatum cartan(6);
    const Weight lambda({2, 1, 0, 1, 2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(cartan.weyl_dim(lambda));
}
BENCHMARK(BM_WeylDim);

void BM_LoweringOperator(benchmark::State& state) {
    const Monomial m = Monomial::parse("Y1(0)*Y2(0)^2*Y3(0)", 4);
    for (auto _ : state) benchmark::DoNotOptimize(m.f_tilde(2));
}
BENCHMARK(BM_LoweringOperator);

}  // namespace

BENCHMARK_MAIN();
