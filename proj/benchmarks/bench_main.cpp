#include <benchmark/benchmark.h>

#include "eqlr/involutions.hpp"
#include "eqlr/puzzles.hpp"
#include "eqlr/schur.hpp"
#include "eqlr/weights.hpp"

using namespace eqlr;
using core::Partition;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// (y1 + ... + yk)^e
void BM_PolyPower(benchmark::State& st) {
    polyring::MPoly base;
    for (int i = 1; i <= 4; ++i) base += polyring::MPoly::y(i);
    for (auto _ : st) benchmark::DoNotOptimize(base.pow(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_PolyPower)->Arg(4)->Arg(8)->Arg(12);

void BM_LRTableaux(benchmark::State& st) {
    auto l = P({2, 1, 0}), m = P({3, 3, 1});
    for (auto _ : st) benchmark::DoNotOptimize(tableaux::enumerate_lr_tableaux_all(l, m, Partition::zero(3)));
}
BENCHMARK(BM_LRTableaux);

void BM_CoefficientTable(benchmark::State& st) {
    auto l = P({3, 2, 1}), m = P({3, 3, 2});
    for (auto _ : st) benchmark::DoNotOptimize(weights::coefficient_table_by_tableaux(l, m));
}
BENCHMARK(BM_CoefficientTable)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& st) {
    auto l = P({2, 1, 0}), m = P({2, 2, 1});
    for (auto _ : st) benchmark::DoNotOptimize(schur::expand_product_oracle(l, m, 3));
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

void BM_Bialternant(benchmark::State& st) {
    auto mu = P({3, 3, 3});
    for (auto _ : st) benchmark::DoNotOptimize(schur::verify_bialternant(mu, 3));
}
BENCHMARK(BM_Bialternant)->Unit(benchmark::kMillisecond);

void BM_Puzzles(benchmark::State& st) {
    int n = static_cast<int>(st.range(0));
    auto l = P({4, 2, 2}), m = P({4, 3, 1}), nu = P({6, 5, 2});
    if (n != 9) {
        l = P({2, 1, 0});
        m = P({2, 1, 0});
        nu = P({3, 2, 1});
    }
    for (auto _ : st) benchmark::DoNotOptimize(puzzles::enumerate_puzzles(l, m, nu, n));
}
BENCHMARK(BM_Puzzles)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_TrapezoidPuzzles(benchmark::State& st) {
    auto l = P({2, 1, 0}), m = P({2, 1, 0}), nu = P({2, 1, 1});
    for (auto _ : st) benchmark::DoNotOptimize(puzzles::enumerate_trapezoid_puzzles(l, m, nu, 6));
}
BENCHMARK(BM_TrapezoidPuzzles)->Unit(benchmark::kMillisecond);

void BM_PhiRoundTrip(benchmark::State& st) {
    auto ps = puzzles::enumerate_puzzles(P({4, 2, 2}), P({4, 3, 1}), P({6, 5, 2}), 9);
    for (auto _ : st)
        for (const auto& p : ps) benchmark::DoNotOptimize(puzzles::phi_inverse(puzzles::phi(p), 9, false));
}
BENCHMARK(BM_PhiRoundTrip)->Unit(benchmark::kMillisecond);

void BM_Involution(benchmark::State& st) {
    auto hs = involutions::enumerate_hatted(P({3, 2, 0}), 3);
    for (auto _ : st)
        for (const auto& h : hs) benchmark::DoNotOptimize(involutions::apply_s_i(h, 1));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(hs.size()));
}
BENCHMARK(BM_Involution);

}  // namespace

BENCHMARK_MAIN();
