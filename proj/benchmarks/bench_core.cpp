#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "nbcss/extend.hpp"
#include "nbcss/hgp.hpp"
#include "nbcss/modsolve.hpp"

namespace {

using namespace nbcss;

CssPair reference_pair() {
    return hgp(BinaryMatrix::from_dense({{1, 1, 1}, {0, 1, 0}}),
               BinaryMatrix::from_dense({{1, 0, 0}, {1, 1, 1}}));
}

BinaryMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double density) {
    std::bernoulli_distribution bit(density);
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (bit(rng)) m.row_support[static_cast<std::size_t>(i)].push_back(j);
        }
    }
    return m;
}

void BM_FieldMul(benchmark::State& state) {
    const Field field(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::vector<FieldElem> xs(1024);
    for (auto& x : xs) x = static_cast<FieldElem>(rng() % field.order());
    std::size_t i = 0;
    for (auto _ : state) {
        const FieldElem a = xs[i++ & 1023];
        const FieldElem b = xs[i++ & 1023];
        benchmark::DoNotOptimize(field.mul(a, b));
    }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_OverlapSets(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const int n = static_cast<int>(state.range(0));
    const CssPair pair{random_matrix(rng, n, 4 * n, 0.1), random_matrix(rng, n, 4 * n, 0.1)};
    for (auto _ : state) benchmark::DoNotOptimize(overlap_sets(pair));
}
BENCHMARK(BM_OverlapSets)->Arg(16)->Arg(64)->Arg(256);

void BM_HgpConstruct(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const int n = static_cast<int>(state.range(0));
    const BinaryMatrix h1 = random_matrix(rng, n, 2 * n, 0.3);
    const BinaryMatrix h2 = random_matrix(rng, n, 2 * n, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(hgp(h1, h2));
}
BENCHMARK(BM_HgpConstruct)->Arg(4)->Arg(8)->Arg(16);

void BM_UnitPivotEliminate(benchmark::State& state) {
    const CssPair pair = reference_pair();
    const CongruenceSystem sys = build_system(pair, overlap_sets(pair), 255);
    for (auto _ : state) benchmark::DoNotOptimize(unit_pivot_eliminate(sys));
}
BENCHMARK(BM_UnitPivotEliminate);

void BM_Snf(benchmark::State& state) {
    const CssPair pair = reference_pair();
    const IntMatrix a = system_matrix(build_system(pair, overlap_sets(pair), 255));
    for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf);

void BM_CsaAssemble(benchmark::State& state) {
    const CssPair pair = reference_pair();
    const Field field(8);
    const CsaParams params = CsaParams::random(6, 6, 13, 255, 4);
    for (auto _ : state) benchmark::DoNotOptimize(csa(pair, params, field));
}
BENCHMARK(BM_CsaAssemble);

} // namespace

BENCHMARK_MAIN();
