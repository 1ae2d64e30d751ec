#include <benchmark/benchmark.h>

#include "irrcount/assignment.hpp"
#include "irrcount/coherent.hpp"
#include "irrcount/counting.hpp"
#include "irrcount/painting.hpp"

using namespace irrcount;

static void BM_CharacterValue(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    const auto& parts = enumeratePartitions(n);
    for (auto _ : state) {
        BigInt sum = 0;
        for (const auto& shape : parts)
            for (const auto& mu : parts) sum += characterValue(shape, mu);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_CharacterValue)->Arg(8)->Arg(10)->Arg(12);

static void BM_PaintingEnumeration(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long total = 0;
        for (const auto& shape : enumeratePartitions(n))
            total += countPaintings(shape, PaintingType::AR);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PaintingEnumeration)->Arg(8)->Arg(10);

static void BM_KostkaViaPieri(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long long total = 0;
        for (const auto& shape : enumeratePartitions(n))
            for (const auto& content : enumeratePartitions(n))
                total += kostkaViaPieri(shape, content);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_KostkaViaPieri)->Arg(7)->Arg(9);

static void BM_CohUOracle(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FormalRepSum sum = cohU(p, p, CohMethod::Oracle);
        benchmark::DoNotOptimize(sum.mult(YoungDiagram(std::vector<int>(2 * p, 1))));
    }
}
BENCHMARK(BM_CohUOracle)->Arg(2)->Arg(3);

static void BM_CountTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<Coordinate> nu;
    for (int i = 0; i < n; ++i) nu.push_back(Coordinate{"", 1, BigRat(i)});
    GroupSpec g{Family::Glr, n};
    for (auto _ : state) {
        auto table = countTable(g, NuSpec{nu, {}});
        benchmark::DoNotOptimize(table.size());
    }
}
BENCHMARK(BM_CountTable)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
