#include <benchmark/benchmark.h>

#include "dsem/connectivity.hpp"
#include "dsem/generators.hpp"
#include "dsem/hamiltonian.hpp"

using namespace dsem;

namespace {

const ReprParams kInstances[] = {
    {"[3^6:3^3.4^2]_1", 12, 3, 4},
    {"[3^6:3^2.4.12]", 15, 2, 10},
    {"[3^2.6^2:3.6.3.6]", 16, 2, 4},
    {"[3.4.3.12:3.12^2]", 12, 3, 3},
};

const Generated& cached(int which) {
    static std::vector<Generated> maps = [] {
        std::vector<Generated> out;
        for (const auto& p : kInstances) out.push_back(generate(p));
        return out;
    }();
    return maps.at(which);
}

void BM_Generate(benchmark::State& state) {
    const ReprParams& p = kInstances[state.range(0)];
    for (auto _ : state) benchmark::DoNotOptimize(generate(p));
    state.SetLabel(p.type);
}

void BM_VerifyDsem(benchmark::State& state) {
    const ReprParams& p = kInstances[state.range(0)];
    const Generated& g = cached(static_cast<int>(state.range(0)));
    const DsemType& t = find_type(p.type);
    for (auto _ : state) benchmark::DoNotOptimize(verify_dsem(g.map, t));
    state.SetLabel(p.type);
}

void BM_VertexConnectivity(benchmark::State& state) {
    const Generated& g = cached(static_cast<int>(state.range(0)));
    Adjacency a = adjacency(g.map);
    for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(a));
    state.SetLabel(kInstances[state.range(0)].type);
}

void BM_ConstructHamiltonian(benchmark::State& state) {
    const ReprParams& p = kInstances[state.range(0)];
    const Generated& g = cached(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(construct_hamiltonian(p, g.map, g.layout));
    state.SetLabel(p.type);
}

void BM_Oracle(benchmark::State& state) {
    const Generated& g = cached(static_cast<int>(state.range(0)));
    Adjacency a = adjacency(g.map);
    long long nodes = 0;
    for (auto _ : state) {
        OracleResult r = brute_force_hamiltonian(a, kDefaultOracleBudget);
        nodes = r.nodes;
        benchmark::DoNotOptimize(r);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
    state.SetLabel(kInstances[state.range(0)].type);
}

void BM_CuttingCycle(benchmark::State& state) {
    const Generated& g = cached(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cutting_cycle(g.map, g.layout));
}

void BM_SweepTriangleStrips(benchmark::State& state) {
    const DsemType& t = find_type("[3^6:3^3.4^2]_1");
    for (auto _ : state) {
        int ok = 0;
        for (const auto& p : enumerate_admissible(t, static_cast<int>(state.range(0)))) {
            Generated g = generate(p);
            ok += construct_hamiltonian(p, g.map, g.layout).verified;
        }
        benchmark::DoNotOptimize(ok);
    }
}

}  // namespace

BENCHMARK(BM_Generate)->DenseRange(0, 3);
BENCHMARK(BM_VerifyDsem)->DenseRange(0, 3);
BENCHMARK(BM_VertexConnectivity)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConstructHamiltonian)->DenseRange(0, 3);
BENCHMARK(BM_Oracle)->DenseRange(0, 3);
BENCHMARK(BM_CuttingCycle)->DenseRange(0, 3);
BENCHMARK(BM_SweepTriangleStrips)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
