#include "nlg/catalog.hpp"
#include "nlg/protocol.hpp"
#include "nlg/rand.hpp"

#include <benchmark/benchmark.h>

using namespace nlg;

static void BM_OperatorSchmidtRank16(benchmark::State& state) {
    Rng rng(1);
    const Matrix u = random_unitary(rng, 16);
    for (auto _ : state) {
        auto r = operator_schmidt_rank(u, 4, 4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_OperatorSchmidtRank16);

static void BM_SynthesizeW_S3(benchmark::State& state) {
    Rng rng(2);
    const auto set = s3_irrep_set();
    QBlockFamily q;
    q.dB = 4;
    for (const auto& ir : set.irreps)
        q.blocks.push_back(random_unitary(rng, ir.dim * 4));
    for (auto _ : state) {
        auto w = synthesize_W(set, q);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_SynthesizeW_S3);

static void BM_AssembleEq66(benchmark::State& state) {
    const auto& gfu = std::get<GroupFormUnitary>(catalog_lookup("eq66").default_variant().form);
    for (auto _ : state) {
        auto u = assemble_group_unitary(gfu.rep, gfu.wfam);
        benchmark::DoNotOptimize(u);
    }
}
BENCHMARK(BM_AssembleEq66);

static void BM_SimulateEq60AllBranches(benchmark::State& state) {
    const auto& gfu = std::get<GroupFormUnitary>(catalog_lookup("eq60").default_variant().form);
    Rng rng(3);
    const StateVector in({3, 3}, random_state(rng, 9));
    for (auto _ : state) {
        auto t = simulate_group_protocol(gfu, in);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_SimulateEq60AllBranches);

BENCHMARK_MAIN();
