#include <benchmark/benchmark.h>

#include "descent/coset.hpp"
#include "descent/orbit.hpp"
#include "descent/partition.hpp"
#include "descent/weyl.hpp"

namespace {

using namespace descent;

void BM_decode_encode_roundtrip(benchmark::State& state) {
    int rank = static_cast<int>(state.range(0));
    std::vector<DescendingCode> codes = enumerate_codes(rank);
    for (auto _ : state) {
        for (const DescendingCode& code : codes) {
            DescendingCode back = encode(decode(code).permutation);
            benchmark::DoNotOptimize(back);
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(codes.size()));
}
BENCHMARK(BM_decode_encode_roundtrip)->Arg(4)->Arg(5)->Arg(6);

void BM_enumerate_coset_codes(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Composition parabolic({n / 2, n - n / 2});
    for (auto _ : state) {
        auto codes = enumerate_coset_codes(parabolic);
        benchmark::DoNotOptimize(codes);
    }
}
BENCHMARK(BM_enumerate_coset_codes)->Arg(8)->Arg(10);

void BM_construct_w_mu(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<int> parts;
    int rest = n;
    for (int p = 4; rest > 0; rest -= std::min(p, rest)) parts.push_back(std::min(p, rest));
    SortedPartition mu(parts);
    for (auto _ : state) {
        auto code = construct_w_mu(mu);
        benchmark::DoNotOptimize(code);
    }
}
BENCHMARK(BM_construct_w_mu)->Arg(10)->Arg(20)->Arg(40);

void BM_semiwhittaker_support(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    SortedPartition mu({n - n / 2, n / 2});
    for (auto _ : state) {
        auto report = semiwhittaker_verdict(mu, mu.as_composition());
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_semiwhittaker_support)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
