#include <benchmark/benchmark.h>

#include "nilgen/bounds.hpp"
#include "nilgen/phi.hpp"

using namespace nilgen;

namespace {

NilpotentProfile wide_profile() {
    return NilpotentProfile({{Integer(2), 8, 16},
                             {Integer(3), 4, 8},
                             {Integer(5), 2, 2},
                             {Integer(97), 8, 12}});
}

}  // namespace

static void PhiProfileExact(benchmark::State& state) {
    const NilpotentProfile profile = wide_profile();
    const long k = profile.rank() + state.range(0);
    for (auto _ : state) {
        auto v = phi_profile(profile, k);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(PhiProfileExact)->Arg(2)->Arg(16)->Arg(64);

static void MinKExactScan(benchmark::State& state) {
    const NilpotentProfile profile = wide_profile();
    const Rational eps = make_rational(Integer(1), ipow(Integer(10), state.range(0)));
    for (auto _ : state) {
        auto k = min_k_exact(profile, eps);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(MinKExactScan)->Arg(1)->Arg(4)->Arg(9);

static void CountGeneratingTuples(benchmark::State& state) {
    const AbelianGroup g = parse_group({Integer(state.range(0))});
    for (auto _ : state) {
        auto n = count_generating_tuples(g, 2);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(CountGeneratingTuples)->Arg(12)->Arg(36)->Arg(60);

static void EstimatePhiTrials(benchmark::State& state) {
    const AbelianGroup g = parse_group({Integer(12), Integer(5)});
    for (auto _ : state) {
        auto e = estimate_phi(g, 4, state.range(0), 7);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(EstimatePhiTrials)->Arg(100)->Arg(1000);
