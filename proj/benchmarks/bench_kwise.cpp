#include <benchmark/benchmark.h>

#include "kwise/binomial.hpp"
#include "kwise/chebyshev.hpp"
#include "kwise/extremal.hpp"
#include "kwise/lp.hpp"
#include "kwise/relaxed.hpp"

using namespace kwise;

namespace {

void BM_MomentLPSolve(benchmark::State& state) {
    const BinomialSpec spec(state.range(0), Rational(1, 2));
    const StandardFormLP lp = moment_lp(spec, 6, Direction::Maximize);
    for (auto _ : state) {
        LPSolution sol = solve_lp(lp);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_MomentLPSolve)->Arg(20)->Arg(60)->Arg(120);

void BM_DualSearch(benchmark::State& state) {
    const BinomialSpec spec(state.range(0), Rational(1, 2));
    for (auto _ : state) {
        auto cert = compute_M_dual_search(spec, 6);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_DualSearch)->Arg(20)->Arg(30)->Arg(40);

void BM_DualSearchThreads(benchmark::State& state) {
    const BinomialSpec spec(36, Rational(1, 2));
    DualSearchOptions options;
    options.threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto cert = compute_M_dual_search(spec, 8, options);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_DualSearchThreads)->Arg(1)->Arg(2)->Arg(4);

void BM_ExpectationFallingFactorial(benchmark::State& state) {
    const BinomialSpec spec(state.range(0), Rational(1, 3));
    const Polynomial poly = Polynomial::from_integer_roots(
        std::vector<long>{1, 2, 5, 6, 11, 12, 17, 18});
    for (auto _ : state) {
        Rational value = expectation(spec, poly);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_ExpectationFallingFactorial)->Arg(50)->Arg(200)->Arg(1000);

void BM_ExpectationDirectSum(benchmark::State& state) {
    const BinomialSpec spec(state.range(0), Rational(1, 3));
    const Polynomial poly = Polynomial::from_integer_roots(
        std::vector<long>{1, 2, 5, 6, 11, 12, 17, 18});
    for (auto _ : state) {
        Rational acc(0);
        for (long x = 0; x <= spec.n; ++x) {
            acc += binomial_pmf(spec, x) * poly.at(x);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ExpectationDirectSum)->Arg(50)->Arg(200)->Arg(1000);

void BM_ChebyshevFamily(benchmark::State& state) {
    for (auto _ : state) {
        ChebyshevFamily fam = chebyshev_family(state.range(0), 10);
        benchmark::DoNotOptimize(fam);
    }
}
BENCHMARK(BM_ChebyshevFamily)->Arg(20)->Arg(40);

void BM_TildeM(benchmark::State& state) {
    const BinomialSpec spec(state.range(0), Rational(3, 10));
    for (auto _ : state) {
        Rational value = tilde_M(spec, 8);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_TildeM)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
