#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "toruscalc/betti.hpp"
#include "toruscalc/cdga_models.hpp"
#include "toruscalc/exactla.hpp"
#include "toruscalc/polytope.hpp"
#include "toruscalc/toricring.hpp"

using namespace toruscalc;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = dist(rng);
    return m;
}

void BM_SmithForm(benchmark::State& state)
{
    const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_RankKernel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const IntMatrix z = random_matrix(n, 7);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(z(i, j)) / Rational(static_cast<long>(j + 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_and_kernel(m));
}
BENCHMARK(BM_RankKernel)->Arg(8)->Arg(32)->Arg(64);

void BM_BettiGrid(benchmark::State& state)
{
    const int max_n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int n = 3; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k) {
                benchmark::DoNotOptimize(conn_sum_betti_closed(n, k));
                benchmark::DoNotOptimize(conn_sum_betti_mv(n, k));
                benchmark::DoNotOptimize(cohomology_betti(*model_A(n, k)));
            }
}
BENCHMARK(BM_BettiGrid)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_BuildSurgeryModels(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_surgery_models(n, k));
}
BENCHMARK(BM_BuildSurgeryModels)->Args({2, 1})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_VerifyModels(benchmark::State& state)
{
    const SurgeryModels m = build_surgery_models(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const std::set<std::string> groups(model_check_groups().begin(), model_check_groups().end());
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_models(m, groups));
}
BENCHMARK(BM_VerifyModels)->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_QuasitoricCube(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const FaceLattice q = cube_lattice(n);
    std::map<int, std::vector<long>> v;
    for (int i = 0; i < n; ++i) {
        std::vector<long> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        v[2 * i] = e;
        v[2 * i + 1] = e;
    }
    const auto xi = CharacteristicFunction::from_ints(n, v);
    for (auto _ : state)
        benchmark::DoNotOptimize(quasitoric_ring(q, xi));
}
BENCHMARK(BM_QuasitoricCube)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
