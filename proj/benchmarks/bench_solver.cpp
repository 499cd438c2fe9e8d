#include "gm/assign_ops.hpp"
#include "gm/solver.hpp"
#include "gm/stepsize.hpp"
#include "gm/synthgen.hpp"

#include <benchmark/benchmark.h>

using namespace gm;

namespace {

// One outer iteration: gradient, softassign, step size and update.
void BM_OuterIteration(benchmark::State& state)
{
    const auto n = static_cast<Index>(state.range(0));
    const auto a = random_geometric_graph(n, 1, Connectivity::full);
    const auto b = plant_permutation(a, 2).graph;
    const MatchingProblem problem(a, b, 0.0);
    const Matrix m = Matrix::Constant(n, n, 1.0 / static_cast<double>(n * n));
    const Matrix amb = problem.a() * m * problem.a_tilde();
    for (auto _ : state) {
        const Matrix grad = problem.a() * m * problem.a_tilde();
        const Matrix d = dynamic_softassign(grad, 5.0, 1e-6, 100).matrix;
        const auto dec = adaptive_alpha(problem, m, d, amb);
        Matrix next = apply_step(m, d, dec.alpha);
        benchmark::DoNotOptimize(next.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OuterIteration)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMillisecond);

void BM_ScgSolve(benchmark::State& state)
{
    const auto n = static_cast<Index>(state.range(0));
    const auto a = random_geometric_graph(n, 3, Connectivity::full);
    const auto b = plant_permutation(a, 4).graph;
    SolverConfig config;
    for (auto _ : state) {
        auto r = scg_solve(a, b, config);
        benchmark::DoNotOptimize(r.objective);
        state.counters["iterations"] = r.iterations;
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScgSolve)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMillisecond);

void BM_DynamicSoftassign(benchmark::State& state)
{
    const auto n = static_cast<Index>(state.range(0));
    const Matrix x = random_profit(n, 1.0, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(dynamic_softassign(x, 5.0, 1e-6, 100).matrix.data());
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DynamicSoftassign)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);

void BM_Hungarian(benchmark::State& state)
{
    const auto n = static_cast<Index>(state.range(0));
    const Matrix x = random_profit(n, 1.0, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(hungarian(x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->Arg(128)->Arg(256)->Arg(512)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
