#include "gm/assign_ops.hpp"
#include "gm/error.hpp"
#include "gm/metrics.hpp"
#include "gm/oracles.hpp"
#include "gm/solver.hpp"
#include "gm/synthgen.hpp"
#include "support/test_oracles.hpp"

#include <doctest.h>

using namespace gm;

namespace {

SolverConfig default_config()
{
    SolverConfig c;
    c.gamma = 5.0;
    return c;
}

AttributedGraph scaled(const AttributedGraph& g, double u)
{
    return AttributedGraph(u * g.affinity());
}

} // namespace

TEST_CASE("two-node symmetric instance")
{
    Matrix a(2, 2);
    a << 0, 1, 1, 0;
    const AttributedGraph g(a);
    const auto r = scg_solve(g, g, default_config());
    CHECK(r.matching.pairs().size() == 2);
    CHECK(r.objective == doctest::Approx(1.0));
}

TEST_CASE("planted permutation is recovered and is the brute-force optimum")
{
    const auto ga = random_geometric_graph(6, 2024, Connectivity::full);
    const auto planted = plant_permutation(ga, 99);
    const auto r = scg_solve(ga, planted.graph, default_config());
    const auto bf = brute_force_qap(ga, planted.graph, 1.0);
    CHECK(r.matching == planted.truth);
    CHECK(r.matching == bf.best);
    CHECK(r.objective == doctest::Approx(bf.value).epsilon(1e-12));
}

TEST_CASE("rectangular instances match every target once")
{
    const auto ga = random_geometric_graph(5, 1, Connectivity::full);
    const auto gb = random_geometric_graph(4, 2, Connectivity::full);
    for (const auto& [src, dst] : {std::pair{&ga, &gb}, std::pair{&gb, &ga}}) {
        const auto r = scg_solve(*src, *dst, default_config());
        CHECK(r.matching.pairs().size() == 4);
        CHECK(r.matching.source_size() == src->size());
        CHECK(r.matching.target_size() == dst->size());
        CHECK(r.relaxed.rows() == src->size());
        CHECK(r.relaxed.cols() == dst->size());
    }
}

TEST_CASE("slack columns never leak into the relaxed matching")
{
    const auto ga = random_geometric_graph(9, 3, Connectivity::full);
    const auto gb = delete_nodes(ga, std::vector<Index>{2, 5, 7}).graph;
    const auto r = scg_solve(ga, gb, default_config());
    REQUIRE(r.relaxed.rows() == 9);
    REQUIRE(r.relaxed.cols() == 6);
    CHECK(r.relaxed.colwise().sum().maxCoeff() <= 1.0 + 1e-6);
    CHECK(r.relaxed.rowwise().sum().maxCoeff() <= 1.0 + 1e-6);
    // the first full step replaces the uniform start entirely
    if (r.alpha_trace.front() == 1.0)
        CHECK((r.relaxed.colwise().sum().array() - 1.0).abs().maxCoeff() < 1e-6);
}

TEST_CASE("DSPFP is close to SCG on a small planted instance")
{
    const auto ga = random_geometric_graph(6, 2024, Connectivity::full);
    const auto planted = plant_permutation(ga, 99);
    const auto scg = variant_solve(Algorithm::scg, ga, planted.graph, default_config());
    const auto dspfp = variant_solve(Algorithm::dspfp, ga, planted.graph, default_config());
    const auto bf = brute_force_qap(ga, planted.graph, 1.0);
    CHECK(dspfp.objective >= 0.95 * scg.objective);
    CHECK(scg.objective <= bf.value * (1 + 1e-12));
}

TEST_CASE("AIPFP iterates are permutation embeddings")
{
    const auto ga = random_geometric_graph(12, 4, Connectivity::full);
    const auto gb = plant_permutation(ga, 5).graph;
    auto c = default_config();
    c.alpha = AlphaMode::fixed(1.0);
    const auto r = variant_solve(Algorithm::aipfp, ga, gb, c);
    CHECK((r.relaxed.array() * (1.0 - r.relaxed.array())).abs().maxCoeff() == 0.0);
    CHECK(r.relaxed.sum() == 12.0);
}

TEST_CASE("SM propagates the degenerate-gradient error")
{
    const AttributedGraph a(Matrix::Zero(3, 3), Matrix::Ones(3, 1));
    const AttributedGraph b(Matrix::Zero(3, 3), Matrix::Constant(3, 1, -1.0));
    CHECK_THROWS_AS(variant_solve(Algorithm::sm, a, b, default_config()), SolverError);
}

TEST_CASE("variant bindings")
{
    CHECK(operator_for(Algorithm::scg) == Operator::softassign);
    CHECK(operator_for(Algorithm::ga) == Operator::softassign);
    CHECK(operator_for(Algorithm::dspfp) == Operator::alternating);
    CHECK(operator_for(Algorithm::aipfp) == Operator::greedy);
    CHECK(operator_for(Algorithm::sm) == Operator::spectral);
    CHECK(default_alpha(Algorithm::scg).is_adaptive());
    CHECK(default_alpha(Algorithm::ga) == AlphaMode::fixed(1.0));
    CHECK(parse_algorithm("DSPFP") == Algorithm::dspfp);
    CHECK_THROWS_AS(parse_algorithm("ipfp"), ValidationError);
}

TEST_CASE("discretize")
{
    Matrix n(2, 2);
    n << 0.9, 0.1, 0.1, 0.9;
    CHECK(discretize(n) == PermutationMatching::identity(2));
    CHECK(discretize(Matrix::Constant(3, 3, 1.0 / 3.0)) == PermutationMatching::identity(3));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Matrix ds = test::random_doubly_stochastic(5, seed);
        CHECK(assignment_score(discretize(ds), ds) == doctest::Approx(test::best_lap_score(ds)).epsilon(1e-12));
    }
    Matrix bad = n;
    bad(0, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(discretize(bad), ValidationError);
}

TEST_CASE("adaptive step size ascends for every operator")
{
    for (auto alg : {Algorithm::scg, Algorithm::ga, Algorithm::dspfp, Algorithm::aipfp, Algorithm::sm}) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const auto ga = random_geometric_graph(15, seed, seed % 2 ? Connectivity::full : Connectivity::delaunay);
            const auto gb = delete_nodes(plant_permutation(ga, seed + 1).graph, 10.0, seed + 2).graph;
            auto c = default_config();
            c.alpha = AlphaMode::adaptive();
            const auto r = variant_solve(alg, ga, gb, c);
            CHECK(r.iterations <= c.max_outer_iters);
            CHECK(r.alpha_trace.size() == static_cast<std::size_t>(r.iterations));
            for (std::size_t t = 1; t < r.objective_trace.size(); ++t)
                CHECK(r.objective_trace[t] - r.objective_trace[t - 1] >= -1e-9);
        }
    }
}

TEST_CASE("softassign iterates stay doubly stochastic")
{
    const auto ga = random_geometric_graph(20, 8, Connectivity::full);
    const auto gb = plant_permutation(ga, 9).graph;
    auto c = default_config();
    c.eps_sinkhorn = 1e-9;
    c.max_inner_iters = 5000;
    for (int cap = 1; cap <= 6; ++cap) {
        c.max_outer_iters = cap;
        const auto r = scg_solve(ga, gb, c);
        REQUIRE(r.inner_all_converged);
        // N^0 = 11^T / n^2 has row sums 1/n; feasibility starts with the first full step
        REQUIRE(r.alpha_trace.front() == 1.0);
        CHECK(r.relaxed.minCoeff() >= 0.0);
        CHECK(DoublyStochasticMatrix::marginal_violation(r.relaxed) <= 10 * c.eps_sinkhorn);
    }
}

TEST_CASE("scaling the target affinity does not change accuracy")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto ga = random_geometric_graph(12, seed, Connectivity::delaunay);
        const auto planted = plant_permutation(ga, seed + 100);
        const double base = accuracy(scg_solve(ga, planted.graph, default_config()).matching, planted.truth);
        for (double u : {0.5, 2.0}) {
            const auto r = scg_solve(ga, scaled(planted.graph, u), default_config());
            CHECK(accuracy(r.matching, planted.truth) == base);
        }
    }
}

TEST_CASE("solves are deterministic")
{
    const auto spec = GenSpec{40, 7, 1.0, 5.0, Connectivity::delaunay};
    const auto pair = make_noisy_pair(spec);
    const auto r1 = scg_solve(pair.source, pair.target, default_config());
    const auto r2 = scg_solve(pair.source, pair.target, default_config());
    CHECK(r1.matching == r2.matching);
    CHECK(r1.relaxed == r2.relaxed);
    CHECK(r1.objective_trace == r2.objective_trace);
}

TEST_CASE("invalid configuration is rejected")
{
    const auto g = random_geometric_graph(4, 1, Connectivity::full);
    auto c = default_config();
    c.gamma = 0.0;
    CHECK_THROWS_AS(scg_solve(g, g, c), ValidationError);
    c = default_config();
    c.alpha = AlphaMode::fixed(1.5);
    CHECK_THROWS_AS(scg_solve(g, g, c), ValidationError);
    c = default_config();
    c.max_outer_iters = 0;
    CHECK_THROWS_AS(scg_solve(g, g, c), ValidationError);
}

TEST_CASE("gradient overflow is a solver error")
{
    const AttributedGraph g(Matrix::Constant(3, 3, 1e200) - Matrix::Identity(3, 3) * 1e200);
    CHECK_THROWS_AS(scg_solve(g, g, SolverConfig{}), SolverError);
}
