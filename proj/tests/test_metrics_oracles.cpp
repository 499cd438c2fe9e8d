#include "gm/assign_ops.hpp"
#include "gm/error.hpp"
#include "gm/metrics.hpp"
#include "gm/oracles.hpp"
#include "gm/solver.hpp"
#include "gm/synthgen.hpp"
#include "support/test_oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace gm;

namespace {

double elementwise_matching_error(const std::vector<Index>& target, const Matrix& a, const Matrix& b,
                                  const Matrix& f, const Matrix& ft, double lambda)
{
    // ||A - P B P^T||_F entrywise: (P B P^T)_{ij} = B_{t(i) t(j)}
    double edge = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = 0; j < target.size(); ++j) {
            const double diff = a(i, j) - b(target[i], target[j]);
            edge += diff * diff;
        }
    double node = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i)
        for (Index c = 0; c < f.cols(); ++c) {
            const double diff = f(i, c) - ft(target[i], c);
            node += diff * diff;
        }
    return 0.25 * std::sqrt(edge) + lambda * std::sqrt(node);
}

std::vector<std::vector<Index>> sorted_set(std::vector<std::vector<Index>> s)
{
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST_CASE("matching_error")
{
    const auto g = random_geometric_graph(7, 1, Connectivity::full);
    CHECK(matching_error(PermutationMatching::identity(7), g, g, 1.0) == 0.0);

    const auto planted = plant_permutation(g, 3);
    CHECK(matching_error(planted.truth, g, planted.graph, 1.0) == 0.0);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = graph_from_points(test::random_points(4, seed), test::random_matrix(4, 3, seed + 10));
        const auto b = graph_from_points(test::random_points(4, seed + 1), test::random_matrix(4, 3, seed + 11));
        Rng rng(seed);
        const auto raw = rng.permutation(4);
        const std::vector<Index> target(raw.begin(), raw.end());
        const auto m = PermutationMatching::from_targets(target, 4);
        const double expect =
            elementwise_matching_error(target, a.affinity(), b.affinity(), a.features(), b.features(), 0.8);
        CHECK(matching_error(m, a, b, 0.8) == doctest::Approx(expect).epsilon(1e-13));
    }
    CHECK_THROWS_AS(matching_error(PermutationMatching::identity(6), g, g, 1.0), ValidationError);
}

TEST_CASE("accuracy")
{
    const auto truth = PermutationMatching::from_targets({1, 2, 3, 0}, 4);
    CHECK(accuracy(truth, truth) == 1.0);
    CHECK(accuracy(PermutationMatching::identity(4), truth) == 0.0);
    CHECK(accuracy(PermutationMatching::from_targets({1, 2, 0, 3}, 4), truth) == 0.5);
    CHECK_THROWS_AS(accuracy(PermutationMatching::identity(3), truth), ValidationError);
}

TEST_CASE("error_rate")
{
    CHECK(error_rate(2.5, 2.5) == 1.0);
    CHECK(error_rate(1.12 * 3.0, 3.0) == doctest::Approx(1.12).epsilon(1e-15));
    CHECK_THROWS_AS(error_rate(1.0, 0.0), ValidationError);
}

TEST_CASE("brute_force_qap")
{
    const AttributedGraph two(Matrix{{0.0, 1.0}, {1.0, 0.0}});
    const auto r = brute_force_qap(two, two, 1.0);
    CHECK(r.argmax_set.size() == 2);
    CHECK(r.best == PermutationMatching::identity(2));
    CHECK(r.value == 1.0);

    const auto g = random_geometric_graph(6, 12, Connectivity::full);
    const auto planted = plant_permutation(g, 13);
    const auto bf = brute_force_qap(g, planted.graph, 1.0);
    CHECK(bf.argmax_set.size() == 1);
    CHECK(bf.best == planted.truth);

    const auto nine = random_geometric_graph(9, 1, Connectivity::full);
    CHECK_THROWS_AS(brute_force_qap(nine, nine, 1.0), ValidationError);
}

TEST_CASE("brute_force_lap agrees with hungarian")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Matrix x = test::random_matrix(6, 6, seed);
        CHECK(brute_force_lap(x).value == doctest::Approx(assignment_score(hungarian(x), x)).epsilon(1e-12));
    }
}

TEST_CASE("kron_vec_check")
{
    const Matrix id = Matrix::Identity(2, 2);
    const auto trivial = kron_vec_check(id, id, id);
    CHECK(trivial.passed);
    CHECK(trivial.residual == 0.0);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Matrix a = test::random_symmetric(4, seed);
        const Matrix b = test::random_symmetric(4, seed + 20);
        const Matrix m = test::random_matrix(4, 4, seed + 40);
        const Matrix d = test::random_doubly_stochastic(4, seed + 60);
        CHECK(kron_vec_check(a, b, m, d).passed);
        // negative control: column stacking breaks the identity for A != A~
        CHECK_FALSE(kron_vec_check(a, b, m, d, VecOrder::column_major).passed);
    }
    CHECK_THROWS_AS(kron_vec_check(Matrix::Identity(7, 7), Matrix::Identity(7, 7), Matrix::Identity(7, 7)),
                    ValidationError);
}

TEST_CASE("eigen_signature of distance matrices")
{
    const auto two = graph_from_points({{0, 0}, {0.3, 0.4}});
    CHECK(eigen_signature(two.affinity()) == EigenSignature{1, 1});

    const auto g = graph_from_points(test::random_points(20, 5));
    CHECK(eigen_signature(g.affinity()) == EigenSignature{1, 19});

    const EigenSignature s10{1, 9};
    CHECK(kron_signature(s10, s10).positive == 82);
    CHECK(kron_signature(s10, s10).negative == 18);

    // Dense cross-check of the Kronecker count on a small pair.
    const auto a = graph_from_points(test::random_points(5, 1)).affinity();
    const auto b = graph_from_points(test::random_points(5, 2)).affinity();
    Matrix w(25, 25);
    for (Index i = 0; i < 5; ++i)
        for (Index j = 0; j < 5; ++j)
            w.block(i * 5, j * 5, 5, 5) = a(i, j) * b;
    CHECK(eigen_signature(w) == kron_signature(eigen_signature(a), eigen_signature(b)));

    Matrix asym = Matrix::Zero(2, 2);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(eigen_signature(asym), ValidationError);
}

TEST_CASE("alpha_one_frequency")
{
    CHECK(alpha_one_estimate(2) == 0.25);
    CHECK(alpha_one_estimate(50) == doctest::Approx(0.9604).epsilon(1e-12));
    const auto f = alpha_one_frequency(3, 12, 7);
    CHECK(f.steps > 0);
    CHECK(f.fraction >= 0.0);
    CHECK(f.fraction <= 1.0);
    MESSAGE("n=12 fraction " << f.fraction << " vs estimate " << f.estimate);
    CHECK_THROWS_AS(alpha_one_frequency(0, 10, 1), ValidationError);
}

TEST_CASE("argmax sets are invariant to scaling and offset of the target")
{
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Index n = 4 + static_cast<Index>(seed % 3);
        const auto ga = graph_from_points(test::random_points(n, seed), test::random_matrix(n, 2, seed + 1));
        const auto gb = graph_from_points(test::random_points(n, seed + 2), test::random_matrix(n, 2, seed + 3));
        const Matrix k = ga.features() * gb.features().transpose();
        const auto base = sorted_set(brute_force_qap(MatchingProblem(ga.affinity(), gb.affinity(), k, 1.0), 1e-9).argmax_set);
        for (double u : {0.5, 2.0})
            for (double q : {-1.0, 3.0}) {
                const Matrix bt = (u * gb.affinity()).array() + q;
                CHECK(sorted_set(brute_force_qap(MatchingProblem(ga.affinity(), bt, k, u), 1e-9).argmax_set) == base);

                // node term alone: F~ -> u F~ + q 11^T
                const Matrix ft = (u * gb.features()).array() + q;
                const Matrix kt = ga.features() * ft.transpose();
                const Matrix zero = Matrix::Zero(n, n);
                CHECK(sorted_set(brute_force_qap(MatchingProblem(zero, zero, kt, 1.0), 1e-9).argmax_set) ==
                      sorted_set(brute_force_qap(MatchingProblem(zero, zero, k, 1.0), 1e-9).argmax_set));
            }
    }
}

TEST_CASE("brute-force optimum has the smallest squared matching error")
{
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto ga = graph_from_points(test::random_points(6, seed), test::random_matrix(6, 2, seed + 5));
        const auto gb = plant_permutation(graph_from_points(test::random_points(6, seed + 1),
                                                            test::random_matrix(6, 2, seed + 6)),
                                          seed)
                            .graph;
        // the squared error with node weight lambda pairs with Z at 2 lambda
        const auto bf = brute_force_qap(ga, gb, 2.0);
        SolverConfig c;
        c.gamma = 3.0;
        c.lambda = 2.0;
        for (auto alg : {Algorithm::scg, Algorithm::dspfp, Algorithm::aipfp}) {
            const auto r = variant_solve(alg, ga, gb, c);
            CHECK(matching_error_squared(bf.best, ga, gb, 1.0) <= matching_error_squared(r.matching, ga, gb, 1.0) + 1e-9);
        }
    }
}
