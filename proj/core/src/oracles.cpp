#include "gm/oracles.hpp"

#include "gm/error.hpp"
#include "gm/rng.hpp"
#include "gm/solver.hpp"
#include "gm/synthgen.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace gm {

namespace {

template <typename Score>
BruteForceResult enumerate_permutations(Index n, Index n_tilde, Score&& score, double rel_tie)
{
    if (n != n_tilde)
        throw ValidationError("brute force needs graphs of equal size");
    if (n > kBruteForceMaxSize)
        throw ValidationError("brute force is limited to n <= 8");
    if (n < 1)
        throw ValidationError("brute force needs at least one node");

    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::vector<Index>, double>> scored;
    double best = -std::numeric_limits<double>::infinity();
    double scale = 0.0;
    do {
        const double v = score(perm);
        scored.emplace_back(perm, v);
        best = std::max(best, v);
        scale = std::max(scale, std::abs(v));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const double tie = rel_tie * std::max(scale, 1.0);
    BruteForceResult r{PermutationMatching::identity(0), best, {}};
    for (auto& [p, v] : scored)
        if (v >= best - tie)
            r.argmax_set.push_back(p);
    r.best = PermutationMatching::from_targets(r.argmax_set.front(), n);
    return r;
}

} // namespace

BruteForceResult brute_force_qap(const MatchingProblem& problem, double rel_tie)
{
    const Index n = problem.n();
    const Matrix& a = problem.a();
    const Matrix& b = problem.a_tilde();
    auto score = [&](const std::vector<Index>& p) {
        // 1/2 sum_ij A_ij B_{p(i) p(j)} + lambda sum_i K_{i p(i)}
        double z = 0.0;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                z += a(i, j) * b(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        z *= 0.5;
        if (problem.has_node_term())
            for (Index i = 0; i < n; ++i)
                z += problem.lambda() * problem.k()(i, p[static_cast<std::size_t>(i)]);
        return z;
    };
    return enumerate_permutations(problem.n(), problem.n_tilde(), score, rel_tie);
}

BruteForceResult brute_force_qap(const AttributedGraph& a, const AttributedGraph& b, double lambda, double rel_tie)
{
    return brute_force_qap(MatchingProblem(a, b, lambda), rel_tie);
}

BruteForceResult brute_force_lap(const Matrix& profit, double rel_tie)
{
    auto score = [&](const std::vector<Index>& p) {
        double s = 0.0;
        for (Index i = 0; i < profit.rows(); ++i)
            s += profit(i, p[static_cast<std::size_t>(i)]);
        return s;
    };
    return enumerate_permutations(profit.rows(), profit.cols(), score, rel_tie);
}

GridSearchResult grid_line_search(const MatchingProblem& problem, const Matrix& m, const Matrix& d, int points)
{
    if (points < 2)
        throw ValidationError("grid_line_search needs at least 2 points");
    GridSearchResult best{0.0, -std::numeric_limits<double>::infinity()};
    for (int k = 0; k < points; ++k) {
        const double alpha = static_cast<double>(k) / static_cast<double>(points - 1);
        const double z = problem.objective((1.0 - alpha) * m + alpha * d);
        if (z > best.value)
            best = {alpha, z};
    }
    return best;
}

Vector vectorize(const Matrix& m, VecOrder order)
{
    Vector v(m.size());
    Index k = 0;
    if (order == VecOrder::row_major) {
        for (Index i = 0; i < m.rows(); ++i)
            for (Index j = 0; j < m.cols(); ++j)
                v(k++) = m(i, j);
    } else {
        for (Index j = 0; j < m.cols(); ++j)
            for (Index i = 0; i < m.rows(); ++i)
                v(k++) = m(i, j);
    }
    return v;
}

KronCheckResult kron_vec_check(const Matrix& a, const Matrix& a_tilde, const Matrix& m, const Matrix& d,
                               VecOrder order, double tol)
{
    const Index n = a.rows();
    if (a.cols() != n || a_tilde.rows() != a_tilde.cols() || m.rows() != n || m.cols() != a_tilde.rows() ||
        d.rows() != m.rows() || d.cols() != m.cols())
        throw ValidationError("kron_vec_check: dimension mismatch");
    if (n > kKronMaxSize || a_tilde.rows() > kKronMaxSize)
        throw ValidationError("kron_vec_check is limited to n <= 6");

    const Index nt = a_tilde.rows();
    Matrix w(n * nt, n * nt);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            w.block(i * nt, j * nt, nt, nt) = a(i, j) * a_tilde;

    KronCheckResult r;
    const Vector mv = vectorize(m, order);
    const Vector dv = vectorize(d, order);
    r.residual = (w * mv - vectorize(a * m * a_tilde, order)).cwiseAbs().maxCoeff();

    const MatchingProblem problem(a, a_tilde, Matrix(), 0.0);
    const AlphaDecision trace_form = adaptive_alpha(problem, m, d);
    const Vector diff = mv - dv;
    const double a_vec = 0.5 * diff.dot(w * diff);
    const double b_vec = -diff.dot(w * mv);
    r.a_coeff_error = std::abs(trace_form.a_coeff - a_vec);
    r.b_coeff_error = std::abs(trace_form.b_coeff - b_vec);
    r.passed = r.residual <= tol && r.a_coeff_error <= tol && r.b_coeff_error <= tol;
    return r;
}

KronCheckResult kron_vec_check(const Matrix& a, const Matrix& a_tilde, const Matrix& m, VecOrder order, double tol)
{
    return kron_vec_check(a, a_tilde, m, m, order, tol);
}

EigenSignature eigen_signature(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw ValidationError("eigen_signature: matrix must be square");
    if (a != a.transpose())
        throw ValidationError("eigen_signature: matrix must be symmetric");
    const Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw SolverError("eigen_signature: eigensolver failed");
    const double tol = 1e-8 * a.norm();
    EigenSignature s;
    for (Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double ev = solver.eigenvalues()(i);
        if (ev > tol)
            ++s.positive;
        else if (ev < -tol)
            ++s.negative;
    }
    return s;
}

EigenSignature kron_signature(const EigenSignature& a, const EigenSignature& b)
{
    return {a.positive * b.positive + a.negative * b.negative, a.positive * b.negative + a.negative * b.positive};
}

double alpha_one_estimate(Index n)
{
    const double q = 1.0 - 1.0 / static_cast<double>(n);
    return q * q;
}

AlphaFrequency alpha_one_frequency(int trials, Index n, std::uint64_t seed)
{
    if (trials < 1)
        throw ValidationError("alpha_one_frequency: trials must be at least 1");
    if (n < 2)
        throw ValidationError("alpha_one_frequency: n must be at least 2");
    SolverConfig config;
    config.alpha = AlphaMode::adaptive();
    long long ones = 0;
    long long steps = 0;
    for (int t = 0; t < trials; ++t) {
        const auto base = derive_seed(seed, static_cast<std::uint64_t>(t));
        const auto a = random_geometric_graph(n, derive_seed(base, 0), Connectivity::full);
        const auto b = random_geometric_graph(n, derive_seed(base, 1), Connectivity::full);
        const auto r = scg_solve(a, b, config);
        for (double alpha : r.alpha_trace) {
            ++steps;
            ones += alpha == 1.0 ? 1 : 0;
        }
    }
    return {steps ? static_cast<double>(ones) / static_cast<double>(steps) : 0.0, alpha_one_estimate(n), steps};
}

} // namespace gm
