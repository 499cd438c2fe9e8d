#include "gm/cli/selftest.hpp"

#include "gm/assign_ops.hpp"
#include "gm/oracles.hpp"
#include "gm/rng.hpp"
#include "gm/solver.hpp"
#include "gm/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gm::cli {

namespace {

Matrix uniform_matrix(Index rows, Index cols, Rng& rng)
{
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = rng.uniform();
    return m;
}

Matrix symmetric_matrix(Index n, Rng& rng)
{
    const Matrix m = uniform_matrix(n, n, rng);
    return 0.5 * (m + m.transpose());
}

template <class... Args>
std::string text(const Args&... args)
{
    std::ostringstream os;
    os.precision(3);
    (os << ... << args);
    return os.str();
}

CheckResult kron_row_major(std::uint64_t seed)
{
    Rng rng(seed);
    double worst = 0.0;
    int passed = 0;
    for (int t = 0; t < 20; ++t) {
        const Index n = 2 + static_cast<Index>(t % 4);
        const auto r = kron_vec_check(symmetric_matrix(n, rng), symmetric_matrix(n, rng), uniform_matrix(n, n, rng),
                                      uniform_matrix(n, n, rng), VecOrder::row_major);
        worst = std::max({worst, r.residual, r.a_coeff_error, r.b_coeff_error});
        passed += r.passed;
    }
    return {passed == 20, text(passed, "/20 instances, worst deviation ", worst)};
}

CheckResult kron_column_major_control(std::uint64_t seed)
{
    Rng rng(seed);
    int rejected = 0;
    for (int t = 0; t < 20; ++t) {
        const Index n = 2 + static_cast<Index>(t % 4);
        const auto r = kron_vec_check(symmetric_matrix(n, rng), symmetric_matrix(n, rng), uniform_matrix(n, n, rng),
                                      VecOrder::column_major);
        rejected += !r.passed;
    }
    return {rejected == 20, text(rejected, "/20 column-major stackings rejected")};
}

CheckResult eigen_batch(std::uint64_t seed)
{
    int ok = 0;
    for (int t = 0; t < 50; ++t) {
        const Index n = 3 + static_cast<Index>(t % 18);
        const auto g = random_geometric_graph(n, derive_seed(seed, static_cast<std::uint64_t>(t)), Connectivity::full);
        ok += eigen_signature(g.affinity()) == EigenSignature{1, n - 1};
    }
    return {ok == 50, text(ok, "/50 distance matrices with signature (1, n-1)")};
}

CheckResult brute_force_agreement(std::uint64_t seed)
{
    int hits = 0;
    double worst_gap = 0.0;
    for (int t = 0; t < 30; ++t) {
        const Index n = 4 + static_cast<Index>(t % 3);
        const auto pair = make_noisy_pair({n, derive_seed(seed, 100 + static_cast<std::uint64_t>(t)), 1.0, 0.0,
                                           Connectivity::full});
        SolverConfig config;
        const auto res = scg_solve(pair.source, pair.target, config);
        const auto best = brute_force_qap(pair.source, pair.target, config.lambda);
        const double z = objective_z(res.matching, pair.source, pair.target, config.lambda);
        const double gap = (best.value - z) / std::abs(best.value);
        if (gap <= 1e-9)
            ++hits;
        worst_gap = std::max(worst_gap, gap);
    }
    return {hits >= 27, text(hits, "/30 at the brute-force optimum, worst relative gap ", worst_gap)};
}

CheckResult softassign_bound(std::uint64_t seed)
{
    double worst_margin = -1.0;
    bool ok = true;
    for (int t = 0; t < 10; ++t) {
        const Index n = 30;
        const Matrix x = random_profit(n, 1.0, derive_seed(seed, 200 + static_cast<std::uint64_t>(t)));
        const double best = assignment_score(hungarian(x), x);
        for (double gamma : {3.0, 5.0, 10.0}) {
            const auto s = dynamic_softassign(x, gamma, 1e-9, 100000);
            const double gap = (best - s.matrix.cwiseProduct(x).sum()) / static_cast<double>(n);
            const double margin = gap - 1.0 / gamma;
            worst_margin = std::max(worst_margin, margin);
            ok = ok && s.converged && margin <= 1e-6;
        }
    }
    return {ok, text("largest (gap - 1/gamma) = ", worst_margin)};
}

CheckResult offset_invariance(std::uint64_t seed)
{
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const Matrix x = uniform_matrix(12, 12, rng);
        const Matrix ref = softassign_fixed_beta(x, 3.0, 1e-12, 2000).matrix;
        for (double b : {-5.0, 0.3, 100.0}) {
            const Matrix shifted = (x.array() - b).matrix();
            worst = std::max(worst, (softassign_fixed_beta(shifted, 3.0, 1e-12, 2000).matrix - ref).cwiseAbs().maxCoeff());
        }
    }
    return {worst <= 1e-10, text("max entrywise difference ", worst)};
}

CheckResult monotone_ascent(std::uint64_t seed)
{
    double worst = 0.0;
    int solves = 0;
    for (int t = 0; t < 8; ++t) {
        const Index n = 8 + static_cast<Index>(t);
        const auto s = derive_seed(seed, 300 + static_cast<std::uint64_t>(t));
        Matrix ma, mb;
        if (t % 2 == 0) {
            const auto g = random_geometric_graph(n, s, Connectivity::full);
            ma = g.affinity();
            mb = plant_permutation(g, s + 1).graph.affinity();
        } else {
            // Self-loops make the centred spectrum indefinite, so concave steps occur.
            Rng rng(s);
            ma = symmetric_matrix(n, rng);
            mb = symmetric_matrix(n, rng);
            mb.diagonal().setZero();
            ma.diagonal().setConstant(1.0);
        }
        const AttributedGraph a(ma), b(mb);
        for (auto alg : {Algorithm::scg, Algorithm::ga, Algorithm::dspfp, Algorithm::aipfp, Algorithm::sm}) {
            SolverConfig config;
            config.alpha = AlphaMode::adaptive();
            const auto res = variant_solve(alg, a, b, config);
            for (std::size_t k = 1; k < res.objective_trace.size(); ++k)
                worst = std::min(worst, res.objective_trace[k] - res.objective_trace[k - 1]);
            ++solves;
        }
    }
    return {worst >= -1e-9, text(solves, " solves, most negative step ", worst)};
}

} // namespace

std::vector<SelfCheck> selftest_checks()
{
    return {
        {"kron-vec", kron_row_major},
        {"kron-vec-column-major-control", kron_column_major_control},
        {"eigen-signature", eigen_batch},
        {"brute-force-qap", brute_force_agreement},
        {"softassign-bound", softassign_bound},
        {"offset-invariance", offset_invariance},
        {"monotone-ascent", monotone_ascent},
    };
}

} // namespace gm::cli
