#include "gm/solver.hpp"

#include "gm/assign_ops.hpp"
#include "gm/error.hpp"

#include <cctype>
#include <chrono>

namespace gm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct OperatorOutput {
    Matrix block;
    int inner_iterations = 0;
    bool converged = true;
};

OperatorOutput apply_operator(const Matrix& slack, Index rows, Index cols, const SolverConfig& config)
{
    switch (config.op) {
    case Operator::softassign: {
        auto r = dynamic_softassign(slack, config.gamma, config.eps_sinkhorn, config.max_inner_iters);
        return {r.matrix.topLeftCorner(rows, cols), r.inner_iterations, r.converged};
    }
    case Operator::alternating: {
        auto r = alternating_projection(slack, config.max_inner_iters, config.eps_sinkhorn);
        return {r.matrix.topLeftCorner(rows, cols), r.inner_iterations, r.converged};
    }
    case Operator::hungarian:
        return {permutation_to_matrix(hungarian(slack)).topLeftCorner(rows, cols), 1, true};
    case Operator::greedy:
        return {permutation_to_matrix(greedy_assign(slack)).topLeftCorner(rows, cols), 1, true};
    case Operator::spectral: {
        auto r = spectral_normalize(slack);
        return {r.matrix.topLeftCorner(rows, cols), 1, true};
    }
    }
    throw ValidationError("unknown operator");
}

SolveResult solve_oriented(const AttributedGraph& a, const AttributedGraph& b, const SolverConfig& config)
{
    const auto start = Clock::now();
    const MatchingProblem problem(a, b, config.lambda);
    const AlphaMode alpha_mode = config.alpha.value_or(AlphaMode::adaptive());
    const Index n = problem.n();
    const Index nt = problem.n_tilde();

    SolveResult result{PermutationMatching({}, n, nt), Matrix(), 0.0, 0, {}, {}, {}, 0, true,
                       StopReason::max_iterations, 0.0};

    Matrix relaxed = Matrix::Constant(n, nt, 1.0 / static_cast<double>(n * nt));
    Matrix amb = problem.a() * relaxed * problem.a_tilde();
    // Only the top-left block is rewritten; the slack columns stay zero.
    Matrix slack = Matrix::Zero(n, n);
    result.objective_trace.push_back(problem.objective(relaxed, amb));

    int zero_steps = 0;
    for (int t = 1; t <= config.max_outer_iters; ++t) {
        const auto iter_start = Clock::now();
        slack.topLeftCorner(n, nt) = amb;
        if (problem.has_node_term())
            slack.topLeftCorner(n, nt) += problem.lambda() * problem.k();
        if (!slack.allFinite())
            throw SolverError("gradient overflowed at outer iteration " + std::to_string(t));

        OperatorOutput d = apply_operator(slack, n, nt, config);
        result.inner_iterations += d.inner_iterations;
        result.inner_all_converged = result.inner_all_converged && d.converged;

        double alpha = alpha_mode.value;
        if (alpha_mode.is_adaptive())
            alpha = adaptive_alpha(problem, relaxed, d.block, amb).alpha;

        Matrix next = apply_step(relaxed, d.block, alpha);
        const double change = (next - relaxed).cwiseAbs().maxCoeff();
        relaxed = std::move(next);
        amb.noalias() = problem.a() * relaxed * problem.a_tilde();

        result.iterations = t;
        result.alpha_trace.push_back(alpha);
        result.objective_trace.push_back(problem.objective(relaxed, amb));
        result.iteration_seconds.push_back(seconds_since(iter_start));

        zero_steps = alpha == 0.0 ? zero_steps + 1 : 0;
        if (zero_steps >= 2) {
            result.stop = StopReason::stagnation;
            break;
        }
        if (change < config.eps_outer) {
            result.stop = StopReason::converged;
            break;
        }
    }

    if (!relaxed.allFinite())
        throw SolverError("solver produced non-finite iterates");
    result.matching = discretize(relaxed);
    result.objective = problem.objective(permutation_to_matrix(result.matching, n, nt));
    result.relaxed = std::move(relaxed);
    result.wall_time = seconds_since(start);
    return result;
}

} // namespace

std::string_view to_string(StopReason r)
{
    switch (r) {
    case StopReason::converged: return "converged";
    case StopReason::max_iterations: return "max-iterations";
    case StopReason::stagnation: return "stagnation";
    }
    return "unknown";
}

SolveResult scg_solve(const AttributedGraph& a, const AttributedGraph& b, const SolverConfig& config)
{
    config.validate();
    if (a.has_features() != b.has_features())
        throw ValidationError("features must be present on both graphs or neither");
    if (a.size() >= b.size())
        return solve_oriented(a, b, config);

    SolveResult r = solve_oriented(b, a, config);
    r.matching = r.matching.transposed();
    r.relaxed.transposeInPlace();
    return r;
}

std::string_view to_string(Algorithm alg)
{
    switch (alg) {
    case Algorithm::scg: return "scg";
    case Algorithm::ga: return "ga";
    case Algorithm::dspfp: return "dspfp";
    case Algorithm::aipfp: return "aipfp";
    case Algorithm::sm: return "sm";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name)
{
    std::string lower(name);
    for (auto& c : lower)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (auto alg : {Algorithm::scg, Algorithm::ga, Algorithm::dspfp, Algorithm::aipfp, Algorithm::sm})
        if (lower == to_string(alg))
            return alg;
    throw ValidationError("unknown algorithm: " + std::string(name));
}

Operator operator_for(Algorithm alg) noexcept
{
    switch (alg) {
    case Algorithm::scg:
    case Algorithm::ga: return Operator::softassign;
    case Algorithm::dspfp: return Operator::alternating;
    case Algorithm::aipfp: return Operator::greedy;
    case Algorithm::sm: return Operator::spectral;
    }
    return Operator::softassign;
}

AlphaMode default_alpha(Algorithm alg) noexcept
{
    switch (alg) {
    case Algorithm::scg:
    case Algorithm::aipfp: return AlphaMode::adaptive();
    case Algorithm::ga:
    case Algorithm::dspfp:
    case Algorithm::sm: return AlphaMode::fixed(1.0);
    }
    return AlphaMode::adaptive();
}

SolveResult variant_solve(Algorithm alg, const AttributedGraph& a, const AttributedGraph& b,
                          const SolverConfig& config)
{
    SolverConfig c = config;
    c.op = operator_for(alg);
    if (!c.alpha)
        c.alpha = default_alpha(alg);
    return scg_solve(a, b, c);
}

PermutationMatching discretize(const Matrix& relaxed)
{
    if (!relaxed.allFinite())
        throw ValidationError("discretize: relaxed matrix has non-finite entries");
    return hungarian(relaxed);
}

} // namespace gm
