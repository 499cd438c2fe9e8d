#pragma once

#include "gm/config.hpp"
#include "gm/graph.hpp"
#include "gm/stepsize.hpp"

#include <string_view>
#include <vector>

namespace gm {

enum class StopReason { converged, max_iterations, stagnation };
std::string_view to_string(StopReason r);

struct SolveResult {
    PermutationMatching matching;
    Matrix relaxed;              ///< final N, oriented as the caller's (source, target)
    double objective = 0.0;      ///< Z at the discrete matching
    int iterations = 0;
    std::vector<double> alpha_trace;
    std::vector<double> objective_trace; ///< Z(N^0), Z(N^1), ...
    std::vector<double> iteration_seconds;
    int inner_iterations = 0;    ///< summed over outer iterations
    bool inner_all_converged = true;
    StopReason stop = StopReason::max_iterations;
    double wall_time = 0.0;      ///< seconds, whole solve
};

/// Constrained-gradient outer loop with the operator and step policy in
/// `config`: N <- (1 - alpha) N + alpha P(A N A~ + lambda K), started from the
/// uniform matrix, stopped when max |N' - N| < eps_outer, then discretized by
/// the Hungarian method.
///
/// Graphs of different sizes are handled by orienting the larger graph as the
/// source and running the operator on a zero-padded square slack matrix. An
/// unset `config.alpha` means adaptive.
SolveResult scg_solve(const AttributedGraph& a, const AttributedGraph& b, const SolverConfig& config);

/// Reference algorithms sharing the same outer loop.
enum class Algorithm { scg, ga, dspfp, aipfp, sm };

std::string_view to_string(Algorithm alg);
Algorithm parse_algorithm(std::string_view name);

/// Constraining operator each algorithm is defined by.
Operator operator_for(Algorithm alg) noexcept;
/// Step policy each algorithm uses unless the caller overrides it:
/// adaptive for SCG and AIPFP, fixed 1 for GA, DSPFP and SM.
AlphaMode default_alpha(Algorithm alg) noexcept;

/// Runs `alg` with its operator; `config.alpha`, when set, overrides the
/// algorithm's default step policy.
SolveResult variant_solve(Algorithm alg, const AttributedGraph& a, const AttributedGraph& b,
                          const SolverConfig& config);

/// Hungarian rounding of a relaxed matching (maximizes selected mass).
PermutationMatching discretize(const Matrix& relaxed);

} // namespace gm
