#pragma once

#include "gm/graph.hpp"

#include <optional>

namespace gm {

struct MetricReport {
    double matching_error = 0.0;
    std::optional<double> accuracy;   ///< only with ground truth
    std::optional<double> error_rate; ///< only with a baseline error
};

/// 1/4 ||A - M A~ M^T||_F + lambda ||F - M F~||_F, norms unsquared. The
/// feature term is dropped when the graphs carry no features.
double matching_error(const PermutationMatching& m, const AttributedGraph& a, const AttributedGraph& b,
                      double lambda);

/// 1/4 ||A - M A~ M^T||_F^2 + lambda ||F - M F~||_F^2, the form whose
/// minimizer over permutations is the maximizer of the objective.
double matching_error_squared(const PermutationMatching& m, const AttributedGraph& a, const AttributedGraph& b,
                              double lambda);

/// Fraction of ground-truth pairs reproduced by `m`.
double accuracy(const PermutationMatching& m, const PermutationMatching& truth);

/// err_alg / err_baseline; the baseline must be positive.
double error_rate(double err_alg, double err_baseline);

} // namespace gm
