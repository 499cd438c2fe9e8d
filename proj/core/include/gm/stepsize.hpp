#pragma once

#include "gm/graph.hpp"

#include <string_view>

namespace gm {

/// Which closed-form case produced the step.
enum class AlphaBranch {
    positive_a,      ///< a >= 0 and the full step does not lose objective
    interior,        ///< a < 0, vertex of the parabola inside (0, 1)
    clamped_to_one,  ///< a < 0, vertex at or beyond 1
    clamped_to_zero, ///< no step in [0, 1] increases the objective
};

std::string_view to_string(AlphaBranch b);

/// Step maximizing Z((1 - alpha) M + alpha D) over alpha in [0, 1].
///
/// Z along the segment is a_coeff alpha^2 + b_coeff alpha + const; the
/// constant term is never needed and not computed.
struct AlphaDecision {
    double alpha = 1.0;
    double a_coeff = 0.0;
    double b_coeff = 0.0;
    AlphaBranch branch = AlphaBranch::positive_a;
};

/// Quadratic coefficients of Z along the segment from M to D.
///
/// Uses trace forms with P = A M A~ and Q = A D A~, so the cost is two
/// matrix products. `amb` may pass a precomputed A M A~.
AlphaDecision adaptive_alpha(const MatchingProblem& problem, const Matrix& m, const Matrix& d);
AlphaDecision adaptive_alpha(const MatchingProblem& problem, const Matrix& m, const Matrix& d, const Matrix& amb);
AlphaDecision adaptive_alpha(const Matrix& m, const Matrix& d, const AttributedGraph& a, const AttributedGraph& b,
                             double lambda);

/// Chooses alpha from already computed coefficients.
AlphaDecision choose_alpha(double a_coeff, double b_coeff);

/// Fault injection for negative-control runs: when set, adaptive_alpha
/// negates the curvature coefficient before choosing the step.
void set_curvature_sign_fault(bool enabled) noexcept;
bool curvature_sign_fault() noexcept;

/// (1 - alpha) M + alpha D.
Matrix apply_step(const Matrix& m, const Matrix& d, double alpha);

} // namespace gm
