#include "gm/stepsize.hpp"

#include "gm/error.hpp"

#include <atomic>
#include <cmath>

namespace gm {

std::string_view to_string(AlphaBranch b)
{
    switch (b) {
    case AlphaBranch::positive_a: return "positive-a";
    case AlphaBranch::interior: return "interior";
    case AlphaBranch::clamped_to_one: return "clamped-to-1";
    case AlphaBranch::clamped_to_zero: return "clamped-to-0";
    }
    return "unknown";
}

namespace {
std::atomic<bool> g_curvature_fault{false};
}

void set_curvature_sign_fault(bool enabled) noexcept
{
    g_curvature_fault.store(enabled);
}

bool curvature_sign_fault() noexcept
{
    return g_curvature_fault.load();
}

AlphaDecision choose_alpha(double a_coeff, double b_coeff)
{
    if (!std::isfinite(a_coeff) || !std::isfinite(b_coeff))
        throw SolverError("adaptive_alpha: non-finite quadratic coefficients");
    AlphaDecision d{1.0, a_coeff, b_coeff, AlphaBranch::positive_a};
    if (a_coeff >= 0.0) {
        // Convex along the segment: the maximum is at an endpoint.
        if (a_coeff + b_coeff < 0.0) {
            d.alpha = 0.0;
            d.branch = AlphaBranch::clamped_to_zero;
        }
        return d;
    }
    const double vertex = -b_coeff / (2.0 * a_coeff);
    if (vertex >= 1.0) {
        d.branch = AlphaBranch::clamped_to_one;
    } else if (vertex <= 0.0) {
        d.alpha = 0.0;
        d.branch = AlphaBranch::clamped_to_zero;
    } else {
        d.alpha = vertex;
        d.branch = AlphaBranch::interior;
    }
    return d;
}

AlphaDecision adaptive_alpha(const MatchingProblem& problem, const Matrix& m, const Matrix& d, const Matrix& amb)
{
    if (m.rows() != problem.n() || m.cols() != problem.n_tilde() || d.rows() != m.rows() || d.cols() != m.cols())
        throw ValidationError("adaptive_alpha: dimension mismatch");
    const Matrix adb = problem.a() * d * problem.a_tilde();
    const double m_p = m.cwiseProduct(amb).sum();
    const double m_q = m.cwiseProduct(adb).sum();
    const double d_p = d.cwiseProduct(amb).sum();
    const double d_q = d.cwiseProduct(adb).sum();
    double a_coeff = 0.5 * (m_p - m_q - d_p + d_q);
    if (curvature_sign_fault())
        a_coeff = -a_coeff;
    double b_coeff = -m_p + m_q;
    if (problem.has_node_term())
        b_coeff += problem.lambda() * (d - m).cwiseProduct(problem.k()).sum();
    return choose_alpha(a_coeff, b_coeff);
}

AlphaDecision adaptive_alpha(const MatchingProblem& problem, const Matrix& m, const Matrix& d)
{
    if (m.rows() != problem.n() || m.cols() != problem.n_tilde())
        throw ValidationError("adaptive_alpha: dimension mismatch");
    return adaptive_alpha(problem, m, d, problem.a() * m * problem.a_tilde());
}

AlphaDecision adaptive_alpha(const Matrix& m, const Matrix& d, const AttributedGraph& a, const AttributedGraph& b,
                             double lambda)
{
    return adaptive_alpha(MatchingProblem(a, b, lambda), m, d);
}

Matrix apply_step(const Matrix& m, const Matrix& d, double alpha)
{
    if (m.rows() != d.rows() || m.cols() != d.cols())
        throw ValidationError("apply_step: dimension mismatch");
    return (1.0 - alpha) * m + alpha * d;
}

} // namespace gm
