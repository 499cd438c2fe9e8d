#include "gm/assign_ops.hpp"

#include "gm/error.hpp"

#include <cmath>
#include <vector>

namespace gm {

namespace {

void require_finite(const Matrix& x, const char* who)
{
    if (!x.allFinite())
        throw ValidationError(std::string(who) + ": input has non-finite entries");
}

// Alternating row/column normalization in place. Each sweep normalizes rows
// first and columns last.
OperatorResult sinkhorn(Matrix s, double eps, int max_inner, const IterateObserver& observer)
{
    OperatorResult result;
    Matrix prev(s.rows(), s.cols());
    for (int it = 1; it <= max_inner; ++it) {
        prev = s;
        const Vector row_sums = s.rowwise().sum();
        if (!(row_sums.array() > 0.0).all() || !row_sums.allFinite())
            throw SolverError("sinkhorn: a row lost all mass (exponent under/overflow)");
        s.array().colwise() /= row_sums.array();
        const Eigen::RowVectorXd col_sums = s.colwise().sum();
        if (!(col_sums.array() > 0.0).all())
            throw SolverError("sinkhorn: a column lost all mass (exponent underflow)");
        s.array().rowwise() /= col_sums.array();
        result.inner_iterations = it;
        if (observer)
            observer(it, s);
        if ((s - prev).cwiseAbs().sum() < eps) {
            result.converged = true;
            break;
        }
    }
    result.matrix = std::move(s);
    return result;
}

} // namespace

PermutationMatching greedy_assign(const Matrix& profit)
{
    require_finite(profit, "greedy_assign");
    const Index n = profit.rows();
    const Index m = profit.cols();
    // Struck rows/columns are removed rather than zeroed so that negative
    // profits cannot resurrect them.
    std::vector<char> row_done(static_cast<std::size_t>(n), 0);
    std::vector<char> col_done(static_cast<std::size_t>(m), 0);
    std::vector<PermutationMatching::Pair> pairs;
    const Index picks = std::min(n, m);
    for (Index k = 0; k < picks; ++k) {
        Index bi = -1;
        Index bj = -1;
        double best = 0.0;
        for (Index i = 0; i < n; ++i) {
            if (row_done[static_cast<std::size_t>(i)])
                continue;
            for (Index j = 0; j < m; ++j) {
                if (col_done[static_cast<std::size_t>(j)])
                    continue;
                if (bi < 0 || profit(i, j) > best) {
                    best = profit(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        row_done[static_cast<std::size_t>(bi)] = 1;
        col_done[static_cast<std::size_t>(bj)] = 1;
        pairs.emplace_back(bi, bj);
    }
    return PermutationMatching(std::move(pairs), n, m).sorted();
}

double assignment_score(const PermutationMatching& p, const Matrix& profit)
{
    double s = 0.0;
    for (const auto& [i, j] : p.pairs())
        s += profit(i, j);
    return s;
}

Matrix unit_marginal_projection(const Matrix& x)
{
    const auto n = static_cast<double>(x.rows());
    const double total = x.sum();
    const Vector row_sums = x.rowwise().sum();
    const Eigen::RowVectorXd col_sums = x.colwise().sum();
    Matrix p = x;
    p.array() += 1.0 / n + total / (n * n);
    p.array().colwise() -= row_sums.array() / n;
    p.array().rowwise() -= col_sums.array() / n;
    return p;
}

OperatorResult alternating_projection(const Matrix& x, int max_iter, double eps, const IterateObserver& observer)
{
    require_finite(x, "alternating_projection");
    if (x.rows() != x.cols())
        throw ValidationError("alternating_projection: input must be square");
    if (max_iter < 1)
        throw ValidationError("alternating_projection: max_iter must be at least 1");

    OperatorResult result;
    Matrix cur = x;
    for (int it = 1; it <= max_iter; ++it) {
        Matrix next = unit_marginal_projection(cur).cwiseMax(0.0);
        const double change = (next - cur).cwiseAbs().sum();
        cur = std::move(next);
        result.inner_iterations = it;
        if (observer)
            observer(it, cur);
        if (change < eps) {
            result.converged = true;
            break;
        }
    }
    result.matrix = std::move(cur);
    return result;
}

OperatorResult dynamic_softassign(const Matrix& x, double gamma, double eps, int max_inner,
                                  const IterateObserver& observer)
{
    require_finite(x, "dynamic_softassign");
    if (!(gamma > 0.0))
        throw ValidationError("dynamic_softassign: gamma must be positive");
    if (max_inner < 1)
        throw ValidationError("dynamic_softassign: max_inner must be at least 1");

    const Index rows = x.rows();
    const Index cols = x.cols();
    const Index size = std::max(rows, cols);

    Matrix profit = x;
    double top = profit.maxCoeff();
    const double bottom = profit.minCoeff();
    if (top <= 0.0 && bottom < top) {
        profit.array() -= bottom;
        top = top - bottom;
    }

    Matrix slack = Matrix::Zero(size, size);
    if (top <= 0.0) {
        // Constant input: every assignment is equally good.
        slack.setConstant(1.0 / static_cast<double>(size));
        OperatorResult r{slack.topLeftCorner(rows, cols), 0, true};
        return r;
    }

    const double beta = gamma * std::log(static_cast<double>(size));
    slack.topLeftCorner(rows, cols) = profit / top;
    slack = (beta * (slack.array() - 1.0)).exp().matrix();

    OperatorResult r = sinkhorn(std::move(slack), eps, max_inner, observer);
    if (rows != size || cols != size)
        r.matrix = Matrix(r.matrix.topLeftCorner(rows, cols));
    return r;
}

OperatorResult softassign_fixed_beta(const Matrix& x, double beta, double eps, int max_inner,
                                     const IterateObserver& observer)
{
    require_finite(x, "softassign_fixed_beta");
    if (x.rows() != x.cols())
        throw ValidationError("softassign_fixed_beta: input must be square");
    Matrix s = (beta * x.array()).exp().matrix();
    if (!s.allFinite())
        throw SolverError("softassign_fixed_beta: exp(beta x) overflowed");
    return sinkhorn(std::move(s), eps, max_inner, observer);
}

Matrix offset_input(const Matrix& x, double b)
{
    return (x.array() - b).matrix();
}

OperatorResult spectral_normalize(const Matrix& x)
{
    require_finite(x, "spectral_normalize");
    Matrix m = x.cwiseMax(0.0);
    const double norm = m.norm();
    if (!(norm > 0.0))
        throw SolverError("spectral_normalize: no positive entries to normalize");
    m /= norm;
    return {std::move(m), 1, true};
}

} // namespace gm
