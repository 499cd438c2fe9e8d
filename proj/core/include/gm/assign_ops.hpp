#pragma once

#include "gm/graph.hpp"

#include <functional>

namespace gm {

/// Output of an iterative constraining operator.
struct OperatorResult {
    Matrix matrix;
    int inner_iterations = 0;
    bool converged = false;
};

/// Called after every inner iteration with the 1-based iteration number and
/// the current iterate. Used by the operator benchmark to trace convergence.
using IterateObserver = std::function<void(int iteration, const Matrix& iterate)>;

/// Exact linear assignment maximizing <P, X> (shortest augmenting paths,
/// O(n^3)). Rectangular inputs yield min(rows, cols) pairs.
PermutationMatching hungarian(const Matrix& profit);

/// Greedy linear assignment: repeatedly take the largest remaining entry and
/// strike its row and column. Ties go to the smallest row, then column.
PermutationMatching greedy_assign(const Matrix& profit);

/// Sum of profit over the matched pairs.
double assignment_score(const PermutationMatching& p, const Matrix& profit);

/// Affine projection onto unit-marginal matrices, without the sign clamp.
Matrix unit_marginal_projection(const Matrix& x);

/// Alternates the unit-marginal projection and the nonnegative clamp until the
/// L1 change between sweeps drops below eps or max_iter sweeps ran.
OperatorResult alternating_projection(const Matrix& x, int max_iter, double eps,
                                      const IterateObserver& observer = {});

/// Entropic assignment with a size- and magnitude-independent sharpness.
///
/// The input is divided by its maximum, exponentiated as exp(beta (x - 1))
/// with beta = gamma ln(max(rows, cols)), and Sinkhorn-balanced until the L1
/// change between sweeps drops below eps. A rectangular input is embedded in
/// a zero-padded square slack matrix; the returned block has exact column
/// sums when rows > cols. If max(x) <= 0 the input is first shifted by its
/// minimum; a constant input yields the uniform matrix.
OperatorResult dynamic_softassign(const Matrix& x, double gamma, double eps, int max_inner,
                                  const IterateObserver& observer = {});

/// Plain softassign exp(beta x) followed by Sinkhorn balancing, with no
/// max-normalization and no exponent shift. Square inputs only.
OperatorResult softassign_fixed_beta(const Matrix& x, double beta, double eps, int max_inner,
                                     const IterateObserver& observer = {});

/// x - b 11^T.
Matrix offset_input(const Matrix& x, double b);

/// Clamps negatives to zero and scales to unit Frobenius norm.
OperatorResult spectral_normalize(const Matrix& x);

} // namespace gm
