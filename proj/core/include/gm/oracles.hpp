#pragma once

#include "gm/graph.hpp"
#include "gm/stepsize.hpp"

#include <cstdint>
#include <vector>

namespace gm {

/// Exhaustive search over all n! permutations. Size-guarded at n <= 8.
struct BruteForceResult {
    PermutationMatching best;          ///< lexicographically first maximizer
    double value = 0.0;
    std::vector<std::vector<Index>> argmax_set; ///< every maximizer, as target lists
};

inline constexpr Index kBruteForceMaxSize = 8;

/// Maximizes the objective over permutations. Two values count as tied when
/// they differ by at most `rel_tie` relative to the largest magnitude seen.
BruteForceResult brute_force_qap(const MatchingProblem& problem, double rel_tie = 1e-12);
BruteForceResult brute_force_qap(const AttributedGraph& a, const AttributedGraph& b, double lambda,
                                 double rel_tie = 1e-12);

/// Maximizes <P, X> over permutations.
BruteForceResult brute_force_lap(const Matrix& profit, double rel_tie = 1e-12);

/// Best alpha on a uniform grid of `points` values in [0, 1].
struct GridSearchResult {
    double alpha = 0.0;
    double value = 0.0;
};
GridSearchResult grid_line_search(const MatchingProblem& problem, const Matrix& m, const Matrix& d,
                                  int points = 1001);

/// Stacking order used to vectorize an n x n matrix.
enum class VecOrder { row_major, column_major };

Vector vectorize(const Matrix& m, VecOrder order);

/// Dense Kronecker-form check of (A (x) A~) vec(M) = vec(A M A~) and of the
/// step-size coefficients against their vector forms.
struct KronCheckResult {
    double residual = 0.0;       ///< || W vec(M) - vec(A M A~) ||_inf
    double a_coeff_error = 0.0;  ///< |trace-form a - 1/2 (m-d)^T W (m-d)|
    double b_coeff_error = 0.0;  ///< |trace-form b - (d-m)^T W m|
    bool passed = false;
};

inline constexpr Index kKronMaxSize = 6;

KronCheckResult kron_vec_check(const Matrix& a, const Matrix& a_tilde, const Matrix& m, const Matrix& d,
                               VecOrder order = VecOrder::row_major, double tol = 1e-8);
/// Identity check only; D is taken equal to M.
KronCheckResult kron_vec_check(const Matrix& a, const Matrix& a_tilde, const Matrix& m,
                               VecOrder order = VecOrder::row_major, double tol = 1e-8);

/// Counts of eigenvalues above +tol and below -tol, tol = 1e-8 ||A||_F.
struct EigenSignature {
    Index positive = 0;
    Index negative = 0;
    friend bool operator==(const EigenSignature&, const EigenSignature&) = default;
};

EigenSignature eigen_signature(const Matrix& a);

/// Signature of A (x) B from the signatures of A and B, without forming it:
/// eigenvalues of a Kronecker product are all pairwise products.
EigenSignature kron_signature(const EigenSignature& a, const EigenSignature& b);

/// Fraction of adaptive steps equal to one, measured on SCG runs over random
/// fully connected distance-matrix pairs, next to the (1 - 1/n)^2 estimate.
struct AlphaFrequency {
    double fraction = 0.0;
    double estimate = 0.0;
    long long steps = 0;
};

double alpha_one_estimate(Index n);
AlphaFrequency alpha_one_frequency(int trials, Index n, std::uint64_t seed);

} // namespace gm
