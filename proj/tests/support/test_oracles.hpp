#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library's numerical routines beyond plain data types.

#include "gm/graph.hpp"
#include "gm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace gm::test {

inline double scalar_distance(const Point2& p, const Point2& q)
{
    const double dx = p[0] - q[0];
    const double dy = p[1] - q[1];
    return std::sqrt(dx * dx + dy * dy);
}

/// 1/2 sum_ijkl M_ij A_ik M_kl B_jl + lambda sum_ij M_ij K_ij, by loops.
inline double loop_objective(const Matrix& m, const Matrix& a, const Matrix& b, const Matrix& k, double lambda)
{
    double z = 0.0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            for (Index r = 0; r < m.rows(); ++r)
                for (Index c = 0; c < m.cols(); ++c)
                    z += m(i, j) * a(i, r) * m(r, c) * b(j, c);
    z *= 0.5;
    for (Index i = 0; i < k.rows(); ++i)
        for (Index j = 0; j < k.cols(); ++j)
            z += lambda * m(i, j) * k(i, j);
    return z;
}

/// Explicit Kronecker form: 1/2 m^T (A (x) B) m + lambda m^T k, row stacking.
inline double kronecker_objective(const Matrix& m, const Matrix& a, const Matrix& b, const Matrix& k, double lambda)
{
    const Index n = a.rows();
    const Index nt = b.rows();
    Matrix w(n * nt, n * nt);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            w.block(i * nt, j * nt, nt, nt) = a(i, j) * b;
    Vector mv(n * nt), kv = Vector::Zero(n * nt);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < nt; ++j) {
            mv(i * nt + j) = m(i, j);
            if (k.size())
                kv(i * nt + j) = k(i, j);
        }
    return 0.5 * mv.dot(w * mv) + lambda * mv.dot(kv);
}

/// All permutations of [0, n) with their LAP score; returns the best score.
inline double best_lap_score(const Matrix& x, std::vector<Index>* argmax = nullptr)
{
    std::vector<Index> p(static_cast<std::size_t>(x.rows()));
    std::iota(p.begin(), p.end(), 0);
    double best = -1e300;
    do {
        double s = 0.0;
        for (Index i = 0; i < x.rows(); ++i)
            s += x(i, p[static_cast<std::size_t>(i)]);
        if (s > best) {
            best = s;
            if (argmax)
                *argmax = p;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline Matrix random_matrix(Index rows, Index cols, std::uint64_t seed, double lo = 0.0, double hi = 1.0)
{
    Rng rng(seed);
    Matrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = lo + (hi - lo) * rng.uniform();
    return m;
}

inline Matrix random_symmetric(Index n, std::uint64_t seed, double lo = 0.0, double hi = 1.0)
{
    Matrix m = random_matrix(n, n, seed, lo, hi);
    Matrix s = 0.5 * (m + m.transpose());
    s.diagonal().setZero();
    return s;
}

inline std::vector<Point2> random_points(Index n, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<Point2> pts(static_cast<std::size_t>(n));
    for (auto& p : pts)
        p = {rng.uniform(), rng.uniform()};
    return pts;
}

/// Random doubly stochastic matrix as a convex combination of permutations.
inline Matrix random_doubly_stochastic(Index n, std::uint64_t seed, int terms = 6)
{
    Rng rng(seed);
    Matrix m = Matrix::Zero(n, n);
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
        const double w = 0.1 + rng.uniform();
        total += w;
        const auto p = rng.permutation(n);
        for (Index i = 0; i < n; ++i)
            m(i, p[static_cast<std::size_t>(i)]) += w;
    }
    return m / total;
}

/// Brute-force Delaunay edges: (i, j) is an edge when some triangle (i, j, k)
/// has no other point strictly inside its circumcircle. O(n^4).
inline std::vector<std::pair<Index, Index>> brute_force_delaunay_edges(const std::vector<Point2>& p)
{
    const auto n = static_cast<Index>(p.size());
    auto in_circle = [&](Index a, Index b, Index c, Index d) {
        // sign of the incircle determinant relative to the orientation of abc
        const double adx = p[a][0] - p[d][0], ady = p[a][1] - p[d][1];
        const double bdx = p[b][0] - p[d][0], bdy = p[b][1] - p[d][1];
        const double cdx = p[c][0] - p[d][0], cdy = p[c][1] - p[d][1];
        const double det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) -
                           (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady) +
                           (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
        const double orient = (p[b][0] - p[a][0]) * (p[c][1] - p[a][1]) - (p[b][1] - p[a][1]) * (p[c][0] - p[a][0]);
        return orient > 0 ? det > 0 : det < 0;
    };
    std::vector<std::pair<Index, Index>> edges;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            for (Index k = j + 1; k < n; ++k) {
                bool empty = true;
                for (Index d = 0; d < n && empty; ++d)
                    if (d != i && d != j && d != k && in_circle(i, j, k, d))
                        empty = false;
                if (empty) {
                    edges.emplace_back(i, j);
                    edges.emplace_back(j, k);
                    edges.emplace_back(i, k);
                }
            }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace gm::test
