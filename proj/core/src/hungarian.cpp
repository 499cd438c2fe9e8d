#include "gm/assign_ops.hpp"
#include "gm/error.hpp"

#include <limits>
#include <vector>

namespace gm {

namespace {

// Minimum-cost assignment of every row to a distinct column, rows <= cols.
// Potentials-based shortest augmenting path; returns column index per row.
std::vector<Index> min_cost_assignment(const Matrix& cost)
{
    const Index n = cost.rows();
    const Index m = cost.cols();
    constexpr double inf = std::numeric_limits<double>::infinity();

    // 1-based with column 0 as the virtual source.
    std::vector<double> u(static_cast<std::size_t>(n + 1), 0.0);
    std::vector<double> v(static_cast<std::size_t>(m + 1), 0.0);
    std::vector<Index> row_of(static_cast<std::size_t>(m + 1), 0);
    std::vector<Index> way(static_cast<std::size_t>(m + 1), 0);
    std::vector<double> minv(static_cast<std::size_t>(m + 1));
    std::vector<char> used(static_cast<std::size_t>(m + 1));

    for (Index i = 1; i <= n; ++i) {
        row_of[0] = i;
        Index j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const Index i0 = row_of[static_cast<std::size_t>(j0)];
            double delta = inf;
            Index j1 = 0;
            for (Index j = 1; j <= m; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                if (used[ju])
                    continue;
                const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[ju];
                if (cur < minv[ju]) {
                    minv[ju] = cur;
                    way[ju] = j0;
                }
                if (minv[ju] < delta) {
                    delta = minv[ju];
                    j1 = j;
                }
            }
            for (Index j = 0; j <= m; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                if (used[ju]) {
                    u[static_cast<std::size_t>(row_of[ju])] += delta;
                    v[ju] -= delta;
                } else {
                    minv[ju] -= delta;
                }
            }
            j0 = j1;
        } while (row_of[static_cast<std::size_t>(j0)] != 0);
        do {
            const Index j1 = way[static_cast<std::size_t>(j0)];
            row_of[static_cast<std::size_t>(j0)] = row_of[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<Index> col_of_row(static_cast<std::size_t>(n), -1);
    for (Index j = 1; j <= m; ++j)
        if (row_of[static_cast<std::size_t>(j)] != 0)
            col_of_row[static_cast<std::size_t>(row_of[static_cast<std::size_t>(j)] - 1)] = j - 1;
    return col_of_row;
}

} // namespace

PermutationMatching hungarian(const Matrix& profit)
{
    if (!profit.allFinite())
        throw ValidationError("hungarian: profit matrix has non-finite entries");
    const Index n = profit.rows();
    const Index m = profit.cols();
    std::vector<PermutationMatching::Pair> pairs;
    if (n <= m) {
        const auto cols = min_cost_assignment(-profit);
        for (Index i = 0; i < n; ++i)
            pairs.emplace_back(i, cols[static_cast<std::size_t>(i)]);
    } else {
        const Matrix cost = -profit.transpose();
        const auto rows = min_cost_assignment(cost);
        for (Index j = 0; j < m; ++j)
            pairs.emplace_back(rows[static_cast<std::size_t>(j)], j);
    }
    return PermutationMatching(std::move(pairs), n, m).sorted();
}

} // namespace gm
