#include "gm/synthgen.hpp"

#include "gm/delaunay.hpp"
#include "gm/error.hpp"
#include "gm/rng.hpp"

#include <algorithm>
#include <cmath>

namespace gm {

namespace {

constexpr int kDegenerateRetries = 5;

std::vector<Point2> uniform_points(Index n, Rng& rng)
{
    std::vector<Point2> pts(static_cast<std::size_t>(n));
    for (auto& p : pts) {
        p[0] = rng.uniform();
        p[1] = rng.uniform();
    }
    return pts;
}

Matrix permute_rows(const Matrix& m, const std::vector<Index>& pi)
{
    Matrix out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        out.row(pi[static_cast<std::size_t>(i)]) = m.row(i);
    return out;
}

} // namespace

std::string_view to_string(Connectivity c)
{
    return c == Connectivity::full ? "full" : "delaunay";
}

Connectivity parse_connectivity(std::string_view name)
{
    if (name == "full")
        return Connectivity::full;
    if (name == "delaunay")
        return Connectivity::delaunay;
    throw ValidationError("unknown connectivity: " + std::string(name));
}

void GenSpec::validate() const
{
    if (n < 2)
        throw ValidationError("n must be at least 2");
    if (!(phi > 0.0))
        throw ValidationError("phi must be positive");
    if (!(deletion_pct >= 0.0 && deletion_pct <= 100.0))
        throw ValidationError("deletion percentage must be in [0, 100]");
    if (n - static_cast<Index>(std::llround(static_cast<double>(n) * deletion_pct / 100.0)) < 2)
        throw ValidationError("deletion would leave fewer than 2 nodes");
    if (connectivity == Connectivity::delaunay && n < 3)
        throw ValidationError("delaunay connectivity needs at least 3 nodes");
}

Matrix random_profit(Index n, double phi, std::uint64_t seed)
{
    Rng rng(seed);
    Matrix x(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            x(i, j) = rng.uniform();
    return phi * x;
}

AttributedGraph delaunay_graph(const std::vector<Point2>& points)
{
    const auto tris = delaunay_triangulation(points);
    if (tris.empty())
        throw ValidationError("delaunay: degenerate (collinear) point set");
    const auto n = static_cast<Index>(points.size());
    Matrix a = Matrix::Zero(n, n);
    for (const auto& [i, j] : triangulation_edges(tris)) {
        const auto& p = points[static_cast<std::size_t>(i)];
        const auto& q = points[static_cast<std::size_t>(j)];
        const double d = std::hypot(p[0] - q[0], p[1] - q[1]);
        a(i, j) = d;
        a(j, i) = d;
    }
    return AttributedGraph(std::move(a), std::nullopt, points);
}

AttributedGraph random_geometric_graph(Index n, std::uint64_t seed, Connectivity connectivity)
{
    Rng rng(seed);
    auto pts = uniform_points(n, rng);
    if (connectivity == Connectivity::full)
        return graph_from_points(pts);
    if (n < 3)
        throw ValidationError("delaunay connectivity needs at least 3 nodes");
    for (int attempt = 0;; ++attempt) {
        try {
            return delaunay_graph(pts);
        } catch (const ValidationError&) {
            if (attempt == kDegenerateRetries)
                throw;
            for (auto& p : pts) {
                p[0] += 1e-9 * (rng.uniform() - 0.5);
                p[1] += 1e-9 * (rng.uniform() - 0.5);
            }
        }
    }
}

PlantedGraph plant_permutation(const AttributedGraph& g, const std::vector<Index>& pi)
{
    const Index n = g.size();
    if (static_cast<Index>(pi.size()) != n)
        throw ValidationError("permutation size does not match graph");
    auto truth = PermutationMatching::from_targets(pi, n);

    Matrix a(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            a(pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(j)]) = g.affinity()(i, j);
    std::optional<Matrix> f;
    if (g.has_features())
        f = permute_rows(g.features(), pi);
    std::vector<Point2> coords;
    if (!g.coords().empty()) {
        coords.resize(g.coords().size());
        for (Index i = 0; i < n; ++i)
            coords[static_cast<std::size_t>(pi[static_cast<std::size_t>(i)])] = g.coords()[static_cast<std::size_t>(i)];
    }
    return {AttributedGraph(std::move(a), std::move(f), std::move(coords)), std::move(truth)};
}

PlantedGraph plant_permutation(const AttributedGraph& g, std::uint64_t seed)
{
    Rng rng(seed);
    const auto raw = rng.permutation(g.size());
    return plant_permutation(g, std::vector<Index>(raw.begin(), raw.end()));
}

ReducedGraph delete_nodes(const AttributedGraph& g, const std::vector<Index>& removed)
{
    const Index n = g.size();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (Index r : removed) {
        if (r < 0 || r >= n)
            throw ValidationError("delete_nodes: index out of range");
        gone[static_cast<std::size_t>(r)] = 1;
    }
    std::vector<Index> keep;
    for (Index i = 0; i < n; ++i)
        if (!gone[static_cast<std::size_t>(i)])
            keep.push_back(i);
    if (keep.size() < 2)
        throw ValidationError("delete_nodes: would leave fewer than 2 nodes");

    const auto m = static_cast<Index>(keep.size());
    Matrix a(m, m);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
            a(i, j) = g.affinity()(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
    std::optional<Matrix> f;
    if (g.has_features()) {
        f = Matrix(m, g.features().cols());
        for (Index i = 0; i < m; ++i)
            f->row(i) = g.features().row(keep[static_cast<std::size_t>(i)]);
    }
    std::vector<Point2> coords;
    if (!g.coords().empty())
        for (Index i : keep)
            coords.push_back(g.coords()[static_cast<std::size_t>(i)]);
    return {AttributedGraph(std::move(a), std::move(f), std::move(coords)), std::move(keep)};
}

ReducedGraph delete_nodes(const AttributedGraph& g, double q_pct, std::uint64_t seed)
{
    if (!(q_pct >= 0.0 && q_pct <= 100.0))
        throw ValidationError("delete_nodes: percentage must be in [0, 100]");
    const Index n = g.size();
    const auto count = static_cast<Index>(std::llround(static_cast<double>(n) * q_pct / 100.0));
    if (n - count < 2)
        throw ValidationError("delete_nodes: would leave fewer than 2 nodes");
    Rng rng(seed);
    const auto order = rng.permutation(n);
    std::vector<Index> removed(order.begin(), order.begin() + count);
    return delete_nodes(g, removed);
}

NoisyPair make_noisy_pair(const GenSpec& spec)
{
    spec.validate();
    AttributedGraph source = random_geometric_graph(spec.n, derive_seed(spec.seed, 0), spec.connectivity);
    PlantedGraph planted = plant_permutation(source, derive_seed(spec.seed, 1));
    ReducedGraph reduced = delete_nodes(planted.graph, spec.deletion_pct, derive_seed(spec.seed, 2));

    // planted node t now sits at position new_index[t] (or was deleted)
    std::vector<Index> new_index(static_cast<std::size_t>(spec.n), -1);
    for (std::size_t r = 0; r < reduced.survivors.size(); ++r)
        new_index[static_cast<std::size_t>(reduced.survivors[r])] = static_cast<Index>(r);
    std::vector<PermutationMatching::Pair> pairs;
    for (const auto& [i, t] : planted.truth.pairs())
        if (new_index[static_cast<std::size_t>(t)] >= 0)
            pairs.emplace_back(i, new_index[static_cast<std::size_t>(t)]);
    PermutationMatching truth(std::move(pairs), spec.n, reduced.graph.size());
    return {std::move(source), std::move(reduced.graph), truth.sorted()};
}

} // namespace gm
