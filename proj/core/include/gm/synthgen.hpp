#pragma once

#include "gm/graph.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace gm {

enum class Connectivity { full, delaunay };
std::string_view to_string(Connectivity c);
Connectivity parse_connectivity(std::string_view name);

struct GenSpec {
    Index n = 50;
    std::uint64_t seed = 0;
    double phi = 1.0;
    double deletion_pct = 0.0;
    Connectivity connectivity = Connectivity::full;

    void validate() const;
};

/// phi * U where U is n x n uniform [0, 1), filled row by row.
Matrix random_profit(Index n, double phi, std::uint64_t seed);

/// n uniform points in the unit square; the affinity holds Euclidean
/// distances on every pair (full) or on Delaunay edges only.
AttributedGraph random_geometric_graph(Index n, std::uint64_t seed, Connectivity connectivity);

/// Affinity with distances on the Delaunay edges of `points`, zero elsewhere.
AttributedGraph delaunay_graph(const std::vector<Point2>& points);

struct PlantedGraph {
    AttributedGraph graph;
    PermutationMatching truth; ///< pairs (i, pi(i)): node i of the input is node pi(i) of `graph`
};

/// Relabels node i as pi(i) for the given permutation.
PlantedGraph plant_permutation(const AttributedGraph& g, const std::vector<Index>& pi);
/// Relabels by a uniformly random permutation drawn from `seed`.
PlantedGraph plant_permutation(const AttributedGraph& g, std::uint64_t seed);

struct ReducedGraph {
    AttributedGraph graph;
    std::vector<Index> survivors; ///< original index of each remaining node, ascending
};

/// Removes round(n q / 100) uniformly chosen nodes.
ReducedGraph delete_nodes(const AttributedGraph& g, double q_pct, std::uint64_t seed);
/// Removes the listed nodes.
ReducedGraph delete_nodes(const AttributedGraph& g, const std::vector<Index>& removed);

/// Source graph, its relabeled and node-deleted copy, and the ground truth on
/// the surviving nodes.
struct NoisyPair {
    AttributedGraph source;
    AttributedGraph target;
    PermutationMatching truth;
};

NoisyPair make_noisy_pair(const GenSpec& spec);

} // namespace gm
