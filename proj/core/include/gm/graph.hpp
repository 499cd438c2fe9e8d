#pragma once

#include <Eigen/Dense>

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;
using Point2 = std::array<double, 2>;

/// Symmetric, nonnegative affinity matrix with optional node features.
///
/// Instances are validated on construction and immutable afterwards. The
/// optional coordinate list is kept only to record where a generated graph
/// came from; no algorithm reads it.
class AttributedGraph {
public:
    explicit AttributedGraph(Matrix affinity,
                             std::optional<Matrix> features = std::nullopt,
                             std::vector<Point2> coords = {});

    Index size() const noexcept { return affinity_.rows(); }
    const Matrix& affinity() const noexcept { return affinity_; }
    bool has_features() const noexcept { return features_.has_value(); }
    const Matrix& features() const;
    const std::vector<Point2>& coords() const noexcept { return coords_; }

private:
    Matrix affinity_;
    std::optional<Matrix> features_;
    std::vector<Point2> coords_;
};

/// Nonnegative matrix with unit column sums, and unit row sums when square.
/// When rectangular (rows > cols) the row sums are only bounded above by one.
class DoublyStochasticMatrix {
public:
    DoublyStochasticMatrix(Matrix values, double tolerance);

    const Matrix& values() const noexcept { return values_; }
    double tolerance() const noexcept { return tolerance_; }

    /// Largest deviation of a constrained marginal from its target; zero for
    /// rectangular rows that are within the upper bound.
    static double marginal_violation(const Matrix& m);

private:
    Matrix values_;
    double tolerance_;
};

/// One-to-one correspondence between nodes of a source graph (size n) and a
/// target graph (size n_tilde). Holds min(n, n_tilde) pairs once complete; a
/// partial matching (fewer pairs) is allowed for ground truth after deletion.
class PermutationMatching {
public:
    using Pair = std::pair<Index, Index>;

    PermutationMatching(std::vector<Pair> pairs, Index n, Index n_tilde);

    static PermutationMatching identity(Index n);
    /// Matching i -> targets[i] for i in [0, targets.size()).
    static PermutationMatching from_targets(const std::vector<Index>& targets, Index n_tilde);

    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    Index source_size() const noexcept { return n_; }
    Index target_size() const noexcept { return n_tilde_; }
    std::optional<Index> target_of(Index source) const;

    /// Pairs sorted by source index.
    PermutationMatching sorted() const;
    /// Swaps the roles of source and target graphs.
    PermutationMatching transposed() const;

    friend bool operator==(const PermutationMatching& a, const PermutationMatching& b);

private:
    std::vector<Pair> pairs_;
    Index n_;
    Index n_tilde_;
};

/// 0/1 matrix of size n x n_tilde with a one at every matched pair.
Matrix permutation_to_matrix(const PermutationMatching& p, Index n, Index n_tilde);
Matrix permutation_to_matrix(const PermutationMatching& p);

/// Complete graph whose affinity is the pairwise Euclidean distance matrix.
AttributedGraph graph_from_points(const std::vector<Point2>& points,
                                  std::optional<Matrix> features = std::nullopt);

/// True when at least two points coincide; such graphs are legal but carry
/// zero off-diagonal affinities.
bool has_duplicate_points(const std::vector<Point2>& points);

/// Reads the JSON graph format: {"n", "affinity" | "coords", "features"?}.
AttributedGraph load_graph(const std::filesystem::path& path);
AttributedGraph parse_graph(const std::string& text);
std::string serialize_graph(const AttributedGraph& g);
void save_graph(const AttributedGraph& g, const std::filesystem::path& path);

/// Reads a matching file: {"n", "n_tilde", "pairs": [[i, j], ...]}.
PermutationMatching load_matching(const std::filesystem::path& path);
std::string serialize_matching(const PermutationMatching& m);

/// Koopmans-Beckmann problem data for one ordered graph pair.
///
/// K = F F~^T is formed once here and reused for every objective and gradient
/// evaluation.
class MatchingProblem {
public:
    MatchingProblem(const AttributedGraph& source, const AttributedGraph& target, double lambda);
    /// Raw-matrix form used by the oracles; K may be empty (no node term).
    MatchingProblem(Matrix a, Matrix a_tilde, Matrix k, double lambda);

    Index n() const noexcept { return a_.rows(); }
    Index n_tilde() const noexcept { return a_tilde_.rows(); }
    const Matrix& a() const noexcept { return a_; }
    const Matrix& a_tilde() const noexcept { return a_tilde_; }
    const Matrix& k() const noexcept { return k_; }
    bool has_node_term() const noexcept { return k_.size() > 0; }
    double lambda() const noexcept { return lambda_; }

    /// 1/2 tr(M^T A M A~) + lambda tr(M^T K).
    double objective(const Matrix& m) const;
    /// Same objective when A M A~ is already available.
    double objective(const Matrix& m, const Matrix& amb) const;
    /// A M A~ + lambda K.
    Matrix gradient(const Matrix& m) const;

private:
    Matrix a_;
    Matrix a_tilde_;
    Matrix k_;
    double lambda_;
};

double objective_z(const Matrix& m, const AttributedGraph& a, const AttributedGraph& b, double lambda);
double objective_z(const PermutationMatching& m, const AttributedGraph& a, const AttributedGraph& b,
                   double lambda);
double objective_z(const DoublyStochasticMatrix& m, const AttributedGraph& a, const AttributedGraph& b,
                   double lambda);

} // namespace gm
