#include "gm/graph.hpp"

#include "gm/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace gm {

namespace {

constexpr double kSymmetrizeTolerance = 1e-9;

void require_finite(const Matrix& m, const char* what)
{
    if (!m.allFinite())
        throw ValidationError(std::string(what) + " contains non-finite entries");
}

Matrix matrix_from_json(const nlohmann::json& rows, const char* what)
{
    if (!rows.is_array())
        throw ValidationError(std::string(what) + " must be an array of rows");
    const auto r = static_cast<Index>(rows.size());
    if (r == 0)
        return Matrix(0, 0);
    if (!rows[0].is_array())
        throw ValidationError(std::string(what) + " must be an array of rows");
    const auto c = static_cast<Index>(rows[0].size());
    Matrix m(r, c);
    for (Index i = 0; i < r; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != c)
            throw ValidationError(std::string(what) + " is ragged at row " + std::to_string(i));
        for (Index j = 0; j < c; ++j) {
            const auto& v = row[static_cast<std::size_t>(j)];
            if (!v.is_number())
                throw ValidationError(std::string(what) + " has a non-numeric entry");
            m(i, j) = v.get<double>();
        }
    }
    return m;
}

nlohmann::json matrix_to_json(const Matrix& m)
{
    auto rows = nlohmann::json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

AttributedGraph::AttributedGraph(Matrix affinity, std::optional<Matrix> features, std::vector<Point2> coords)
    : affinity_(std::move(affinity)), features_(std::move(features)), coords_(std::move(coords))
{
    if (affinity_.rows() != affinity_.cols())
        throw ValidationError("affinity must be square");
    if (affinity_.rows() < 1)
        throw ValidationError("graph must have at least one node");
    require_finite(affinity_, "affinity");
    if ((affinity_.array() < 0.0).any())
        throw ValidationError("negative affinity entry");
    if (affinity_ != affinity_.transpose())
        throw ValidationError("asymmetric affinity");
    if (features_) {
        require_finite(*features_, "features");
        if (features_->rows() != affinity_.rows())
            throw ValidationError("feature row count does not match node count");
    }
    if (!coords_.empty() && static_cast<Index>(coords_.size()) != affinity_.rows())
        throw ValidationError("coordinate count does not match node count");
}

const Matrix& AttributedGraph::features() const
{
    if (!features_)
        throw ValidationError("graph has no features");
    return *features_;
}

DoublyStochasticMatrix::DoublyStochasticMatrix(Matrix values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance)
{
    if (!(tolerance_ > 0.0))
        throw ValidationError("stochasticity tolerance must be positive");
    if (values_.rows() < values_.cols())
        throw ValidationError("doubly stochastic matrix must have rows >= cols");
    require_finite(values_, "doubly stochastic matrix");
    if ((values_.array() < 0.0).any())
        throw ValidationError("doubly stochastic matrix has a negative entry");
    if (marginal_violation(values_) > tolerance_)
        throw ValidationError("marginals exceed stochasticity tolerance");
}

double DoublyStochasticMatrix::marginal_violation(const Matrix& m)
{
    double worst = 0.0;
    const Vector cols = m.colwise().sum().transpose();
    worst = std::max(worst, (cols.array() - 1.0).abs().maxCoeff());
    const Vector rows = m.rowwise().sum();
    if (m.rows() == m.cols())
        worst = std::max(worst, (rows.array() - 1.0).abs().maxCoeff());
    else
        worst = std::max(worst, std::max(0.0, rows.maxCoeff() - 1.0));
    return worst;
}

PermutationMatching::PermutationMatching(std::vector<Pair> pairs, Index n, Index n_tilde)
    : pairs_(std::move(pairs)), n_(n), n_tilde_(n_tilde)
{
    if (n_ < 0 || n_tilde_ < 0)
        throw ValidationError("matching sizes must be nonnegative");
    if (static_cast<Index>(pairs_.size()) > std::min(n_, n_tilde_))
        throw ValidationError("matching has more pairs than min(n, n_tilde)");
    std::vector<char> used_src(static_cast<std::size_t>(n_), 0);
    std::vector<char> used_dst(static_cast<std::size_t>(n_tilde_), 0);
    for (const auto& [s, t] : pairs_) {
        if (s < 0 || s >= n_ || t < 0 || t >= n_tilde_)
            throw ValidationError("matching index out of range");
        if (used_src[static_cast<std::size_t>(s)]++ || used_dst[static_cast<std::size_t>(t)]++)
            throw ValidationError("matching is not one-to-one");
    }
}

PermutationMatching PermutationMatching::identity(Index n)
{
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        pairs.emplace_back(i, i);
    return {std::move(pairs), n, n};
}

PermutationMatching PermutationMatching::from_targets(const std::vector<Index>& targets, Index n_tilde)
{
    std::vector<Pair> pairs;
    pairs.reserve(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i)
        pairs.emplace_back(static_cast<Index>(i), targets[i]);
    return {std::move(pairs), static_cast<Index>(targets.size()), n_tilde};
}

std::optional<Index> PermutationMatching::target_of(Index source) const
{
    for (const auto& [s, t] : pairs_)
        if (s == source)
            return t;
    return std::nullopt;
}

PermutationMatching PermutationMatching::sorted() const
{
    auto p = pairs_;
    std::sort(p.begin(), p.end());
    return {std::move(p), n_, n_tilde_};
}

PermutationMatching PermutationMatching::transposed() const
{
    std::vector<Pair> p;
    p.reserve(pairs_.size());
    for (const auto& [s, t] : pairs_)
        p.emplace_back(t, s);
    std::sort(p.begin(), p.end());
    return {std::move(p), n_tilde_, n_};
}

bool operator==(const PermutationMatching& a, const PermutationMatching& b)
{
    return a.n_ == b.n_ && a.n_tilde_ == b.n_tilde_ && a.sorted().pairs_ == b.sorted().pairs_;
}

Matrix permutation_to_matrix(const PermutationMatching& p, Index n, Index n_tilde)
{
    Matrix m = Matrix::Zero(n, n_tilde);
    for (const auto& [s, t] : p.pairs()) {
        if (s < 0 || s >= n || t < 0 || t >= n_tilde)
            throw ValidationError("matching index out of range");
        m(s, t) = 1.0;
    }
    return m;
}

Matrix permutation_to_matrix(const PermutationMatching& p)
{
    return permutation_to_matrix(p, p.source_size(), p.target_size());
}

bool has_duplicate_points(const std::vector<Point2>& points)
{
    std::set<Point2> seen(points.begin(), points.end());
    return seen.size() != points.size();
}

AttributedGraph graph_from_points(const std::vector<Point2>& points, std::optional<Matrix> features)
{
    if (points.size() < 2)
        throw ValidationError("graph_from_points needs at least 2 points");
    const auto n = static_cast<Index>(points.size());
    Matrix a = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const auto& p = points[static_cast<std::size_t>(i)];
            const auto& q = points[static_cast<std::size_t>(j)];
            const double d = std::hypot(p[0] - q[0], p[1] - q[1]);
            a(i, j) = d;
            a(j, i) = d;
        }
    }
    return AttributedGraph(std::move(a), std::move(features), points);
}

AttributedGraph parse_graph(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("graph parse failure: ") + e.what());
    }
    if (!doc.is_object())
        throw ValidationError("graph parse failure: top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ValidationError("graph parse failure: missing integer field \"n\"");
    const auto n = doc["n"].get<long long>();
    if (n < 1)
        throw ValidationError("graph parse failure: n must be positive");

    const bool has_aff = doc.contains("affinity");
    const bool has_coords = doc.contains("coords");
    if (has_aff == has_coords)
        throw ValidationError("graph parse failure: exactly one of \"affinity\" or \"coords\" is required");

    std::optional<Matrix> features;
    if (doc.contains("features"))
        features = matrix_from_json(doc["features"], "features");

    if (has_coords) {
        const Matrix c = matrix_from_json(doc["coords"], "coords");
        if (c.rows() != n || c.cols() != 2)
            throw ValidationError("graph parse failure: coords must be n rows of [x, y]");
        std::vector<Point2> points;
        for (Index i = 0; i < c.rows(); ++i)
            points.push_back({c(i, 0), c(i, 1)});
        if (features && features->rows() != n)
            throw ValidationError("feature row count does not match node count");
        if (n < 2)
            throw ValidationError("graph parse failure: coords need at least 2 points");
        return graph_from_points(points, std::move(features));
    }

    Matrix a = matrix_from_json(doc["affinity"], "affinity");
    if (a.rows() != n || a.cols() != n)
        throw ValidationError("graph parse failure: affinity must be n x n");
    require_finite(a, "affinity");
    if ((a.array() < 0.0).any())
        throw ValidationError("negative affinity entry");
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > kSymmetrizeTolerance)
        throw ValidationError("asymmetric affinity");
    Matrix sym = 0.5 * (a + a.transpose());
    return AttributedGraph(std::move(sym), std::move(features));
}

AttributedGraph load_graph(const std::filesystem::path& path)
{
    return parse_graph(read_file(path));
}

std::string serialize_graph(const AttributedGraph& g)
{
    nlohmann::json doc;
    doc["n"] = g.size();
    doc["affinity"] = matrix_to_json(g.affinity());
    if (g.has_features())
        doc["features"] = matrix_to_json(g.features());
    return doc.dump();
}

void save_graph(const AttributedGraph& g, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw ValidationError("cannot write " + path.string());
    out << serialize_graph(g) << '\n';
}

PermutationMatching load_matching(const std::filesystem::path& path)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
        std::vector<PermutationMatching::Pair> pairs;
        for (const auto& p : doc.at("pairs"))
            pairs.emplace_back(p.at(0).get<Index>(), p.at(1).get<Index>());
        return PermutationMatching(std::move(pairs), doc.at("n").get<Index>(), doc.at("n_tilde").get<Index>());
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("matching parse failure: ") + e.what());
    }
}

std::string serialize_matching(const PermutationMatching& m)
{
    nlohmann::json doc;
    doc["n"] = m.source_size();
    doc["n_tilde"] = m.target_size();
    auto pairs = nlohmann::json::array();
    const auto sorted = m.sorted();
    for (const auto& [s, t] : sorted.pairs())
        pairs.push_back({s, t});
    doc["pairs"] = std::move(pairs);
    return doc.dump();
}

MatchingProblem::MatchingProblem(const AttributedGraph& source, const AttributedGraph& target, double lambda)
    : a_(source.affinity()), a_tilde_(target.affinity()), lambda_(lambda)
{
    if (source.has_features() != target.has_features())
        throw ValidationError("features must be present on both graphs or neither");
    if (source.has_features()) {
        if (source.features().cols() != target.features().cols())
            throw ValidationError("feature dimensions differ between graphs");
        k_ = source.features() * target.features().transpose();
    }
}

MatchingProblem::MatchingProblem(Matrix a, Matrix a_tilde, Matrix k, double lambda)
    : a_(std::move(a)), a_tilde_(std::move(a_tilde)), k_(std::move(k)), lambda_(lambda)
{
    if (a_.rows() != a_.cols() || a_tilde_.rows() != a_tilde_.cols())
        throw ValidationError("affinity matrices must be square");
    if (k_.size() > 0 && (k_.rows() != a_.rows() || k_.cols() != a_tilde_.rows()))
        throw ValidationError("node term K has wrong dimensions");
}

double MatchingProblem::objective(const Matrix& m) const
{
    if (m.rows() != n() || m.cols() != n_tilde())
        throw ValidationError("matching matrix dimensions do not match the graphs");
    return objective(m, a_ * m * a_tilde_);
}

double MatchingProblem::objective(const Matrix& m, const Matrix& amb) const
{
    double z = 0.5 * m.cwiseProduct(amb).sum();
    if (has_node_term())
        z += lambda_ * m.cwiseProduct(k_).sum();
    return z;
}

Matrix MatchingProblem::gradient(const Matrix& m) const
{
    Matrix g = a_ * m * a_tilde_;
    if (has_node_term())
        g += lambda_ * k_;
    return g;
}

double objective_z(const Matrix& m, const AttributedGraph& a, const AttributedGraph& b, double lambda)
{
    return MatchingProblem(a, b, lambda).objective(m);
}

double objective_z(const PermutationMatching& m, const AttributedGraph& a, const AttributedGraph& b,
                   double lambda)
{
    return objective_z(permutation_to_matrix(m, a.size(), b.size()), a, b, lambda);
}

double objective_z(const DoublyStochasticMatrix& m, const AttributedGraph& a, const AttributedGraph& b,
                   double lambda)
{
    return objective_z(m.values(), a, b, lambda);
}

} // namespace gm
