#include "gm/metrics.hpp"

#include "gm/error.hpp"

#include <cmath>

namespace gm {

namespace {

void check_dims(const PermutationMatching& m, const AttributedGraph& a, const AttributedGraph& b)
{
    if (m.source_size() != a.size() || m.target_size() != b.size())
        throw ValidationError("matching dimensions do not match the graphs");
    if (a.has_features() != b.has_features())
        throw ValidationError("features must be present on both graphs or neither");
    if (a.has_features() && a.features().cols() != b.features().cols())
        throw ValidationError("feature dimensions differ between graphs");
}

} // namespace

double matching_error(const PermutationMatching& m, const AttributedGraph& a, const AttributedGraph& b,
                      double lambda)
{
    check_dims(m, a, b);
    const Matrix p = permutation_to_matrix(m);
    double err = 0.25 * (a.affinity() - p * b.affinity() * p.transpose()).norm();
    if (a.has_features())
        err += lambda * (a.features() - p * b.features()).norm();
    return err;
}

double matching_error_squared(const PermutationMatching& m, const AttributedGraph& a, const AttributedGraph& b,
                              double lambda)
{
    check_dims(m, a, b);
    const Matrix p = permutation_to_matrix(m);
    double err = 0.25 * (a.affinity() - p * b.affinity() * p.transpose()).squaredNorm();
    if (a.has_features())
        err += lambda * (a.features() - p * b.features()).squaredNorm();
    return err;
}

double accuracy(const PermutationMatching& m, const PermutationMatching& truth)
{
    if (m.source_size() != truth.source_size() || m.target_size() != truth.target_size())
        throw ValidationError("accuracy: matching and ground truth refer to different node sets");
    if (truth.pairs().empty())
        throw ValidationError("accuracy: ground truth is empty");
    std::vector<Index> target(static_cast<std::size_t>(m.source_size()), -1);
    for (const auto& [s, t] : m.pairs())
        target[static_cast<std::size_t>(s)] = t;
    std::size_t hits = 0;
    for (const auto& [s, t] : truth.pairs())
        hits += target[static_cast<std::size_t>(s)] == t ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(truth.pairs().size());
}

double error_rate(double err_alg, double err_baseline)
{
    if (!(err_baseline > 0.0))
        throw ValidationError("error_rate: baseline matching error must be positive");
    return err_alg / err_baseline;
}

} // namespace gm
