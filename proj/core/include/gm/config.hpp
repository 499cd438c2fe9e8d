#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gm {

enum class Operator { softassign, alternating, hungarian, greedy, spectral };

std::string_view to_string(Operator op);
Operator parse_operator(std::string_view name);

/// Step-size policy for the constrained-gradient update.
struct AlphaMode {
    enum class Kind { fixed, adaptive };
    Kind kind = Kind::adaptive;
    double value = 1.0; // used when kind == fixed

    static AlphaMode adaptive() { return {Kind::adaptive, 1.0}; }
    static AlphaMode fixed(double v) { return {Kind::fixed, v}; }
    bool is_adaptive() const noexcept { return kind == Kind::adaptive; }

    friend bool operator==(const AlphaMode&, const AlphaMode&) = default;
};

std::string to_string(const AlphaMode& mode);
/// "adaptive" or a number in [0, 1].
AlphaMode parse_alpha(std::string_view text);

struct SolverConfig {
    double gamma = 5.0;
    double lambda = 1.0;
    /// Empty means "the algorithm's own default" (adaptive for SCG).
    std::optional<AlphaMode> alpha;
    Operator op = Operator::softassign;
    double eps_outer = 1e-4;
    double eps_sinkhorn = 1e-6;
    int max_outer_iters = 30;
    int max_inner_iters = 100;

    /// Throws ValidationError naming the first offending field.
    void validate() const;
};

/// gamma = 3 when both graphs carry node features, 5 otherwise.
double default_gamma(bool has_features) noexcept;

} // namespace gm
