#include "gm/config.hpp"

#include "gm/error.hpp"

#include <charconv>
#include <cmath>

namespace gm {

std::string_view to_string(Operator op)
{
    switch (op) {
    case Operator::softassign: return "softassign";
    case Operator::alternating: return "alternating";
    case Operator::hungarian: return "hungarian";
    case Operator::greedy: return "greedy";
    case Operator::spectral: return "spectral";
    }
    return "unknown";
}

Operator parse_operator(std::string_view name)
{
    for (auto op : {Operator::softassign, Operator::alternating, Operator::hungarian, Operator::greedy,
                    Operator::spectral})
        if (name == to_string(op))
            return op;
    throw ValidationError("unknown operator: " + std::string(name));
}

std::string to_string(const AlphaMode& mode)
{
    if (mode.is_adaptive())
        return "adaptive";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), mode.value);
    return std::string(buf, end);
}

AlphaMode parse_alpha(std::string_view text)
{
    if (text == "adaptive")
        return AlphaMode::adaptive();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ValidationError("alpha must be \"adaptive\" or a number in [0, 1], got: " + std::string(text));
    if (!(v >= 0.0 && v <= 1.0))
        throw ValidationError("fixed alpha must lie in [0, 1]");
    return AlphaMode::fixed(v);
}

void SolverConfig::validate() const
{
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw ValidationError("gamma must be positive");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw ValidationError("lambda must be nonnegative");
    if (alpha && !alpha->is_adaptive() && !(alpha->value >= 0.0 && alpha->value <= 1.0))
        throw ValidationError("fixed alpha must lie in [0, 1]");
    if (!(eps_outer > 0.0))
        throw ValidationError("eps_outer must be positive");
    if (!(eps_sinkhorn > 0.0))
        throw ValidationError("eps_sinkhorn must be positive");
    if (max_outer_iters < 1)
        throw ValidationError("max_outer_iters must be at least 1");
    if (max_inner_iters < 1)
        throw ValidationError("max_inner_iters must be at least 1");
}

double default_gamma(bool has_features) noexcept
{
    return has_features ? 3.0 : 5.0;
}

} // namespace gm
