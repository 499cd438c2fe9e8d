#pragma once

#include "gm/cli/app.hpp"
#include "gm/cli/output.hpp"

#include <functional>
#include <iosfwd>

namespace gm::cli {

/// Runs body, mapping ValidationError and I/O failures to exit 1 and
/// SolverError to exit 2, with the message on `err`.
int guarded(std::ostream& err, const std::function<int()>& body);

nlohmann::json describe(const SolverConfig& config);

} // namespace gm::cli
