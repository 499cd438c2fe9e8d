#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gm::cli {

struct CheckResult {
    bool passed = false;
    std::string detail;
};

struct SelfCheck {
    std::string name;
    std::function<CheckResult(std::uint64_t seed)> run;
};

/// The oracle suite run by `gm selftest`, in execution order.
std::vector<SelfCheck> selftest_checks();

} // namespace gm::cli
