#include "common.hpp"

#include "gm/cli/selftest.hpp"
#include "gm/error.hpp"
#include "gm/stepsize.hpp"

#include <iomanip>
#include <ostream>

namespace gm::cli {

int run_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (opt.inject_fault) {
            if (*opt.inject_fault != "curvature-sign")
                throw ValidationError("unknown fault \"" + *opt.inject_fault + "\"");
            set_curvature_sign_fault(true);
            err << "fault injected: curvature sign flipped\n";
        }
        int run = 0, failed = 0;
        for (const auto& check : selftest_checks()) {
            if (!opt.filter.empty() && check.name.find(opt.filter) == std::string::npos)
                continue;
            ++run;
            CheckResult r;
            try {
                r = check.run(opt.seed);
            } catch (const std::exception& e) {
                r = {false, std::string("threw: ") + e.what()};
            }
            failed += !r.passed;
            out << std::left << std::setw(32) << check.name << (r.passed ? "PASS  " : "FAIL  ") << r.detail << '\n';
        }
        set_curvature_sign_fault(false);
        if (run == 0)
            throw ValidationError("no check matches filter \"" + opt.filter + "\"");
        out << run - failed << "/" << run << " checks passed\n";
        return failed == 0 ? int{kOk} : int{kOracleFailure};
    });
}

} // namespace gm::cli
