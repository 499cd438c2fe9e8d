#include "common.hpp"

#include "gm/assign_ops.hpp"
#include "gm/error.hpp"
#include "gm/synthgen.hpp"

#include <ostream>

namespace gm::cli {

int run_bench_operators(const BenchOperatorsOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (opt.phis.empty())
            throw ValidationError("--phi needs at least one value");
        if (opt.iters < 1)
            throw ValidationError("--iters must be at least 1");
        if (opt.n < 2)
            throw ValidationError("--n must be at least 2");
        const auto config = make_config(opt.solver, false);

        CsvTable table({"phi", "operator", "iter", "distance", "seed"});
        const std::string seed = std::to_string(opt.seed);
        for (double phi : opt.phis) {
            const Matrix x = random_profit(opt.n, phi, opt.seed);
            const Matrix p_opt = permutation_to_matrix(hungarian(x));
            const std::string phi_text = format_double(phi);
            auto record = [&](const char* name) {
                return [&, name](int it, const Matrix& p) {
                    table.add_row({phi_text, name, std::to_string(it), format_double((p - p_opt).norm()), seed});
                };
            };
            // eps = 0 keeps every run at exactly --iters iterations.
            dynamic_softassign(x, config.gamma, 0.0, opt.iters, record("dynamic-softassign"));
            alternating_projection(x, opt.iters, 0.0, record("alternating-projection"));
        }

        if (!opt.out) {
            table.write(out);
            return int{kOk};
        }
        table.write(*opt.out);
        auto cfg = describe(config);
        cfg["phi"] = opt.phis;
        cfg["iters"] = opt.iters;
        cfg["n"] = opt.n;
        write_json(make_manifest("bench-operators", cfg, {opt.seed}, {*opt.out}), manifest_path(*opt.out));
        return int{kOk};
    });
}

} // namespace gm::cli
