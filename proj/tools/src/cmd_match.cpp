#include "common.hpp"

#include "gm/error.hpp"
#include "gm/metrics.hpp"
#include "gm/solver.hpp"

#include <ostream>

namespace gm::cli {

int run_match(const MatchOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto alg = parse_algorithm(opt.algo);
        const auto a = load_graph(opt.a);
        const auto b = load_graph(opt.b);
        const auto config = make_config(opt.solver, a.has_features() && b.has_features());
        std::optional<PermutationMatching> truth;
        if (opt.truth)
            truth = load_matching(*opt.truth);

        const auto res = variant_solve(alg, a, b, config);

        nlohmann::json doc;
        doc["algo"] = std::string(to_string(alg));
        doc["pairs"] = nlohmann::json::array();
        for (const auto& [i, j] : res.matching.pairs())
            doc["pairs"].push_back({i, j});
        doc["objective"] = res.objective;
        doc["matching_error"] = matching_error(res.matching, a, b, config.lambda);
        doc["iterations"] = res.iterations;
        doc["alpha_trace"] = res.alpha_trace;
        doc["stop_reason"] = std::string(to_string(res.stop));
        doc["wall_time"] = res.wall_time;
        if (truth)
            doc["accuracy"] = accuracy(res.matching, *truth);

        if (!opt.out) {
            out << doc.dump(2) << '\n';
            return int{kOk};
        }
        write_json(doc, *opt.out);
        auto cfg = describe(config);
        cfg["algo"] = std::string(to_string(alg));
        cfg["a"] = opt.a.string();
        cfg["b"] = opt.b.string();
        if (opt.truth)
            cfg["truth"] = opt.truth->string();
        write_json(make_manifest("match", cfg, {opt.seed}, {*opt.out}), manifest_path(*opt.out));
        return int{kOk};
    });
}

} // namespace gm::cli
