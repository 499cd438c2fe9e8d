#include "common.hpp"

#include "gm/error.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace gm::cli {

int guarded(std::ostream& err, const std::function<int()>& body)
{
    try {
        return body();
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << '\n';
        return kSolverError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

SolverConfig make_config(const SolverFlags& flags, bool has_features)
{
    SolverConfig c;
    c.gamma = flags.gamma.value_or(default_gamma(has_features));
    c.lambda = flags.lambda;
    if (flags.alpha)
        c.alpha = parse_alpha(*flags.alpha);
    c.eps_outer = flags.eps_outer;
    c.eps_sinkhorn = flags.eps_sinkhorn;
    c.max_outer_iters = flags.max_iters;
    c.validate();
    return c;
}

nlohmann::json describe(const SolverConfig& c)
{
    return {{"gamma", c.gamma},
            {"lambda", c.lambda},
            {"alpha", c.alpha ? to_string(*c.alpha) : std::string("default")},
            {"operator", std::string(to_string(c.op))},
            {"eps_outer", c.eps_outer},
            {"eps_sinkhorn", c.eps_sinkhorn},
            {"max_outer_iters", c.max_outer_iters},
            {"max_inner_iters", c.max_inner_iters}};
}

namespace {

void add_solver_flags(CLI::App* cmd, SolverFlags& f)
{
    cmd->add_option("--gamma", f.gamma, "softassign sharpness; default 5, or 3 with node features");
    cmd->add_option("--lambda", f.lambda, "node-term weight")->capture_default_str();
    cmd->add_option("--alpha", f.alpha, "fixed step in [0, 1] or \"adaptive\"");
    cmd->add_option("--eps-outer", f.eps_outer, "outer stopping tolerance")->capture_default_str();
    cmd->add_option("--eps-sinkhorn", f.eps_sinkhorn, "Sinkhorn stopping tolerance")->capture_default_str();
    cmd->add_option("--max-iters", f.max_iters, "outer iteration cap")->capture_default_str();
}

} // namespace

int run(int argc, char** argv)
{
    CLI::App app{"Graph matching solver and benchmark harness"};
    app.require_subcommand(1);
    app.set_version_flag("--version", GM_VERSION);

    MatchOptions match;
    auto* m = app.add_subcommand("match", "match two graph files");
    m->add_option("--a", match.a, "source graph JSON")->required();
    m->add_option("--b", match.b, "target graph JSON")->required();
    m->add_option("--algo", match.algo, "scg, ga, dspfp, aipfp or sm")->capture_default_str();
    m->add_option("--truth", match.truth, "ground-truth matching JSON");
    m->add_option("--out", match.out, "result JSON (stdout when omitted)");
    m->add_option("--seed", match.seed, "recorded in the manifest");
    add_solver_flags(m, match.solver);

    GenerateOptions gen;
    auto* g = app.add_subcommand("generate", "write a planted random graph pair");
    g->add_option("--n", gen.n, "node count")->capture_default_str();
    g->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    g->add_option("--deletion", gen.deletion_pct, "percentage of target nodes removed")->capture_default_str();
    g->add_option("--connectivity", gen.connectivity, "full or delaunay")->capture_default_str();
    g->add_option("--out-a", gen.out_a, "source graph JSON")->required();
    g->add_option("--out-b", gen.out_b, "target graph JSON")->required();
    g->add_option("--out-truth", gen.out_truth, "ground-truth matching JSON");

    BenchOperatorsOptions ops;
    auto* o = app.add_subcommand("bench-operators", "operator distance to the optimal assignment per iteration");
    o->add_option("--phi", ops.phis, "magnitudes")->delimiter(',')->capture_default_str();
    o->add_option("--iters", ops.iters, "inner iterations")->capture_default_str();
    o->add_option("--n", ops.n, "profit matrix size")->capture_default_str();
    o->add_option("--seed", ops.seed, "RNG seed")->capture_default_str();
    o->add_option("--out", ops.out, "CSV path (stdout when omitted)");
    add_solver_flags(o, ops.solver);

    BenchNoiseOptions noise;
    auto* b = app.add_subcommand("bench-noise", "planted Delaunay pairs with node deletion, fixed vs adaptive step");
    b->add_option("--sizes", noise.sizes, "node counts")->delimiter(',')->capture_default_str();
    b->add_option("--deletions", noise.deletions, "deletion percentages")->delimiter(',')->capture_default_str();
    b->add_option("--trials", noise.trials, "trials per (n, q)")->capture_default_str();
    b->add_option("--algos,--algo", noise.algos, "algorithms")->delimiter(',')->capture_default_str();
    b->add_option("--seed", noise.seed, "base seed")->capture_default_str();
    b->add_option("--out", noise.out, "CSV path (stdout when omitted)");
    add_solver_flags(b, noise.solver);

    SelftestOptions self;
    auto* s = app.add_subcommand("selftest", "run the oracle suite");
    s->add_option("--filter", self.filter, "only run checks whose name contains this text");
    s->add_option("--seed", self.seed, "base seed")->capture_default_str();
    s->add_option("--inject-fault", self.inject_fault, "negative control: curvature-sign")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    if (m->parsed())
        return run_match(match, std::cout, std::cerr);
    if (g->parsed())
        return run_generate(gen, std::cout, std::cerr);
    if (o->parsed())
        return run_bench_operators(ops, std::cout, std::cerr);
    if (b->parsed())
        return run_bench_noise(noise, std::cout, std::cerr);
    return run_selftest(self, std::cout, std::cerr);
}

} // namespace gm::cli
