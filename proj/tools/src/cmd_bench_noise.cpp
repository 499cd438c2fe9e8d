#include "common.hpp"

#include "gm/error.hpp"
#include "gm/metrics.hpp"
#include "gm/rng.hpp"
#include "gm/solver.hpp"
#include "gm/synthgen.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <ostream>
#include <tuple>

namespace gm::cli {

namespace {

struct Row {
    std::size_t algo_index;
    int mode; // 0 fixed, 1 adaptive
    int n;
    double q;
    int trial;
    std::uint64_t seed;
    double time;
    double error;
    double accuracy;
};

struct Means {
    double time = 0.0, error = 0.0, accuracy = 0.0;
    int count = 0;
};

double improvement(double fixed, double adaptive)
{
    return fixed != 0.0 ? 100.0 * (fixed - adaptive) / fixed : 0.0;
}

} // namespace

int run_bench_noise(const BenchNoiseOptions& opt, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (opt.trials < 1)
            throw ValidationError("--trials must be at least 1");
        if (opt.sizes.empty() || opt.deletions.empty() || opt.algos.empty())
            throw ValidationError("--sizes, --deletions and --algos need at least one value");
        std::vector<Algorithm> algos;
        for (const auto& a : opt.algos)
            algos.push_back(parse_algorithm(a));

        SolverFlags flags = opt.solver;
        double fixed_value = 1.0;
        if (flags.alpha) {
            const auto mode = parse_alpha(*flags.alpha);
            if (mode.is_adaptive())
                throw ValidationError("bench-noise runs both step modes; --alpha only sets the fixed value");
            fixed_value = mode.value;
            flags.alpha.reset();
        }
        const auto base = make_config(flags, false);
        for (int n : opt.sizes)
            GenSpec{n, 0, 1.0, 0.0, Connectivity::delaunay}.validate();
        for (double q : opt.deletions)
            GenSpec{opt.sizes.front(), 0, 1.0, q, Connectivity::delaunay}.validate();

        struct Task {
            int n;
            double q;
            int trial;
            std::uint64_t seed;
        };
        std::vector<Task> tasks;
        for (int n : opt.sizes)
            for (double q : opt.deletions)
                for (int t = 0; t < opt.trials; ++t) {
                    const auto s = derive_seed(derive_seed(derive_seed(opt.seed, static_cast<std::uint64_t>(n)),
                                                           std::bit_cast<std::uint64_t>(q)),
                                               static_cast<std::uint64_t>(t));
                    tasks.push_back({n, q, t, s});
                }

        const std::size_t per_task = algos.size() * 2;
        std::vector<Row> rows(tasks.size() * per_task);
        parallel_for(tasks.size(), [&](std::size_t k) {
            const auto& task = tasks[k];
            const auto pair = make_noisy_pair({task.n, task.seed, 1.0, task.q, Connectivity::delaunay});
            for (std::size_t ai = 0; ai < algos.size(); ++ai) {
                for (int mode = 0; mode < 2; ++mode) {
                    SolverConfig c = base;
                    c.alpha = mode == 0 ? AlphaMode::fixed(fixed_value) : AlphaMode::adaptive();
                    const auto res = variant_solve(algos[ai], pair.source, pair.target, c);
                    rows[k * per_task + ai * 2 + static_cast<std::size_t>(mode)] =
                        Row{ai,
                            mode,
                            task.n,
                            task.q,
                            task.trial,
                            task.seed,
                            res.wall_time,
                            matching_error(res.matching, pair.source, pair.target, c.lambda),
                            accuracy(res.matching, pair.truth)};
                }
            }
        });
        std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
            return std::tie(x.algo_index, x.mode, x.n, x.q, x.trial) < std::tie(y.algo_index, y.mode, y.n, y.q, y.trial);
        });

        CsvTable table({"algo", "alpha_mode", "n", "q", "seed", "time", "matching_error", "accuracy"});
        std::vector<std::array<Means, 2>> means(algos.size());
        for (const auto& r : rows) {
            table.add_row({std::string(to_string(algos[r.algo_index])), r.mode == 0 ? "fixed" : "adaptive",
                           std::to_string(r.n), format_double(r.q), std::to_string(r.seed), format_double(r.time),
                           format_double(r.error), format_double(r.accuracy)});
            auto& m = means[r.algo_index][static_cast<std::size_t>(r.mode)];
            m.time += r.time;
            m.error += r.error;
            m.accuracy += r.accuracy;
            ++m.count;
        }

        // Improvement of adaptive over fixed, in percent; positive is better.
        nlohmann::json summary = nlohmann::json::array();
        std::ostream& report = opt.out ? out : err;
        report << "Improvements from the adaptive step size (%)\n"
               << std::left << std::setw(10) << "Algorithm" << std::right << std::setw(10) << "Time"
               << std::setw(16) << "MatchingError" << std::setw(12) << "Accuracy" << '\n';
        for (std::size_t ai = 0; ai < algos.size(); ++ai) {
            auto avg = [&](int mode) {
                auto m = means[ai][static_cast<std::size_t>(mode)];
                m.time /= m.count;
                m.error /= m.count;
                m.accuracy /= m.count;
                return m;
            };
            const Means f = avg(0), a = avg(1);
            const double dt = improvement(f.time, a.time);
            const double de = improvement(f.error, a.error);
            const double da = f.accuracy != 0.0 ? 100.0 * (a.accuracy - f.accuracy) / f.accuracy : 0.0;
            const std::string name(to_string(algos[ai]));
            report << std::left << std::setw(10) << name << std::right << std::fixed << std::setprecision(1)
                   << std::setw(10) << dt << std::setw(16) << de << std::setw(12) << da << '\n';
            report.unsetf(std::ios::floatfield);
            summary.push_back({{"algo", name},
                               {"time_pct", dt},
                               {"matching_error_pct", de},
                               {"accuracy_pct", da},
                               {"fixed", {{"time", f.time}, {"matching_error", f.error}, {"accuracy", f.accuracy}}},
                               {"adaptive", {{"time", a.time}, {"matching_error", a.error}, {"accuracy", a.accuracy}}}});
        }

        if (!opt.out) {
            table.write(out);
            return int{kOk};
        }
        table.write(*opt.out);
        auto cfg = describe(base);
        cfg["alpha"] = nlohmann::json{{"fixed", fixed_value}, {"adaptive", true}};
        cfg["sizes"] = opt.sizes;
        cfg["deletions"] = opt.deletions;
        cfg["trials"] = opt.trials;
        cfg["algos"] = opt.algos;
        cfg["connectivity"] = "delaunay";
        auto manifest = make_manifest("bench-noise", cfg, {{"base", opt.seed}}, {*opt.out});
        manifest["summary"] = summary;
        write_json(manifest, manifest_path(*opt.out));
        return int{kOk};
    });
}

} // namespace gm::cli
