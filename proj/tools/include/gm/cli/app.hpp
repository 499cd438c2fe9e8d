#pragma once

#include "gm/config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gm::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kSolverError = 2,
    kOracleFailure = 3,
};

/// Solver flags shared by every subcommand. Unset fields keep the library
/// defaults.
struct SolverFlags {
    std::optional<double> gamma;
    double lambda = 1.0;
    std::optional<std::string> alpha;
    double eps_outer = 1e-4;
    double eps_sinkhorn = 1e-6;
    int max_iters = 30;
};

struct MatchOptions {
    std::filesystem::path a, b;
    std::optional<std::filesystem::path> truth;
    std::optional<std::filesystem::path> out;
    std::string algo = "scg";
    std::uint64_t seed = 0;
    SolverFlags solver;
};

struct GenerateOptions {
    int n = 30;
    std::uint64_t seed = 0;
    double deletion_pct = 0.0;
    std::string connectivity = "delaunay";
    std::filesystem::path out_a, out_b;
    std::optional<std::filesystem::path> out_truth;
};

struct BenchOperatorsOptions {
    std::vector<double> phis{1.0, 10.0, 100.0};
    int iters = 50;
    int n = 50;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> out;
    SolverFlags solver;
};

struct BenchNoiseOptions {
    std::vector<int> sizes{50, 100, 200};
    std::vector<double> deletions{1, 2, 3, 4, 5};
    int trials = 100;
    std::vector<std::string> algos{"scg", "dspfp", "aipfp", "sm"};
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> out;
    SolverFlags solver;
};

struct SelftestOptions {
    std::string filter;
    std::uint64_t seed = 0;
    std::optional<std::string> inject_fault;
};

/// Builds a validated SolverConfig; gamma falls back to default_gamma.
SolverConfig make_config(const SolverFlags& flags, bool has_features);

int run_match(const MatchOptions& opt, std::ostream& out, std::ostream& err);
int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int run_bench_operators(const BenchOperatorsOptions& opt, std::ostream& out, std::ostream& err);
int run_bench_noise(const BenchNoiseOptions& opt, std::ostream& out, std::ostream& err);
int run_selftest(const SelftestOptions& opt, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, char** argv);

} // namespace gm::cli
