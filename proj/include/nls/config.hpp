#ifndef NLS_CONFIG_HPP
#define NLS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nls/convergence.hpp"

namespace nls::config {

using json = nlohmann::json;

/// Loads a JSON config file and applies `key=value` overrides on top.
/// Override values are parsed as JSON when possible, else taken as strings.
json load(const std::filesystem::path& path, const std::vector<std::string>& overrides);

/// If NLS_SEED is set in the environment, replaces obj["seed"].
void apply_seed_env(json& obj);

struct GenerateConfig {
    int M;
    double s;
    std::uint64_t seed;
    std::filesystem::path output;
};

struct RunConfig {
    std::filesystem::path input;
    double tau;
    long n_steps;
    int mu = -1;
    bool filtered = true;
    bool dealias = false;
    std::optional<long> snapshot_every;
    std::filesystem::path output;
};

struct DiagnoseConfig {
    int M;
    double s;
    std::uint64_t seed;
    double tau;
    long n_fields; // sequence length N (iterates u_0 .. u_{N-1})
    int mu = -1;
    double bourgain_s = 0.5;
    double bourgain_b = 0.25;
    double b1 = 0.55; // Strichartz / embedding exponent, > 1/2
    std::filesystem::path output;
};

struct ResolutionConfig {
    ExperimentConfig base;
    std::vector<int> grids;
};

// Parsers validate every module invariant and reject unknown keys, naming
// the offending key in the exception message.
GenerateConfig parse_generate(const json& obj);
RunConfig parse_run(const json& obj);
ExperimentConfig parse_converge(const json& obj);
ResolutionConfig parse_resolution(const json& obj);
DiagnoseConfig parse_diagnose(const json& obj);

/// Writes <base>.csv ("tau,l2_error" rows, full float64 precision) and
/// <base>.json (fitted order, fit range, config echo, reference self-check).
void write_convergence_report(const ConvergenceReport& report,
                              const std::filesystem::path& base);

std::string report_csv(const ConvergenceReport& report);
json report_json(const ConvergenceReport& report);

} // namespace nls::config

#endif
