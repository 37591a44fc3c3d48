#ifndef NLS_CONVERGENCE_HPP
#define NLS_CONVERGENCE_HPP

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nls/rough_data.hpp"
#include "nls/stepper.hpp"

namespace nls {

/// One tau-sweep experiment: fixed grid, data, horizon and a list of dyadic
/// time steps measured against a small-step reference run.
struct ExperimentConfig {
    ExperimentConfig(const Grid2D& grid_, RoughDataSpec data_)
        : grid(grid_), data(std::move(data_)) {}

    Grid2D grid;
    RoughDataSpec data;
    int mu = -1;
    double T = 1.0;
    std::vector<double> taus;
    double tau_ref = 0.0;
    bool reference_filtered = true;
    bool dealias = false;
    int fit_skip_largest = 0; // drop this many of the largest taus from the fit
    std::filesystem::path output;

    /// Checks the invariants: each tau (and tau_ref) divides T into an
    /// integral step count, tau_ref <= min(taus)/8, and a filtered reference
    /// must have its cutoff beyond the grid (filter inactive). Throws
    /// std::invalid_argument naming the offending key.
    void validate() const;
};

struct ReferenceCheck {
    double delta = 0.0;          // l2 distance between tau_ref and tau_ref/2 runs
    double smallest_error = 0.0; // sweep error at the smallest tau
    bool passed = false;         // delta < 10% of smallest_error
};

struct ConvergenceReport {
    std::vector<std::pair<double, double>> rows; // (tau, l2 error at T), tau descending
    double fitted_order = 0.0;
    std::pair<double, double> fit_range{0.0, 0.0};
    ReferenceCheck reference_check;
    std::string config_echo; // JSON echo of the generating config
};

/// Least-squares slope of log2(error) against log2(tau).
/// Needs >= 2 rows and positive errors.
double fit_order(std::span<const std::pair<double, double>> rows);

/// Integrates the experiment's initial data to time T at step tau_ref.
/// With reference_filtered the cutoff lies beyond the grid, so the run is
/// equivalent to plain Lie splitting at a tiny step.
SpectralField reference_solution(const ExperimentConfig& cfg);

/// Propagator hook: maps (u0, tau, n_steps) to the solution after n_steps.
/// run_sweep uses the filtered Lie stepper; tests may substitute a stub.
using Propagator = std::function<SpectralField(const SpectralField&, double, long)>;

/// Full sweep: reference (plus the halved-step self-check), one filtered run
/// per tau, error rows, fitted order. jobs > 1 fans the tau runs out across
/// threads; results are deterministic either way.
ConvergenceReport run_sweep(const ExperimentConfig& cfg, int jobs = 1);
ConvergenceReport run_sweep_with(const ExperimentConfig& cfg, const Propagator& propagate,
                                 int jobs = 1);

/// One report per grid size, sharing seed and data spec; the mode-keyed
/// generator makes coefficients comparable across resolutions.
std::vector<ConvergenceReport> resolution_study(const ExperimentConfig& cfg,
                                                std::span<const int> grid_sizes, int jobs = 1);

} // namespace nls

#endif
