#include "nls/convergence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "nls/norms.hpp"
#include "nls/version.hpp"

namespace nls {

namespace {

long steps_for(double horizon, double tau, const char* key) {
    const double ratio = horizon / tau;
    const double rounded = std::round(ratio);
    if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, rounded))
        throw std::invalid_argument(std::string("ExperimentConfig: ") + key +
                                    " must divide T into an integral step count");
    return static_cast<long>(rounded);
}

nlohmann::json echo_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["M"] = cfg.grid.size();
    j["s"] = cfg.data.s;
    j["seed"] = cfg.data.seed;
    j["mu"] = cfg.mu;
    j["T"] = cfg.T;
    j["taus"] = cfg.taus;
    j["tau_ref"] = cfg.tau_ref;
    j["reference_filtered"] = cfg.reference_filtered;
    j["dealias"] = cfg.dealias;
    j["fit_skip_largest"] = cfg.fit_skip_largest;
    j["code_version"] = kVersion;
    return j;
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Each index writes
// only its own slot, so the fan-out is deterministic.
template <typename Fn>
void parallel_for(long count, int jobs, Fn&& fn) {
    const int workers = static_cast<int>(std::max<long>(1, std::min<long>(jobs, count)));
    if (workers == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

void ExperimentConfig::validate() const {
    if (!(data.grid == grid))
        throw std::invalid_argument("ExperimentConfig: data.grid must match grid (key: M)");
    if (mu != -1 && mu != 1) throw std::invalid_argument("ExperimentConfig: mu must be -1 or +1");
    if (!(T > 0.0)) throw std::invalid_argument("ExperimentConfig: T must be > 0");
    if (taus.empty()) throw std::invalid_argument("ExperimentConfig: taus must be nonempty");
    double tau_min = taus.front();
    for (double tau : taus) {
        if (!(tau > 0.0) || tau > 1.0)
            throw std::invalid_argument("ExperimentConfig: taus entries must lie in (0,1]");
        steps_for(T, tau, "taus");
        tau_min = std::min(tau_min, tau);
    }
    if (!(tau_ref > 0.0)) throw std::invalid_argument("ExperimentConfig: tau_ref must be > 0");
    steps_for(T, tau_ref, "tau_ref");
    if (tau_ref > tau_min / 8.0)
        throw std::invalid_argument("ExperimentConfig: tau_ref must be <= min(taus)/8");
    if (reference_filtered && 1.0 / std::sqrt(tau_ref) <= grid.size() / 2.0)
        throw std::invalid_argument(
            "ExperimentConfig: tau_ref cutoff must exceed M/2 when reference_filtered "
            "(key: tau_ref)");
    if (fit_skip_largest < 0 ||
        static_cast<size_t>(fit_skip_largest) + 2 > taus.size())
        throw std::invalid_argument(
            "ExperimentConfig: fit_skip_largest must leave at least two sweep points");
}

double fit_order(std::span<const std::pair<double, double>> rows) {
    if (rows.size() < 2) throw std::invalid_argument("fit_order: need at least two rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [tau, err] : rows) {
        if (!(err > 0.0) || !std::isfinite(err))
            throw std::invalid_argument("fit_order: errors must be positive and finite");
        const double x = std::log2(tau);
        const double y = std::log2(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(rows.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_order: taus must not be all equal");
    return (n * sxy - sx * sy) / denom;
}

SpectralField reference_solution(const ExperimentConfig& cfg) {
    cfg.validate();
    const SpectralField u0 = generate(cfg.data);
    const StepperConfig scfg(cfg.tau_ref, cfg.mu, cfg.reference_filtered, cfg.dealias);
    return integrate(u0, scfg, steps_for(cfg.T, cfg.tau_ref, "tau_ref")).final;
}

ConvergenceReport run_sweep_with(const ExperimentConfig& cfg, const Propagator& propagate,
                                 int jobs) {
    cfg.validate();
    const SpectralField u0 = generate(cfg.data);

    // Reference and its halved-step self-check; both must exist before any
    // error row is trusted.
    SpectralField ref(cfg.grid), ref_half(cfg.grid);
    {
        const long n_ref = steps_for(cfg.T, cfg.tau_ref, "tau_ref");
        const StepperConfig full(cfg.tau_ref, cfg.mu, cfg.reference_filtered, cfg.dealias);
        const StepperConfig half(cfg.tau_ref / 2.0, cfg.mu, cfg.reference_filtered, cfg.dealias);
        parallel_for(2, jobs, [&](long i) {
            if (i == 0)
                ref = integrate(u0, full, n_ref).final;
            else
                ref_half = integrate(u0, half, 2 * n_ref).final;
        });
    }

    std::vector<double> taus_sorted = cfg.taus;
    std::sort(taus_sorted.begin(), taus_sorted.end(), std::greater<>());

    ConvergenceReport report;
    report.rows.resize(taus_sorted.size());
    parallel_for(static_cast<long>(taus_sorted.size()), jobs, [&](long i) {
        const double tau = taus_sorted[i];
        const SpectralField uT = propagate(u0, tau, steps_for(cfg.T, tau, "taus"));
        const double err = l2_error(uT, ref);
        if (!(err > 0.0) || !std::isfinite(err))
            throw std::runtime_error("run_sweep: degenerate error at tau=" + std::to_string(tau));
        report.rows[i] = {tau, err};
    });

    report.reference_check.delta = l2_error(ref, ref_half);
    report.reference_check.smallest_error = report.rows.back().second;
    report.reference_check.passed =
        report.reference_check.delta < 0.1 * report.reference_check.smallest_error;

    const size_t skip = static_cast<size_t>(cfg.fit_skip_largest);
    std::span<const std::pair<double, double>> fit_rows(report.rows.data() + skip,
                                                        report.rows.size() - skip);
    report.fitted_order = fit_order(fit_rows);
    report.fit_range = {fit_rows.back().first, fit_rows.front().first};
    report.config_echo = echo_json(cfg).dump(2);
    return report;
}

ConvergenceReport run_sweep(const ExperimentConfig& cfg, int jobs) {
    return run_sweep_with(
        cfg,
        [&cfg](const SpectralField& u0, double tau, long n_steps) {
            return integrate(u0, StepperConfig(tau, cfg.mu, /*filtered=*/true, cfg.dealias),
                             n_steps)
                .final;
        },
        jobs);
}

std::vector<ConvergenceReport> resolution_study(const ExperimentConfig& cfg,
                                                std::span<const int> grid_sizes, int jobs) {
    std::vector<ConvergenceReport> reports;
    reports.reserve(grid_sizes.size());
    for (int m : grid_sizes) {
        ExperimentConfig local = cfg;
        local.grid = Grid2D(m);
        local.data = RoughDataSpec(cfg.data.s, cfg.data.seed, local.grid);
        reports.push_back(run_sweep(local, jobs));
    }
    return reports;
}

} // namespace nls
