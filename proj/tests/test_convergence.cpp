#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nls/convergence.hpp"
#include "nls/norms.hpp"
#include "nls/spectral_ops.hpp"

using namespace nls;

namespace {

// Small, fast experiment: M=16, T=0.25, three dyadic taus.
ExperimentConfig tiny_config(double s = 0.8, std::uint64_t seed = 7) {
    const Grid2D grid(16);
    ExperimentConfig cfg{grid, RoughDataSpec(s, seed, grid)};
    cfg.mu = -1;
    cfg.T = 0.25;
    cfg.taus = {std::ldexp(1.0, -4), std::ldexp(1.0, -5), std::ldexp(1.0, -6)};
    cfg.tau_ref = std::ldexp(1.0, -9);
    return cfg;
}

} // namespace

TEST_CASE("fit_order recovers an exact power law") {
    const std::vector<std::pair<double, double>> rows = {
        {0.5, std::pow(0.5, 0.5)}, {0.25, std::pow(0.25, 0.5)}, {0.125, std::pow(0.125, 0.5)}};
    CHECK(std::abs(fit_order(rows) - 0.5) <= 1e-12);
}

TEST_CASE("fit_order rejects degenerate input") {
    std::vector<std::pair<double, double>> one = {{0.5, 0.1}};
    CHECK_THROWS_AS(fit_order(one), std::invalid_argument);
    std::vector<std::pair<double, double>> bad = {{0.5, 0.1}, {0.25, 0.0}};
    CHECK_THROWS_AS(fit_order(bad), std::invalid_argument);
    std::vector<std::pair<double, double>> neg = {{0.5, 0.1}, {0.25, -0.2}};
    CHECK_THROWS_AS(fit_order(neg), std::invalid_argument);
}

TEST_CASE("constant errors fit slope zero") {
    const std::vector<std::pair<double, double>> rows = {{0.5, 0.3}, {0.25, 0.3}, {0.125, 0.3}};
    CHECK(std::abs(fit_order(rows)) <= 1e-13);
}

TEST_CASE("config validation names the offending key") {
    ExperimentConfig cfg = tiny_config();
    cfg.taus.push_back(0.3); // does not divide T
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("taus"), std::invalid_argument);

    ExperimentConfig cfg2 = tiny_config();
    cfg2.tau_ref = cfg2.taus.back() / 4.0; // too close to the sweep
    CHECK_THROWS_WITH_AS(cfg2.validate(), doctest::Contains("tau_ref"), std::invalid_argument);

    // cutoff 2^4.5 ~ 22.6 below M/2 = 32 while the reference is filtered
    const Grid2D big(64);
    ExperimentConfig cfg3{big, RoughDataSpec(0.8, 7, big)};
    cfg3.T = 0.25;
    cfg3.taus = {std::ldexp(1.0, -4), std::ldexp(1.0, -5), std::ldexp(1.0, -6)};
    cfg3.tau_ref = std::ldexp(1.0, -9);
    CHECK_THROWS_WITH_AS(cfg3.validate(), doctest::Contains("tau_ref"), std::invalid_argument);
    cfg3.reference_filtered = false; // same numbers pass once the filter is off
    cfg3.validate();
}

TEST_CASE("reference solution is exact on plane-wave data") {
    // Plane-wave initial data evolves exactly under both subflows, so even
    // the tau_ref-step reference reproduces the closed-form solution.
    ExperimentConfig cfg = tiny_config();

    // swap in plane-wave data by overriding the generator seed path: run the
    // reference manually from the plane wave instead.
    const Grid2D g = cfg.grid;
    SpectralField u0(g);
    const Complex c{0.7, 0.0};
    u0.at(2, -1) = c;

    const StepperConfig scfg(cfg.tau_ref, cfg.mu, cfg.reference_filtered, cfg.dealias);
    const SpectralField ref =
        integrate(u0, scfg, static_cast<long>(std::round(cfg.T / cfg.tau_ref))).final;

    SpectralField exact(g);
    const double ksq = 5.0;
    exact.at(2, -1) = c * std::polar(1.0, (-ksq + cfg.mu * std::norm(c)) * cfg.T);
    CHECK(l2_error(ref, exact) <= 1e-8);
}

TEST_CASE("zero initial data stays zero in the reference") {
    ExperimentConfig cfg = tiny_config();
    const StepperConfig scfg(cfg.tau_ref, cfg.mu, cfg.reference_filtered, cfg.dealias);
    const SpectralField ref = integrate(SpectralField(cfg.grid), scfg, 16).final;
    CHECK(l2_norm(ref) == 0.0);
}

TEST_CASE("synthetic propagator with exact tau^1/2 error fits 0.5") {
    ExperimentConfig cfg = tiny_config();
    const SpectralField ref = reference_solution(cfg);

    SpectralField unit(cfg.grid);
    unit.at(1, 1) = 1.0;

    const Propagator stub = [&ref, &unit](const SpectralField&, double tau, long) {
        SpectralField out = ref;
        for (size_t i = 0; i < out.coeffs.size(); ++i)
            out.coeffs[i] += std::sqrt(tau) * unit.coeffs[i];
        return out;
    };

    const ConvergenceReport report = run_sweep_with(cfg, stub);
    CHECK(std::abs(report.fitted_order - 0.5) <= 1e-10);
    CHECK(report.rows.size() == 3);
    CHECK(report.rows.front().first > report.rows.back().first);
}

TEST_CASE("run_sweep is deterministic and monotone on the tiny config") {
    ExperimentConfig cfg = tiny_config();
    const ConvergenceReport a = run_sweep(cfg, /*jobs=*/2);
    const ConvergenceReport b = run_sweep(cfg, /*jobs=*/1);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].first == b.rows[i].first);
        CHECK(a.rows[i].second == b.rows[i].second); // bitwise across job counts
    }
    for (const auto& [tau, err] : a.rows) {
        CHECK(err > 0.0);
        CHECK(std::isfinite(err));
    }
    // monotone trend, allowing one adjacent inversion of at most 20%
    int inversions = 0;
    for (size_t i = 1; i < a.rows.size(); ++i)
        if (a.rows[i].second > a.rows[i - 1].second) {
            ++inversions;
            CHECK(a.rows[i].second <= 1.2 * a.rows[i - 1].second);
        }
    CHECK(inversions <= 1);
    CHECK(std::isfinite(a.fitted_order));
    CHECK(a.reference_check.passed);
}

TEST_CASE("a propagator that goes non-finite aborts naming the tau") {
    ExperimentConfig cfg = tiny_config();
    const Propagator broken = [&cfg](const SpectralField& u0, double tau, long) {
        SpectralField out = u0;
        if (tau == cfg.taus[1]) out.coeffs[0] = Complex{std::nan(""), 0.0};
        return out;
    };
    CHECK_THROWS_WITH_AS(run_sweep_with(cfg, broken), doctest::Contains("tau"),
                         std::runtime_error);
}

TEST_CASE("resolution study: single grid, determinism across identical grids") {
    ExperimentConfig cfg = tiny_config();
    const std::vector<int> single{16};
    const auto reports = resolution_study(cfg, single);
    REQUIRE(reports.size() == 1);

    const std::vector<int> twice{16, 16};
    const auto pair = resolution_study(cfg, twice);
    REQUIRE(pair.size() == 2);
    REQUIRE(pair[0].rows.size() == pair[1].rows.size());
    for (size_t i = 0; i < pair[0].rows.size(); ++i)
        CHECK(pair[0].rows[i].second == pair[1].rows[i].second);
}

TEST_CASE("fit_skip_largest drops leading rows from the fit") {
    ExperimentConfig cfg = tiny_config();
    cfg.fit_skip_largest = 1;
    cfg.validate();
    const SpectralField ref = reference_solution(cfg);
    SpectralField unit(cfg.grid);
    unit.at(1, 1) = 1.0;
    // error tau^0.5 except a wild outlier at the largest tau
    const Propagator stub = [&](const SpectralField&, double tau, long) {
        SpectralField out = ref;
        const double mag = (tau == cfg.taus.front()) ? 25.0 : std::sqrt(tau);
        for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += mag * unit.coeffs[i];
        return out;
    };
    const ConvergenceReport report = run_sweep_with(cfg, stub);
    CHECK(std::abs(report.fitted_order - 0.5) <= 1e-10);
    CHECK(report.fit_range.second == cfg.taus[1]);
}
