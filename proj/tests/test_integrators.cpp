#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "nls/fft.hpp"
#include "nls/norms.hpp"
#include "nls/rough_data.hpp"
#include "nls/stepper.hpp"
#include "test_support.hpp"

using namespace nls;
using testsup::random_field;

namespace {
SpectralField rough(int m, double s, std::uint64_t seed) {
    return generate(RoughDataSpec(s, seed, Grid2D(m)));
}
} // namespace

namespace {

// c * e^{i<k,x>} as a spectral field.
SpectralField plane_wave(const Grid2D& g, int k1, int k2, Complex c) {
    SpectralField f(g);
    f.at(k1, k2) = c;
    return f;
}

// Exact NLS plane-wave solution phase: omega = -|k|^2 + mu |c|^2.
Complex plane_wave_phase(int k1, int k2, Complex c, int mu, double t) {
    const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
    return std::polar(1.0, (-ksq + mu * std::norm(c)) * t);
}

} // namespace

TEST_CASE("stepper config validates tau and mu") {
    CHECK_THROWS_AS(StepperConfig(0.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(StepperConfig(2.0, -1), std::invalid_argument);
    CHECK_THROWS_AS(StepperConfig(0.1, 0), std::invalid_argument);
}

TEST_CASE("nonlinear flow on a constant field is a pure phase") {
    const Grid2D g(8);
    const Complex c{0.8, -0.3};
    SpectralField f(g);
    f.at(0, 0) = c;
    for (int mu : {-1, 1}) {
        const double tau = 0.25;
        const SpectralField out = nonlinear_flow(f, tau, mu);
        const Complex expected = c * std::polar(1.0, mu * tau * std::norm(c));
        CHECK(std::abs(out.at(0, 0) - expected) < 1e-14);
        CHECK(l2_norm(out) == doctest::Approx(std::abs(c)).epsilon(1e-13));
    }
}

TEST_CASE("nonlinear flow of zero is zero") {
    const Grid2D g(8);
    const SpectralField out = nonlinear_flow(SpectralField(g), 0.5, -1);
    CHECK(l2_norm(out) == 0.0);
}

TEST_CASE("nonlinear flow preserves pointwise modulus") {
    const Grid2D g(32);
    const SpectralField f = random_field(g, 4);
    const PhysicalField before = to_physical(f);
    const PhysicalField after = to_physical(nonlinear_flow(f, 0.125, -1));
    for (size_t i = 0; i < before.samples.size(); ++i)
        CHECK(std::abs(std::abs(after.samples[i]) - std::abs(before.samples[i])) <
              1e-13 * std::abs(before.samples[i]) + 1e-15);
}

TEST_CASE("mu-conjugation symmetry of the nonlinear flow") {
    const Grid2D g(16);
    const SpectralField f = random_field(g, 31);
    const double tau = 0.2;

    // conj in physical space, expressed through the transforms
    const auto conj_field = [](const SpectralField& x) {
        PhysicalField p = to_physical(x);
        for (auto& v : p.samples) v = std::conj(v);
        return from_physical(p);
    };

    const SpectralField lhs = nonlinear_flow(conj_field(f), tau, +1);
    const SpectralField rhs = conj_field(nonlinear_flow(f, tau, -1));
    CHECK(l2_error(lhs, rhs) <= 1e-12 * l2_norm(f));
}

TEST_CASE("one filtered Lie step is exact on a plane wave") {
    const Grid2D g(16);
    const Complex c{0.7, 0.2};
    const SpectralField u0 = plane_wave(g, 2, -1, c);
    const StepperConfig cfg(0.125, -1); // cutoff ~ 2.83 covers k=(2,-1)
    const SpectralField u1 = lie_step(u0, cfg);
    const Complex expected = c * plane_wave_phase(2, -1, c, cfg.mu, cfg.tau);
    CHECK(std::abs(u1.at(2, -1) - expected) <= 1e-12);
    SpectralField exact(g);
    exact.at(2, -1) = expected;
    CHECK(l2_error(u1, exact) <= 1e-12);
}

TEST_CASE("lie step of zero is zero and contracts the L2 norm") {
    const Grid2D g(32);
    const StepperConfig cfg(0.0625, -1);
    CHECK(l2_norm(lie_step(SpectralField(g), cfg)) == 0.0);
    const SpectralField u = random_field(g, 8);
    CHECK(l2_norm(lie_step(u, cfg)) <= l2_norm(u) * (1.0 + 1e-12));
}

TEST_CASE("integrate with zero steps applies only the initial filter") {
    const Grid2D g(16);
    const SpectralField u = random_field(g, 2);
    const StepperConfig filtered(0.25, -1, true);
    const RunResult rf = integrate(u, filtered, 0);
    CHECK(l2_error(rf.final, project(u, FilterSpec(0.25))) == 0.0);
    CHECK(rf.mass_trace.size() == 1);

    const StepperConfig plain(0.25, -1, false);
    const RunResult rp = integrate(u, plain, 0);
    CHECK(l2_error(rp.final, u) == 0.0);
}

TEST_CASE("integrate reproduces the exact plane-wave solution over many steps") {
    const Grid2D g(16);
    const Complex c{0.7, 0.0};
    const SpectralField u0 = plane_wave(g, 2, -1, c);
    const StepperConfig cfg(0.03125, -1);
    const long n = 64;
    const RunResult r = integrate(u0, cfg, n);
    SpectralField exact(g);
    exact.at(2, -1) = c * plane_wave_phase(2, -1, c, cfg.mu, n * cfg.tau);
    CHECK(l2_error(r.final, exact) <= 1e-10);
    CHECK(r.mass_trace.size() == static_cast<size_t>(n) + 1);
}

TEST_CASE("filtered mass trace is nonincreasing on rough random data") {
    const SpectralField u0 = rough(64, 0.5, 2024);
    const StepperConfig cfg(0.015625, -1); // tau = 2^-6
    const RunResult r = integrate(u0, cfg, 64);
    for (size_t i = 1; i < r.mass_trace.size(); ++i)
        CHECK(r.mass_trace[i] <= r.mass_trace[i - 1] * (1.0 + 1e-12));
}

TEST_CASE("unfiltered Lie conserves mass over 1000 steps") {
    const SpectralField u0 = rough(64, 1.0, 99);
    const StepperConfig cfg(0.015625, -1, /*filtered=*/false);
    const RunResult r = integrate(u0, cfg, 1000);
    const double m0 = r.mass_trace.front();
    for (double m : r.mass_trace) CHECK(std::abs(m - m0) <= 1e-11 * m0);
}

TEST_CASE("gauge equivariance of integrate") {
    const Grid2D g(32);
    const SpectralField u0 = rough(32, 0.5, 55);
    const StepperConfig cfg(0.0625, -1);
    const long n = 32;
    const Complex phase = std::polar(1.0, 1.234);

    SpectralField rotated(g);
    for (size_t i = 0; i < u0.coeffs.size(); ++i) rotated.coeffs[i] = phase * u0.coeffs[i];

    const SpectralField a = integrate(rotated, cfg, n).final;
    SpectralField b = integrate(u0, cfg, n).final;
    for (auto& c : b.coeffs) c *= phase;
    CHECK(l2_error(a, b) <= 1e-12 * l2_norm(u0));
}

TEST_CASE("translation equivariance of integrate") {
    const Grid2D g(32);
    const SpectralField u0 = rough(32, 0.5, 77);
    const StepperConfig cfg(0.0625, -1);
    const long n = 100;
    const int j1 = 5, j2 = -3; // grid offset
    const double h = 2.0 * std::numbers::pi / g.size();

    const auto shift = [&](const SpectralField& f) {
        SpectralField out(g);
        for (int k1 = g.min_mode(); k1 <= g.max_mode(); ++k1)
            for (int k2 = g.min_mode(); k2 <= g.max_mode(); ++k2)
                out.at(k1, k2) = f.at(k1, k2) * std::polar(1.0, -h * (k1 * j1 + k2 * j2));
        return out;
    };

    const SpectralField a = integrate(shift(u0), cfg, n).final;
    const SpectralField b = shift(integrate(u0, cfg, n).final);
    CHECK(l2_error(a, b) <= 1e-11 * l2_norm(u0));
}

TEST_CASE("dealiased step is still exact on a low plane wave") {
    const Grid2D g(16);
    const Complex c{0.5, 0.1};
    const SpectralField u0 = plane_wave(g, 1, 1, c);
    const StepperConfig cfg(0.125, -1, true, /*dealias=*/true);
    const SpectralField u1 = lie_step(u0, cfg);
    const Complex expected = c * plane_wave_phase(1, 1, c, cfg.mu, cfg.tau);
    CHECK(std::abs(u1.at(1, 1) - expected) <= 1e-12);
}

TEST_CASE("dealiasing changes rough trajectories only slightly") {
    const SpectralField u0 = rough(32, 1.0, 13);
    const StepperConfig plain(0.015625, -1, true, false);
    const StepperConfig dealiased(0.015625, -1, true, true);
    const SpectralField a = integrate(u0, plain, 16).final;
    const SpectralField b = integrate(u0, dealiased, 16).final;
    CHECK(l2_error(a, b) < 0.1 * l2_norm(u0)); // same dynamics, different aliasing
    CHECK(l2_error(a, b) > 0.0);               // but not bitwise-identical
}

TEST_CASE("integrate rejects negative step counts") {
    const Grid2D g(8);
    CHECK_THROWS_AS(integrate(SpectralField(g), StepperConfig(0.5, -1), -1),
                    std::invalid_argument);
}

TEST_CASE("snapshots are recorded on the requested cadence") {
    const Grid2D g(8);
    const SpectralField u0 = random_field(g, 6);
    const StepperConfig cfg(0.25, -1);
    const RunResult r = integrate(u0, cfg, 8, 4);
    REQUIRE(r.snapshots.size() == 3); // t = 0, 1, 2
    CHECK(r.snapshots[1].first == doctest::Approx(1.0));
    CHECK(r.snapshots[2].first == doctest::Approx(2.0));
}
