#ifndef NLS_STEPPER_HPP
#define NLS_STEPPER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "nls/spectral_ops.hpp"

namespace nls {

/// Parameters of one splitting trajectory. mu = -1 is defocusing.
struct StepperConfig {
    double tau;
    int mu;
    bool filtered = true;
    bool dealias = false;

    StepperConfig(double tau_, int mu_, bool filtered_ = true, bool dealias_ = false)
        : tau(tau_), mu(mu_), filtered(filtered_), dealias(dealias_) {
        if (!(tau > 0.0) || tau > 1.0)
            throw std::invalid_argument("StepperConfig: tau must lie in (0,1]");
        if (mu != -1 && mu != 1)
            throw std::invalid_argument("StepperConfig: mu must be -1 or +1");
    }
};

struct RunResult {
    SpectralField final;
    std::vector<std::pair<double, SpectralField>> snapshots;
    std::vector<double> mass_trace; // L2 norm per step, length n_steps + 1
};

/// Pointwise nonlinear subflow: w(x) -> e^{i mu tau |w(x)|^2} w(x), evaluated
/// on the physical grid and returned in coefficient space. With dealias the
/// exponential map is evaluated on a 3M/2 zero-padded grid (2/3 rule).
SpectralField nonlinear_flow(const SpectralField& f, double tau, int mu, bool dealias = false);

/// One step of the splitting scheme:
///   filtered:   u -> e^{i tau Laplace} P( e^{i mu tau |P u|^2} P u ),  P the filter
///   unfiltered: same composition with P replaced by the identity.
/// The trailing filter and the free flow fuse into one multiplier pass.
SpectralField lie_step(const SpectralField& u, const StepperConfig& cfg);

/// Applies the filter once to u0 (filtered case), then n_steps Lie steps.
/// Records the L2 norm after every step; aborts with a diagnostic if the
/// trajectory leaves the finite range.
RunResult integrate(const SpectralField& u0, const StepperConfig& cfg, long n_steps,
                    std::optional<long> snapshot_every = std::nullopt);

} // namespace nls

#endif
