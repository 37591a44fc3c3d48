#ifndef NLS_SPECTRAL_OPS_HPP
#define NLS_SPECTRAL_OPS_HPP

#include <functional>
#include <stdexcept>

#include "nls/field.hpp"

namespace nls {

/// Time-step-dependent frequency filter. Keeps mode k iff
/// max(|k1|,|k2|) <= tau^{-1/2}; the boundary is included (the cutoff is the
/// characteristic function of the closed square). Ties can occur only when
/// tau^{-1/2} is an integer.
struct FilterSpec {
    double tau;

    explicit FilterSpec(double tau_) : tau(tau_) {
        if (!(tau > 0.0) || tau > 1.0)
            throw std::invalid_argument("FilterSpec: tau must lie in (0,1]");
    }

    double cutoff() const { return 1.0 / std::sqrt(tau); }

    bool keeps(int k1, int k2) const {
        const double c = cutoff();
        return std::abs(k1) <= c && std::abs(k2) <= c;
    }
};

/// Applies a diagonal Fourier multiplier uhat_k -> m(k1,k2) * uhat_k.
/// Shared engine behind the filter, the free flow and the <k>-weights.
SpectralField apply_multiplier(const SpectralField& f,
                               const std::function<Complex(int, int)>& m);

/// The frequency projector: zeroes every mode outside the filter square.
SpectralField project(const SpectralField& f, const FilterSpec& filt);

/// Free Schroedinger propagator e^{it Laplace}: uhat_k -> e^{-it|k|^2} uhat_k.
SpectralField free_flow(const SpectralField& f, double t);

/// Filter and free flow fused into one multiplier pass,
/// uhat_k -> chi(k) e^{-it|k|^2} uhat_k. One pass per Lie step.
SpectralField free_flow_projected(const SpectralField& f, double t, const FilterSpec& filt);

/// <k>^2 = 1 + k1^2 + k2^2.
inline double japanese_bracket_sq(int k1, int k2) {
    return 1.0 + static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
}

} // namespace nls

#endif
