#ifndef NLS_BOURGAIN_HPP
#define NLS_BOURGAIN_HPP

#include <vector>

#include "nls/field.hpp"

namespace nls {

/// A finite trajectory u_n at t_n = n*tau, n = 0..N-1, extended by zero
/// outside. The diagnostics below treat the N-point sigma-grid
///   sigma_m = -pi/tau + 2*pi*m/(N*tau),  m = 0..N-1,
/// with measure d(sigma)/(2*pi) as their definition of the sigma-integral;
/// zero-padding in n refines the grid without changing b = 0 values.
struct TimeSequence {
    double tau;
    std::vector<SpectralField> fields;

    TimeSequence(double tau_, std::vector<SpectralField> fields_);

    long length() const { return static_cast<long>(fields.size()); }
    const Grid2D& grid() const { return fields.front().grid; }
};

struct BourgainParams {
    double s = 0.0;
    double b = 0.0;
};

/// Discrete Bourgain norm || <k>^s <d_tau(sigma - |k|^2)>^b u~(sigma,k) ||,
/// with u~(sigma,k) = tau * sum_n uhat_n(k) e^{i n tau sigma} and
/// d_tau(sigma) = (e^{i tau sigma} - 1)/tau, evaluated on the sigma-grid.
/// At (s,b) = (0,0) this equals the l2_tau L2 norm exactly (Parseval).
double bourgain_norm_freq(const TimeSequence& seq, const BourgainParams& p);

/// The same norm via the twisted sequence f_n = e^{-i n tau Laplace} u_n,
/// weighting <k>^s on modes and <d_tau>^b on the sigma-side of f. The
/// sigma-grid for mode k is shifted by -|k|^2 (the change of variables
/// under which the twisted transform satisfies f~(sigma,k) =
/// u~(sigma+|k|^2,k)), so both routes compute the same norm and must agree
/// to rounding; the routes share no phase arithmetic.
double bourgain_norm_time(const TimeSequence& seq, const BourgainParams& p);

/// || P_tau u_n ||_{l4_tau L4} / || u_n ||_{X^{s,b1}}, the sampled constant
/// of the discrete L4 Strichartz estimate. Requires s > 0, b1 > 1/2.
/// The L4 quadrature uses uniform weight (2*pi/M)^2 per sample.
double strichartz_ratio(const TimeSequence& seq, double s, double b1);

/// max_n ||u_n||_{H^s} / ||u_n||_{X^{s,b}}, the sampled constant of the
/// l-infinity embedding. Requires b > 1/2.
double linf_embedding_ratio(const TimeSequence& seq, double s, double b);

} // namespace nls

#endif
