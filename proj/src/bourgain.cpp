#include "nls/bourgain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nls/fft.hpp"
#include "nls/norms.hpp"
#include "nls/spectral_ops.hpp"

namespace nls {

namespace {

constexpr double kPi = std::numbers::pi;

// <d_tau(sigma)>^2 as a function of theta = tau*sigma:
// |d_tau|^2 = (2 - 2cos(theta))/tau^2 = (4/tau^2) sin^2(theta/2).
double dtau_bracket_sq(double theta, double tau) {
    const double sn = std::sin(0.5 * theta);
    return 1.0 + 4.0 * sn * sn / (tau * tau);
}

double weight_pow(double base_sq, double expo) {
    return expo == 0.0 ? 1.0 : std::pow(base_sq, expo);
}

// Accumulates sum_m w(theta_m - phi_k)^b |tau * U_m|^2 per mode, where U is
// the length-N spectrum of the supplied per-mode rows. RowFn fills the row
// for one mode before the transform.
template <typename RowFn>
double weighted_sigma_sum(const TimeSequence& seq, const BourgainParams& p, RowFn&& fill_row) {
    const long n_fields = seq.length();
    const int m = seq.grid().size();
    const double tau = seq.tau;

    std::vector<Complex> row(n_fields);
    std::vector<double> theta(n_fields);
    for (long j = 0; j < n_fields; ++j)
        theta[j] = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_fields);

    double total = 0.0;
    for (int i1 = 0; i1 < m; ++i1) {
        const int k1 = seq.grid().mode(i1);
        for (int i2 = 0; i2 < m; ++i2) {
            const int k2 = seq.grid().mode(i2);
            const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            const size_t idx = static_cast<size_t>(i1) * m + i2;

            fill_row(row, idx, ksq);
            fft::transform_rows(row.data(), static_cast<int>(n_fields), 1, /*backward=*/true);

            const double phi = tau * ksq;
            const double kweight = weight_pow(japanese_bracket_sq(k1, k2), p.s);
            double mode_sum = 0.0;
            for (long j = 0; j < n_fields; ++j) {
                const double w = weight_pow(dtau_bracket_sq(theta[j] - phi, tau), p.b);
                mode_sum += w * std::norm(tau * row[j]);
            }
            total += kweight * mode_sum;
        }
    }
    return total / (static_cast<double>(n_fields) * tau);
}

} // namespace

TimeSequence::TimeSequence(double tau_, std::vector<SpectralField> fields_)
    : tau(tau_), fields(std::move(fields_)) {
    if (!(tau > 0.0) || tau > 1.0)
        throw std::invalid_argument("TimeSequence: tau must lie in (0,1]");
    if (fields.empty()) throw std::invalid_argument("TimeSequence: needs at least one field");
    for (const auto& f : fields)
        if (!(f.grid == fields.front().grid))
            throw std::invalid_argument("TimeSequence: fields must share one grid");
}

double bourgain_norm_freq(const TimeSequence& seq, const BourgainParams& p) {
    // e^{i n tau sigma_m} = (-1)^n e^{2 pi i n m / N}: alternate signs, then a
    // plain (+i) transform over n evaluates u~ on the sigma-grid.
    const double total = weighted_sigma_sum(
        seq, p, [&seq](std::vector<Complex>& row, size_t idx, double /*ksq*/) {
            for (size_t n = 0; n < row.size(); ++n) {
                const Complex v = seq.fields[n].coeffs[idx];
                row[n] = (n % 2 == 0) ? v : -v;
            }
        });
    return std::sqrt(total);
}

double bourgain_norm_time(const TimeSequence& seq, const BourgainParams& p) {
    // Twist through the public propagator, then evaluate the twisted
    // transform on the per-mode shifted grid via modulation. The twist and
    // the modulation compute their phases independently, so disagreement
    // with the direct route flags a sign or bookkeeping bug in either.
    std::vector<SpectralField> twisted;
    twisted.reserve(seq.fields.size());
    for (size_t n = 0; n < seq.fields.size(); ++n)
        twisted.push_back(free_flow(seq.fields[n], -static_cast<double>(n) * seq.tau));

    const double total = weighted_sigma_sum(
        seq, p, [&twisted, &seq](std::vector<Complex>& row, size_t idx, double ksq) {
            const double phi = seq.tau * ksq;
            for (size_t n = 0; n < row.size(); ++n) {
                const Complex v =
                    twisted[n].coeffs[idx] * std::polar(1.0, -static_cast<double>(n) * phi);
                row[n] = (n % 2 == 0) ? v : -v;
            }
        });
    return std::sqrt(total);
}

double strichartz_ratio(const TimeSequence& seq, double s, double b1) {
    if (!(s > 0.0)) throw std::invalid_argument("strichartz_ratio: s must be > 0");
    if (!(b1 > 0.5)) throw std::invalid_argument("strichartz_ratio: b1 must be > 1/2");

    const int m = seq.grid().size();
    const FilterSpec filt(seq.tau);
    const double cell = (2.0 * kPi / m) * (2.0 * kPi / m);
    double fourth = 0.0;
    for (const auto& f : seq.fields) {
        const PhysicalField p = to_physical(project(f, filt));
        double local = 0.0;
        for (const auto& v : p.samples) {
            const double a2 = std::norm(v);
            local += a2 * a2;
        }
        fourth += cell * local;
    }
    const double numerator = std::pow(seq.tau * fourth, 0.25);

    const double denominator = bourgain_norm_freq(seq, {s, b1});
    if (denominator == 0.0)
        throw std::domain_error("strichartz_ratio: zero Bourgain norm (degenerate sequence)");
    return numerator / denominator;
}

double linf_embedding_ratio(const TimeSequence& seq, double s, double b) {
    if (!(b > 0.5)) throw std::invalid_argument("linf_embedding_ratio: b must be > 1/2");

    double sup = 0.0;
    for (const auto& f : seq.fields) sup = std::max(sup, hs_norm(f, s));

    const double denominator = bourgain_norm_freq(seq, {s, b});
    if (denominator == 0.0)
        throw std::domain_error("linf_embedding_ratio: zero Bourgain norm (degenerate sequence)");
    return sup / denominator;
}

} // namespace nls
