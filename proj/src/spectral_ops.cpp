#include "nls/spectral_ops.hpp"

#include <cmath>

namespace nls {

namespace {

// Shared mode loop; Fn maps (k1,k2,uhat) -> uhat'.
template <typename Fn>
SpectralField map_modes(const SpectralField& f, Fn&& fn) {
    const int m = f.grid.size();
    SpectralField out(f.grid);
    size_t idx = 0;
    for (int i1 = 0; i1 < m; ++i1) {
        const int k1 = f.grid.mode(i1);
        for (int i2 = 0; i2 < m; ++i2, ++idx) {
            out.coeffs[idx] = fn(k1, f.grid.mode(i2), f.coeffs[idx]);
        }
    }
    return out;
}

} // namespace

SpectralField apply_multiplier(const SpectralField& f,
                               const std::function<Complex(int, int)>& m) {
    return map_modes(f, [&m](int k1, int k2, Complex v) { return m(k1, k2) * v; });
}

SpectralField project(const SpectralField& f, const FilterSpec& filt) {
    const double c = filt.cutoff();
    return map_modes(f, [c](int k1, int k2, Complex v) {
        return (std::abs(k1) <= c && std::abs(k2) <= c) ? v : Complex{0.0, 0.0};
    });
}

SpectralField free_flow(const SpectralField& f, double t) {
    return map_modes(f, [t](int k1, int k2, Complex v) {
        const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
        return std::polar(1.0, -t * ksq) * v;
    });
}

SpectralField free_flow_projected(const SpectralField& f, double t, const FilterSpec& filt) {
    const double c = filt.cutoff();
    return map_modes(f, [t, c](int k1, int k2, Complex v) {
        if (std::abs(k1) > c || std::abs(k2) > c) return Complex{0.0, 0.0};
        const double ksq = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
        return std::polar(1.0, -t * ksq) * v;
    });
}

} // namespace nls
