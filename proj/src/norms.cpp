#include "nls/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "nls/spectral_ops.hpp"

namespace nls {

double l2_norm(const SpectralField& f) {
    double sum = 0.0;
    for (const auto& c : f.coeffs) sum += std::norm(c);
    return std::sqrt(sum);
}

double hs_norm(const SpectralField& f, double s) {
    const int m = f.grid.size();
    double sum = 0.0;
    size_t idx = 0;
    for (int i1 = 0; i1 < m; ++i1) {
        const int k1 = f.grid.mode(i1);
        for (int i2 = 0; i2 < m; ++i2, ++idx) {
            const int k2 = f.grid.mode(i2);
            sum += std::pow(japanese_bracket_sq(k1, k2), s) * std::norm(f.coeffs[idx]);
        }
    }
    return std::sqrt(sum);
}

double l2_error(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("l2_error: grid mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < a.coeffs.size(); ++i) sum += std::norm(a.coeffs[i] - b.coeffs[i]);
    return std::sqrt(sum);
}

Complex inner_product(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("inner_product: grid mismatch");
    Complex sum{0.0, 0.0};
    for (size_t i = 0; i < a.coeffs.size(); ++i) sum += a.coeffs[i] * std::conj(b.coeffs[i]);
    return sum;
}

} // namespace nls
