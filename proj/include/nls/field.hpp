#ifndef NLS_FIELD_HPP
#define NLS_FIELD_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "nls/grid.hpp"

namespace nls {

using Complex = std::complex<double>;

/// Fourier-coefficient representation of a function on the torus.
///
/// coeffs is row-major over (k1,k2) in DFT order with k2 fastest, i.e.
/// coeffs[index_of(k1)*M + index_of(k2)]. This matches the binary snapshot
/// layout tag 0. Fields are treated as immutable values: library operations
/// never mutate their inputs.
struct SpectralField {
    Grid2D grid;
    std::vector<Complex> coeffs;

    explicit SpectralField(const Grid2D& g) : grid(g), coeffs(g.total()) {}

    SpectralField(const Grid2D& g, std::vector<Complex> c) : grid(g), coeffs(std::move(c)) {
        if (static_cast<long>(coeffs.size()) != grid.total())
            throw std::invalid_argument("SpectralField: coefficient count does not match grid");
    }

    Complex& at(int k1, int k2) {
        return coeffs[static_cast<size_t>(grid.index_of(k1)) * grid.size() + grid.index_of(k2)];
    }
    Complex at(int k1, int k2) const {
        return coeffs[static_cast<size_t>(grid.index_of(k1)) * grid.size() + grid.index_of(k2)];
    }
};

/// Point values u(x_j) at x_j = 2pi j / M, row-major with the second
/// coordinate fastest (same layout as SpectralField).
struct PhysicalField {
    Grid2D grid;
    std::vector<Complex> samples;

    explicit PhysicalField(const Grid2D& g) : grid(g), samples(g.total()) {}

    PhysicalField(const Grid2D& g, std::vector<Complex> v) : grid(g), samples(std::move(v)) {
        if (static_cast<long>(samples.size()) != grid.total())
            throw std::invalid_argument("PhysicalField: sample count does not match grid");
    }
};

inline bool all_finite(const SpectralField& f) {
    for (const auto& c : f.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

} // namespace nls

#endif
