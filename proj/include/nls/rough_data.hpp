#ifndef NLS_ROUGH_DATA_HPP
#define NLS_ROUGH_DATA_HPP

#include <cstdint>

#include "nls/field.hpp"

namespace nls {

/// Parameters of the random H^s initial data
///   uhat_k = <k>^{-(s+1)} g_k,   g_k uniform on [-1,1] + i[-1,1],
/// truncated to the grid's mode set.
struct RoughDataSpec {
    double s;
    std::uint64_t seed;
    Grid2D grid;

    RoughDataSpec(double s_, std::uint64_t seed_, const Grid2D& grid_)
        : s(s_), seed(seed_), grid(grid_) {
        if (!(s > 0.0)) throw std::invalid_argument("RoughDataSpec: s must be > 0");
    }
};

SpectralField generate(const RoughDataSpec& spec);

namespace rng {

/// SplitMix64 finalizer; the sole mixing primitive of the data generator.
std::uint64_t mix64(std::uint64_t z);

/// Counter-based draw for mode k: key = seed, counter = packed (k1,k2).
/// Independent of the grid size, so coefficients at shared modes agree
/// bitwise across resolutions. The exact construction is documented in the
/// README together with a reference vector.
Complex uniform_square(std::uint64_t seed, int k1, int k2);

} // namespace rng

} // namespace nls

#endif
