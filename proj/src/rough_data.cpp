#include "nls/rough_data.hpp"

#include <cmath>

#include "nls/spectral_ops.hpp"

namespace nls {
namespace rng {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

double to_unit_interval(std::uint64_t bits) {
    // Top 53 bits -> [0,1).
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}
} // namespace

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Complex uniform_square(std::uint64_t seed, int k1, int k2) {
    const std::uint64_t counter =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(k1)) << 32) |
        static_cast<std::uint64_t>(static_cast<std::uint32_t>(k2));
    const std::uint64_t base = mix64(seed ^ mix64(counter));
    const double re = -1.0 + 2.0 * to_unit_interval(mix64(base + kGolden));
    const double im = -1.0 + 2.0 * to_unit_interval(mix64(base + 2 * kGolden));
    return {re, im};
}

} // namespace rng

SpectralField generate(const RoughDataSpec& spec) {
    const int m = spec.grid.size();
    SpectralField out(spec.grid);
    const double exponent = -(spec.s + 1.0) / 2.0; // power of <k>^2
    size_t idx = 0;
    for (int i1 = 0; i1 < m; ++i1) {
        const int k1 = spec.grid.mode(i1);
        for (int i2 = 0; i2 < m; ++i2, ++idx) {
            const int k2 = spec.grid.mode(i2);
            const double weight = std::pow(japanese_bracket_sq(k1, k2), exponent);
            out.coeffs[idx] = weight * rng::uniform_square(spec.seed, k1, k2);
        }
    }
    return out;
}

} // namespace nls
