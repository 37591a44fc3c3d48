#ifndef NLS_FFT_HPP
#define NLS_FFT_HPP

#include "nls/field.hpp"

namespace nls {

/// u(x_j) = sum_k uhat_k e^{i<k,x_j>}. Inverse of from_physical.
PhysicalField to_physical(const SpectralField& f);

/// uhat_k = (1/M^2) sum_j u(x_j) e^{-i<k,x_j>}.
SpectralField from_physical(const PhysicalField& p);

namespace fft {

/// In-place forward DFT (sign -i, no normalization) along the last axis of
/// `count` contiguous rows of length n. Used by the sigma-transforms of the
/// Bourgain diagnostics; sign +i for backward=true.
void transform_rows(Complex* data, int n, long count, bool backward);

} // namespace fft

} // namespace nls

#endif
