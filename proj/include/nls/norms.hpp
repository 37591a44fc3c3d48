#ifndef NLS_NORMS_HPP
#define NLS_NORMS_HPP

#include "nls/field.hpp"

namespace nls {

/// (sum_k |uhat_k|^2)^{1/2}. Coefficient-space convention throughout: the
/// continuum 2pi volume factor is omitted everywhere, so ratios and fitted
/// orders are unaffected.
double l2_norm(const SpectralField& f);

/// (sum_k <k>^{2s} |uhat_k|^2)^{1/2}.
double hs_norm(const SpectralField& f, double s);

/// l2_norm(a - b); throws on grid mismatch.
double l2_error(const SpectralField& a, const SpectralField& b);

/// Coefficient-space inner product sum_k a_k conj(b_k).
Complex inner_product(const SpectralField& a, const SpectralField& b);

} // namespace nls

#endif
