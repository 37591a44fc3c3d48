#ifndef NLS_SNAPSHOT_HPP
#define NLS_SNAPSHOT_HPP

#include <filesystem>

#include "nls/field.hpp"

namespace nls {

/// Binary field snapshot. Layout: magic "NLS2", little-endian u32 M,
/// u32 layout tag (0 = k-space row-major, k2 fastest, DFT order), then
/// M^2 (re, im) pairs of little-endian float64. Round trips bitwise.
void write_snapshot(const std::filesystem::path& path, const SpectralField& f);
SpectralField read_snapshot(const std::filesystem::path& path);

/// Writes via a temp file in the same directory plus an atomic rename, so a
/// failed run never leaves a truncated snapshot behind.
void write_snapshot_atomic(const std::filesystem::path& path, const SpectralField& f);

/// Same temp-and-rename discipline for text outputs (CSV, JSON reports).
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace nls

#endif
