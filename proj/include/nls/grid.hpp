#ifndef NLS_GRID_HPP
#define NLS_GRID_HPP

#include <stdexcept>
#include <string>

namespace nls {

/// Mode-index geometry for the M x M pseudospectral grid on [0,2pi)^2.
///
/// Modes run over K(M) = { k = (k1,k2) : -M/2 <= kj <= M/2-1 } in standard
/// DFT order: array index i maps to mode i for i < M/2 and i-M otherwise.
/// The single unmatched mode -M/2 is kept and treated like any other.
class Grid2D {
public:
    explicit Grid2D(int m) : m_(m) {
        if (m < 2 || m % 2 != 0)
            throw std::invalid_argument("Grid2D: M must be even and >= 2, got " +
                                        std::to_string(m));
    }

    int size() const { return m_; }        // points per dimension
    long total() const { return static_cast<long>(m_) * m_; }

    int mode(int index) const { return index < m_ / 2 ? index : index - m_; }
    int index_of(int k) const { return k >= 0 ? k : k + m_; }

    int min_mode() const { return -m_ / 2; }
    int max_mode() const { return m_ / 2 - 1; }

    bool operator==(const Grid2D&) const = default;

private:
    int m_;
};

} // namespace nls

#endif
