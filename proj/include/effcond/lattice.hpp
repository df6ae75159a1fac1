#ifndef EFFCOND_LATTICE_HPP
#define EFFCOND_LATTICE_HPP

#include <complex>
#include <optional>
#include <string>

namespace effcond {

enum class LatticeKind { square, hexagonal, rectangular, general };

std::string to_string(LatticeKind kind);

/// Fundamental period pair of a doubly periodic lattice, normalized so the
/// unit cell has area omega1 * Im(omega2) = 1. Immutable after construction.
struct Lattice {
    LatticeKind kind;
    double omega1;                 // real, > 0
    std::complex<double> omega2;   // Im > 0
    double aspect;                 // 1 for square/hexagonal

    /// Lattice point m1*omega1 + m2*omega2.
    std::complex<double> point(long m1, long m2) const {
        return {m1 * omega1 + m2 * omega2.real(), m2 * omega2.imag()};
    }

    /// Half the nearest-neighbor distance: the largest admissible disk radius.
    double max_radius() const;

    /// Touching bound on the concentration f = pi r0^2.
    double max_concentration() const;

    bool isotropic() const { return kind == LatticeKind::square || kind == LatticeKind::hexagonal; }
};

/// Area-1 lattice for the given kind. `aspect` is required for rectangular
/// and general kinds (rectangular(a): omega1 = sqrt(a), omega2 = i/sqrt(a))
/// and must be absent otherwise.
Lattice make_lattice(LatticeKind kind, std::optional<double> aspect = std::nullopt);

} // namespace effcond

#endif
