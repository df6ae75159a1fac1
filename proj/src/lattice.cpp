#include "effcond/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace effcond {

std::string to_string(LatticeKind kind) {
    switch (kind) {
    case LatticeKind::square: return "square";
    case LatticeKind::hexagonal: return "hexagonal";
    case LatticeKind::rectangular: return "rectangular";
    case LatticeKind::general: return "general";
    }
    return "?";
}

double Lattice::max_radius() const {
    // Nearest nonzero lattice point among the surrounding shell.
    double best = std::abs(std::complex<double>(omega1, 0.0));
    for (long m2 = -1; m2 <= 1; ++m2)
        for (long m1 = -1; m1 <= 1; ++m1) {
            if (m1 == 0 && m2 == 0) continue;
            best = std::min(best, std::abs(point(m1, m2)));
        }
    return 0.5 * best;
}

double Lattice::max_concentration() const {
    const double r = max_radius();
    return std::numbers::pi * r * r;
}

Lattice make_lattice(LatticeKind kind, std::optional<double> aspect) {
    const bool needs_aspect = kind == LatticeKind::rectangular || kind == LatticeKind::general;
    if (needs_aspect != aspect.has_value())
        throw std::invalid_argument(needs_aspect ? "lattice kind requires an aspect"
                                                 : "aspect only valid for rectangular/general");
    switch (kind) {
    case LatticeKind::square:
        return {kind, 1.0, {0.0, 1.0}, 1.0};
    case LatticeKind::hexagonal: {
        // omega1^2 sin(pi/3) = 1, omega2 = omega1 exp(i pi/3)
        const double w1 = std::sqrt(2.0 / std::sqrt(3.0));
        return {kind, w1, w1 * std::polar(1.0, std::numbers::pi / 3.0), 1.0};
    }
    case LatticeKind::rectangular:
    case LatticeKind::general: {
        const double a = *aspect;
        if (!(a > 0.0)) throw std::invalid_argument("aspect must be positive");
        const double w1 = std::sqrt(a);
        return {kind, w1, {0.0, 1.0 / w1}, a};
    }
    }
    throw std::invalid_argument("unknown lattice kind");
}

} // namespace effcond
