#ifndef EFFCOND_LATTICE_SUMS_HPP
#define EFFCOND_LATTICE_SUMS_HPP

#include <complex>
#include <vector>

#include "effcond/lattice.hpp"

namespace effcond {

/// Iterated (Eisenstein-ordered) partial sum of S_2: the inner index m1
/// runs to inner_cutoff for every row m2 up to outer_cutoff, origin
/// excluded. Requires inner_cutoff >= outer_cutoff >= 1.
std::complex<double> eisenstein_s2(const Lattice& lattice, long inner_cutoff, long outer_cutoff);

struct S2Result {
    std::complex<double> value;
    double error_estimate;
    long inner_cutoff;   // largest inner cutoff used
    long outer_cutoff;
};

/// S_2 to the requested absolute tolerance: iterated partial sums at
/// doubling inner cutoffs, extrapolated in 1/M1. Throws convergence_error
/// if the cutoff cap is hit first.
S2Result eisenstein_s2_accurate(const Lattice& lattice, double tolerance);

/// Lattice sum S_m = sum over P != 0 of P^-m. Odd m and symmetry-forced
/// zeros are returned exactly; m = 2 uses the Eisenstein order; even
/// m >= 4 uses absolutely convergent square-shell summation.
std::complex<double> lattice_sum(const Lattice& lattice, int m, double tolerance);

/// Immutable cache of S_2..S_max for one lattice.
class LatticeSumTable {
public:
    static LatticeSumTable build(const Lattice& lattice, int max_order, double tolerance);

    const Lattice& lattice() const { return lattice_; }
    int max_order() const { return max_order_; }
    double tolerance() const { return tolerance_; }

    /// S_m for 2 <= m <= max_order; throws std::invalid_argument outside.
    std::complex<double> at(int m) const;

    /// Companion table for the sigma22 extraction: the sums of the
    /// quarter-turned lattice (S_2 -> 2 pi - S_2, S_m -> (-1)^{m/2} S_m).
    LatticeSumTable with_conjugate_axis() const;

private:
    LatticeSumTable(Lattice lattice, int max_order, double tolerance,
                    std::vector<std::complex<double>> values)
        : lattice_(lattice), max_order_(max_order), tolerance_(tolerance),
          values_(std::move(values)) {}

    Lattice lattice_;
    int max_order_;
    double tolerance_;
    std::vector<std::complex<double>> values_;  // values_[m-2] = S_m
};

} // namespace effcond

#endif
