#ifndef EFFCOND_RAYLEIGH_HPP
#define EFFCOND_RAYLEIGH_HPP

#include <complex>
#include <string>
#include <vector>

#include "effcond/lattice_sums.hpp"

namespace effcond {

/// One circular inclusion per cell: radius, concentration f = pi r0^2,
/// conductivity ratio sigma (may be +inf) and contrast rho = (s-1)/(s+1).
struct CompositeParams {
    double r0;
    double f;
    double sigma;
    double rho;

    static CompositeParams from_concentration(double f, double rho);
    static CompositeParams from_radius(double r0, double rho);
    static double rho_from_sigma(double sigma);
    static double sigma_from_rho(double rho);

    /// Throws std::invalid_argument when f reaches the touching bound of
    /// the lattice (within 1e-9) or |rho| > 1.
    void validate(const Lattice& lattice) const;
};

/// Truncated counterpart of the infinite conjugate-linear system
///   alpha_l = rho * sum_m K[l][m] * conj(alpha_m) + delta_{l0},
/// 0 <= l,m <= L, K[l][m] = (-1)^m (l+m+1)!/(l!(m+1)!) S_{l+m+2} r0^{2(m+1)}.
/// The constant forcing enters only the l = 0 row: it is the z^0
/// coefficient of the flux equation.
struct TruncatedSystem {
    int order;                              // L
    double rho;
    double f;
    std::vector<std::complex<double>> coupling;  // (L+1)^2, row-major

    std::complex<double> k(int l, int m) const { return coupling[l * (order + 1) + m]; }
};

struct FluxCoefficients {
    std::vector<std::complex<double>> alpha;  // alpha_0..alpha_L
    double residual;                          // max row defect of the system
};

struct EffectiveTensor {
    double sigma11;
    double sigma12;
    double sigma22;
};

TruncatedSystem build_truncated_system(const LatticeSumTable& sums,
                                       const CompositeParams& params, int order);

/// Direct solve of the realified 2(L+1) x 2(L+1) dense system.
FluxCoefficients solve_direct(const TruncatedSystem& system);

/// Successive approximations alpha <- rho K conj(alpha) + e0 from alpha = e0.
FluxCoefficients solve_iterative(const TruncatedSystem& system, int max_iter = 10000,
                                 double tol = 1e-12);

/// sigma11 - i sigma12 = 1 + 2 rho f alpha_0 from the first solve;
/// coeffs_22 must come from the companion system built on
/// sums.with_conjugate_axis().
EffectiveTensor effective_tensor(const LatticeSumTable& sums, const CompositeParams& params,
                                 const FluxCoefficients& coeffs_11,
                                 const FluxCoefficients& coeffs_22);

/// Convenience: both axes solved directly at truncation L.
EffectiveTensor solve_effective(const LatticeSumTable& sums, const CompositeParams& params,
                                int order, double* residual = nullptr);

struct ConvergenceEntry {
    int order;
    EffectiveTensor tensor;
    double residual;
    bool ok;
    std::string error;
};

std::vector<ConvergenceEntry> convergence_study(const LatticeSumTable& sums,
                                                const CompositeParams& params,
                                                const std::vector<int>& orders);

} // namespace effcond

#endif
