#include "effcond/rayleigh.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "effcond/detail/binomial.hpp"
#include "effcond/errors.hpp"

namespace effcond {

namespace {

using cplx = std::complex<double>;
using detail::binomial;

} // namespace

double CompositeParams::rho_from_sigma(double sigma) {
    if (std::isinf(sigma)) return 1.0;
    if (sigma < 0.0) throw std::invalid_argument("sigma must be nonnegative");
    return (sigma - 1.0) / (sigma + 1.0);
}

double CompositeParams::sigma_from_rho(double rho) {
    if (rho == 1.0) return std::numeric_limits<double>::infinity();
    return (1.0 + rho) / (1.0 - rho);
}

CompositeParams CompositeParams::from_concentration(double f, double rho) {
    if (f < 0.0) throw std::invalid_argument("concentration must be nonnegative");
    if (std::abs(rho) > 1.0) throw std::invalid_argument("contrast must lie in [-1,1]");
    return {std::sqrt(f / std::numbers::pi), f, sigma_from_rho(rho), rho};
}

CompositeParams CompositeParams::from_radius(double r0, double rho) {
    if (r0 < 0.0) throw std::invalid_argument("radius must be nonnegative");
    return from_concentration(std::numbers::pi * r0 * r0, rho);
}

void CompositeParams::validate(const Lattice& lattice) const {
    if (std::abs(rho) > 1.0) throw std::invalid_argument("contrast must lie in [-1,1]");
    const double f_max = lattice.max_concentration();
    if (f > f_max - 1e-9)
        throw std::invalid_argument("concentration " + std::to_string(f) +
                                    " at or beyond the touching bound " + std::to_string(f_max));
}

TruncatedSystem build_truncated_system(const LatticeSumTable& sums,
                                       const CompositeParams& params, int order) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
    const int needed = 2 * order + 2;
    if (sums.max_order() < needed)
        throw std::invalid_argument("sum table covers order " + std::to_string(sums.max_order()) +
                                    " but truncation L=" + std::to_string(order) + " needs " +
                                    std::to_string(needed));
    params.validate(sums.lattice());
    const int n = order + 1;
    TruncatedSystem sys{order, params.rho, params.f, std::vector<cplx>(n * n)};
    const double r0sq = params.r0 * params.r0;
    for (int l = 0; l < n; ++l) {
        double radial = r0sq;  // r0^{2(m+1)}
        for (int m = 0; m < n; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            sys.coupling[l * n + m] =
                sign * binomial(l + m + 1, l) * sums.at(l + m + 2) * radial;
            radial *= r0sq;
        }
    }
    return sys;
}

namespace {

double system_residual(const TruncatedSystem& sys, const std::vector<cplx>& alpha) {
    const int n = sys.order + 1;
    double worst = 0.0;
    for (int l = 0; l < n; ++l) {
        cplx acc = 0.0;
        for (int m = 0; m < n; ++m) acc += sys.k(l, m) * std::conj(alpha[m]);
        const double forcing = (l == 0) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(alpha[l] - sys.rho * acc - forcing));
    }
    return worst;
}

} // namespace

FluxCoefficients solve_direct(const TruncatedSystem& sys) {
    const int n = sys.order + 1;
    // Realify with interleaved layout (Re a_0, Im a_0, Re a_1, ...);
    // conjugation flips the sign of the imaginary blocks.
    Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    // the inhomogeneous term is the constant of the flux equation and
    // enters only the z^0 row
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(2 * n);
    rhs[0] = 1.0;
    for (int l = 0; l < n; ++l) {
        for (int m = 0; m < n; ++m) {
            const double a = sys.rho * sys.k(l, m).real();
            const double b = sys.rho * sys.k(l, m).imag();
            mat(2 * l, 2 * m) -= a;
            mat(2 * l, 2 * m + 1) -= b;
            mat(2 * l + 1, 2 * m) -= b;
            mat(2 * l + 1, 2 * m + 1) += a;
        }
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(mat);
    if (!lu.isInvertible()) throw singular_system_error(sys.rho, sys.f, sys.order);
    const Eigen::VectorXd sol = lu.solve(rhs);
    FluxCoefficients out;
    out.alpha.resize(n);
    for (int l = 0; l < n; ++l) out.alpha[l] = {sol[2 * l], sol[2 * l + 1]};
    out.residual = system_residual(sys, out.alpha);
    return out;
}

FluxCoefficients solve_iterative(const TruncatedSystem& sys, int max_iter, double tol) {
    if (std::abs(sys.rho) > 1.0)
        throw std::invalid_argument("solve_iterative: require |rho| <= 1");
    const int n = sys.order + 1;
    std::vector<cplx> alpha(n, 0.0), next(n);
    alpha[0] = 1.0;
    double delta = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        delta = 0.0;
        for (int l = 0; l < n; ++l) {
            cplx acc = 0.0;
            for (int m = 0; m < n; ++m) acc += sys.k(l, m) * std::conj(alpha[m]);
            next[l] = sys.rho * acc + ((l == 0) ? 1.0 : 0.0);
            delta = std::max(delta, std::abs(next[l] - alpha[l]));
        }
        alpha.swap(next);
        if (delta < tol) return {alpha, system_residual(sys, alpha)};
    }
    throw convergence_error("solve_iterative: no convergence after " + std::to_string(max_iter) +
                                " iterations",
                            alpha.empty() ? cplx{} : alpha[0], delta);
}

EffectiveTensor effective_tensor(const LatticeSumTable&, const CompositeParams& params,
                                 const FluxCoefficients& coeffs_11,
                                 const FluxCoefficients& coeffs_22) {
    const cplx s11 = 1.0 + 2.0 * params.rho * params.f * coeffs_11.alpha.at(0);
    const cplx s22 = 1.0 + 2.0 * params.rho * params.f * coeffs_22.alpha.at(0);
    return {s11.real(), -s11.imag(), s22.real()};
}

EffectiveTensor solve_effective(const LatticeSumTable& sums, const CompositeParams& params,
                                int order, double* residual) {
    const auto c11 = solve_direct(build_truncated_system(sums, params, order));
    const auto c22 = solve_direct(build_truncated_system(sums.with_conjugate_axis(), params, order));
    if (residual) *residual = std::max(c11.residual, c22.residual);
    return effective_tensor(sums, params, c11, c22);
}

std::vector<ConvergenceEntry> convergence_study(const LatticeSumTable& sums,
                                                const CompositeParams& params,
                                                const std::vector<int>& orders) {
    if (orders.empty()) throw std::invalid_argument("convergence_study: no orders given");
    for (std::size_t i = 1; i < orders.size(); ++i)
        if (orders[i] <= orders[i - 1])
            throw std::invalid_argument("convergence_study: orders must be ascending");
    std::vector<ConvergenceEntry> out;
    for (int L : orders) {
        ConvergenceEntry entry{L, {}, 0.0, true, {}};
        try {
            entry.tensor = solve_effective(sums, params, L, &entry.residual);
        } catch (const std::exception& err) {
            entry.ok = false;
            entry.error = err.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace effcond
