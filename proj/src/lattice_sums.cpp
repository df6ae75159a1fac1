#include "effcond/lattice_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "effcond/errors.hpp"

namespace effcond {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr long kMaxInnerCutoff = 1L << 27;
constexpr long kMaxShells = 100000;

using cplx = std::complex<double>;

/// Row m2 of the iterated sum: sum over m1 = -M1..M1 of (m1 w1 + c)^-2
/// with c = m2 omega2. Terms are paired as +-m1; the pair reduces to
/// 2 (c^2 + t) / (c^2 - t)^2 with t = (m1 w1)^2, all real arithmetic.
cplx s2_row(double w1, cplx c, long M1) {
    const double cr = (c * c).real();
    const double ci = (c * c).imag();
    const double ci2 = ci * ci;
    // m1 = 0 term: 1/c^2
    const double d0 = cr * cr + ci2;
    double acc_re = cr / d0;
    double acc_im = -ci / d0;
    const double w2 = w1 * w1;
    double t = 0.0;
    for (long m1 = 1; m1 <= M1; ++m1) {
        t += w2 * (2 * m1 - 1);
        const double u = cr - t;
        const double A = u * u - ci2;       // Re (c^2 - t)^2
        const double B = 2.0 * u * ci;      // Im (c^2 - t)^2
        const double s = u * u + ci2;
        const double inv = 1.0 / (s * s);
        const double nr = 2.0 * (cr + t);
        const double ni = 2.0 * ci;
        acc_re += (nr * A + ni * B) * inv;
        acc_im += (ni * A - nr * B) * inv;
    }
    return {acc_re, acc_im};
}

/// Polynomial extrapolation to h = 0 (Neville) of values sampled at h_i.
cplx neville_at_zero(const std::vector<double>& h, const std::vector<cplx>& v) {
    std::vector<cplx> t = v;
    const std::size_t n = h.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i)
            t[i] = t[i + 1] + (t[i + 1] - t[i]) * (h[i + k] / (h[i] - h[i + k]));
    return t[0];
}

long rows_for_tolerance(const Lattice& lat, double tol) {
    // After the (extrapolated) inner limit, row m2 decays like
    // (2 pi / w1)^2 exp(-lambda m2), lambda = 2 pi Im(omega2) / w1.
    const double lambda = 2.0 * kPi * lat.omega2.imag() / lat.omega1;
    const double amp = 4.0 * kPi * kPi / (lat.omega1 * lat.omega1);
    const double target = tol / 10.0 * (1.0 - std::exp(-lambda));
    const double need = std::log(8.0 * amp / target) / lambda;
    return std::clamp<long>(static_cast<long>(std::ceil(need)), 3, 400);
}

/// Minimum of |x w1 + y w2| over the boundary max(|x|,|y|) = 1. Points
/// on square shell n then satisfy |P| >= n * h.
double shell_unit_distance(const Lattice& lat) {
    const cplx w1(lat.omega1, 0.0);
    const cplx w2 = lat.omega2;
    auto edge_min = [](cplx a, cplx b) {
        // min over s in [-1,1] of |s a + b|
        const double aa = std::norm(a);
        double s = aa > 0 ? -(a.real() * b.real() + a.imag() * b.imag()) / aa : 0.0;
        s = std::clamp(s, -1.0, 1.0);
        return std::min({std::abs(s * a + b), std::abs(a + b), std::abs(-a + b)});
    };
    return std::min(edge_min(w1, w2), edge_min(w2, w1));
}

/// Adds shells n = n_lo..n_hi of sum P^-m (m even >= 4), exploiting the
/// P <-> -P pairing: half of each shell is visited and doubled.
cplx add_shells(const Lattice& lat, int m, long n_lo, long n_hi) {
    auto ipow_inv = [m](cplx p) {
        cplx base = 1.0 / p;
        cplx r = 1.0;
        int e = m;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    };
    cplx acc = 0.0;
    for (long n = n_lo; n <= n_hi; ++n) {
        cplx shell = 0.0;
        for (long m1 = -n; m1 <= n; ++m1) shell += ipow_inv(lat.point(m1, n));
        for (long m2 = 1; m2 < n; ++m2) {
            shell += ipow_inv(lat.point(n, m2));
            shell += ipow_inv(lat.point(-n, m2));
        }
        shell += ipow_inv(lat.point(n, 0));
        acc += 2.0 * shell;
    }
    return acc;
}

cplx shell_sum(const Lattice& lat, int m, double tol) {
    const double h = shell_unit_distance(lat);
    cplx partial = 0.0;
    std::vector<double> hs;
    std::vector<cplx> vals;
    cplx prev_extrap = 0.0;
    bool have_prev = false;
    long n_done = 0;
    for (long n_hi = 16; n_hi <= kMaxShells; n_hi *= 2) {
        partial += add_shells(lat, m, n_done + 1, n_hi);
        n_done = n_hi;
        const double tail = 8.0 * std::pow(h, -m) * std::pow(double(n_hi), 2 - m) / (m - 2);
        if (tail < tol) return partial;
        hs.push_back(1.0 / double(n_hi));
        vals.push_back(partial);
        if (hs.size() >= 3) {
            const cplx extrap = neville_at_zero(hs, vals);
            if (have_prev && std::abs(extrap - prev_extrap) < 0.5 * tol) return extrap;
            prev_extrap = extrap;
            have_prev = true;
        }
    }
    const double achieved =
        have_prev ? std::abs(prev_extrap - vals[vals.size() - 2]) : std::abs(partial);
    throw convergence_error("lattice_sum: shell summation did not reach tolerance for m=" +
                                std::to_string(m),
                            have_prev ? prev_extrap : partial, achieved);
}

} // namespace

std::complex<double> eisenstein_s2(const Lattice& lat, long inner_cutoff, long outer_cutoff) {
    if (outer_cutoff < 1 || inner_cutoff < outer_cutoff)
        throw std::invalid_argument("eisenstein_s2: require inner_cutoff >= outer_cutoff >= 1");
    const double w1 = lat.omega1;
    const double w2sq = w1 * w1;
    double row0 = 0.0;
    for (long m1 = inner_cutoff; m1 >= 1; --m1) row0 += 1.0 / (w2sq * m1 * m1);
    cplx total(2.0 * row0, 0.0);
    for (long m2 = 1; m2 <= outer_cutoff; ++m2)
        total += 2.0 * s2_row(w1, double(m2) * lat.omega2, inner_cutoff);
    return total;
}

S2Result eisenstein_s2_accurate(const Lattice& lat, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    const long M2 = rows_for_tolerance(lat, tol);
    std::vector<double> hs;
    std::vector<cplx> vals;
    cplx prev = 0.0;
    bool have_prev = false;
    for (long M1 = std::max<long>(4 * M2, 1024); M1 <= kMaxInnerCutoff; M1 *= 2) {
        hs.push_back(1.0 / double(M1));
        vals.push_back(eisenstein_s2(lat, M1, M2));
        if (hs.size() >= 2) {
            const cplx extrap = neville_at_zero(hs, vals);
            const double delta = std::abs(extrap - prev);
            if (have_prev && delta < 0.5 * tol) return {extrap, delta, M1, M2};
            prev = extrap;
            have_prev = true;
        }
    }
    throw convergence_error("eisenstein_s2: inner cutoff cap reached", prev,
                            std::abs(prev - vals.back()));
}

std::complex<double> lattice_sum(const Lattice& lat, int m, double tol) {
    if (m < 2) throw std::invalid_argument("lattice_sum: m must be >= 2");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    if (m == 2) return eisenstein_s2_accurate(lat, tol).value;
    if (m % 2 == 1) return 0.0;
    // Rotation symmetry: pi/2 for the square lattice, pi/3 for the hexagonal.
    if (lat.kind == LatticeKind::square && m % 4 != 0) return 0.0;
    if (lat.kind == LatticeKind::hexagonal && m % 6 != 0) return 0.0;
    return shell_sum(lat, m, tol);
}

LatticeSumTable LatticeSumTable::build(const Lattice& lat, int max_order, double tol) {
    if (max_order < 2) throw std::invalid_argument("LatticeSumTable: max_order must be >= 2");
    std::vector<cplx> values;
    values.reserve(max_order - 1);
    for (int m = 2; m <= max_order; ++m) values.push_back(lattice_sum(lat, m, tol));
    return LatticeSumTable(lat, max_order, tol, std::move(values));
}

std::complex<double> LatticeSumTable::at(int m) const {
    if (m < 2 || m > max_order_)
        throw std::invalid_argument("LatticeSumTable: order " + std::to_string(m) +
                                    " outside table (max " + std::to_string(max_order_) + ")");
    return values_[m - 2];
}

LatticeSumTable LatticeSumTable::with_conjugate_axis() const {
    // Quarter-turn of the lattice: S_2 picks up the 2 pi correction of the
    // conditionally convergent sum, absolutely convergent orders transform
    // as S_m -> (-1)^{m/2} S_m.
    LatticeSumTable copy = *this;
    copy.values_[0] = 2.0 * kPi - copy.values_[0];
    for (int m = 6; m <= copy.max_order_; m += 4) copy.values_[m - 2] = -copy.values_[m - 2];
    return copy;
}

} // namespace effcond
