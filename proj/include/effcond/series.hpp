#ifndef EFFCOND_SERIES_HPP
#define EFFCOND_SERIES_HPP

#include <complex>
#include <ostream>
#include <vector>

#include "effcond/lattice_sums.hpp"

namespace effcond {

/// Truncated double series in contrast rho and concentration f:
/// sum over j <= order_f, k <= j of c(j,k) rho^k f^j, approximating
/// sigma11 - i sigma12.
class BiPolynomial {
public:
    BiPolynomial(int order_f, LatticeKind tag);

    int order_f() const { return order_; }
    LatticeKind lattice_tag() const { return tag_; }

    std::complex<double> coeff(int f_degree, int rho_degree) const;
    void add(int f_degree, int rho_degree, std::complex<double> value);

    /// Horner evaluation at (rho, f). f past the touching bound is allowed
    /// (the series is evaluated as-is).
    std::complex<double> evaluate(double rho, double f) const;

    /// Plain-text export, one line `j,k,re,im` per stored monomial.
    void write_coefficients(std::ostream& os) const;

private:
    int order_;
    LatticeKind tag_;
    std::vector<std::complex<double>> c_;  // (order+1)^2 dense
};

/// Transfer weight s_{m_to}^{(m_from)} =
/// (2 m_from + 2 m_to - 3)! / ((2 m_from - 1)! (2 m_to - 2)!) * S_{2(m_from+m_to-1)}.
std::complex<double> chain_weight(const LatticeSumTable& sums, int m_from, int m_to);

/// Sum-table order needed to expand up to f^order_f.
int required_sum_order(int order_f);

/// The exact effective-conductivity series, truncated at f^order_f.
BiPolynomial expand_effective_series(const LatticeSumTable& sums, int order_f);

/// Companion series for sigma22 (S_2 -> 2 pi - S_2 throughout).
BiPolynomial sigma22_series(const LatticeSumTable& sums, int order_f);

/// Coefficients of f^0..f^N of the rho = 1 specialization on the
/// hexagonal lattice.
std::vector<double> hexagonal_coefficients(int order_f);

constexpr int kMaxSeriesOrder = 40;

} // namespace effcond

#endif
