#include "effcond/series.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "effcond/detail/binomial.hpp"

namespace effcond {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

} // namespace

BiPolynomial::BiPolynomial(int order_f, LatticeKind tag)
    : order_(order_f), tag_(tag), c_((order_f + 1) * (order_f + 1)) {
    if (order_f < 0) throw std::invalid_argument("series order must be >= 0");
}

cplx BiPolynomial::coeff(int j, int k) const {
    if (j < 0 || j > order_ || k < 0 || k > order_)
        throw std::invalid_argument("coefficient index out of range");
    return c_[j * (order_ + 1) + k];
}

void BiPolynomial::add(int j, int k, cplx value) {
    if (j < 0 || j > order_ || k < 0 || k > j)
        throw std::invalid_argument("monomial (f^" + std::to_string(j) + ", rho^" +
                                    std::to_string(k) + ") outside the triangle");
    c_[j * (order_ + 1) + k] += value;
}

cplx BiPolynomial::evaluate(double rho, double f) const {
    cplx acc = 0.0;
    for (int j = order_; j >= 0; --j) {
        cplx row = 0.0;
        for (int k = j; k >= 0; --k) row = row * rho + c_[j * (order_ + 1) + k];
        acc = acc * f + row;
    }
    return acc;
}

void BiPolynomial::write_coefficients(std::ostream& os) const {
    char line[96];
    for (int j = 0; j <= order_; ++j)
        for (int k = 0; k <= j; ++k) {
            const cplx v = coeff(j, k);
            std::snprintf(line, sizeof line, "%d,%d,%.17g,%.17g\n", j, k, v.real(), v.imag());
            os << line;
        }
}

cplx chain_weight(const LatticeSumTable& sums, int m_from, int m_to) {
    if (m_from < 1 || m_to < 1) throw std::invalid_argument("chain indices must be >= 1");
    const int order = 2 * (m_from + m_to - 1);
    const double factor = detail::binomial(2 * m_from + 2 * m_to - 3, 2 * m_from - 1);
    return factor * sums.at(order);
}

int required_sum_order(int order_f) {
    // Chain elements m contribute f-exponent 2m-1 against the budget
    // order_f - 2; the largest lattice-sum index any admissible weight can
    // touch is the largest even number <= budget + 1.
    const int budget = order_f - 2;
    if (budget < 0) return 2;
    const int top = budget + 1;
    return std::max(2, top - (top % 2));
}

BiPolynomial expand_effective_series(const LatticeSumTable& sums, int order_f) {
    if (order_f > kMaxSeriesOrder)
        throw std::invalid_argument("series order capped at " + std::to_string(kMaxSeriesOrder));
    if (sums.max_order() < required_sum_order(order_f))
        throw std::invalid_argument("sum table covers order " + std::to_string(sums.max_order()) +
                                    " but f-order " + std::to_string(order_f) + " needs " +
                                    std::to_string(required_sum_order(order_f)));
    BiPolynomial poly(order_f, sums.lattice().kind);
    poly.add(0, 0, 1.0);
    if (order_f >= 1) poly.add(1, 1, 2.0);
    if (order_f >= 2) poly.add(2, 2, 2.0 * sums.at(2) / kPi);
    const int budget = order_f - 2;
    if (budget < 1) return poly;

    std::vector<double> pi_pow(budget + 2, 1.0);
    for (std::size_t i = 1; i < pi_pow.size(); ++i) pi_pow[i] = pi_pow[i - 1] * kPi;

    // Transfer DP over chain prefixes (m_1,...): state = (last index m,
    // accumulated f-exponent e, chain length k), value = sum over all
    // prefixes of the weight products. Chains are never enumerated.
    const int m_max = (budget + 1) / 2;
    auto idx = [&](int m, int e) { return (m - 1) * (budget + 1) + e; };
    std::vector<std::vector<cplx>> states(m_max * (budget + 1),
                                          std::vector<cplx>(budget + 1, 0.0));
    for (int m1 = 1; m1 <= m_max; ++m1) {
        const cplx open = chain_weight(sums, 1, m1);
        if (open != 0.0) states[idx(m1, 2 * m1 - 1)][1] = open;
    }
    for (int e = 1; e <= budget; ++e) {
        for (int m = 1; m <= m_max; ++m) {
            auto& vals = states[idx(m, e)];
            bool live = false;
            for (int k = 1; k <= e && !live; ++k) live = vals[k] != 0.0;
            if (!live) continue;
            const cplx close = chain_weight(sums, m, 1);
            for (int k = 1; k <= e; ++k) {
                if (vals[k] == 0.0) continue;
                if (close != 0.0)
                    poly.add(e + 2, k + 2, 2.0 * vals[k] * close / pi_pow[e + 1]);
                for (int m2 = 1; m2 <= m_max; ++m2) {
                    const int e2 = e + 2 * m2 - 1;
                    if (e2 > budget) break;
                    const cplx w = chain_weight(sums, m, m2);
                    if (w != 0.0) states[idx(m2, e2)][k + 1] += vals[k] * w;
                }
            }
        }
    }
    return poly;
}

BiPolynomial sigma22_series(const LatticeSumTable& sums, int order_f) {
    return expand_effective_series(sums.with_conjugate_axis(), order_f);
}

std::vector<double> hexagonal_coefficients(int order_f) {
    if (order_f > kMaxSeriesOrder)
        throw std::invalid_argument("series order capped at " + std::to_string(kMaxSeriesOrder));
    const auto lattice = make_lattice(LatticeKind::hexagonal);
    const auto sums = LatticeSumTable::build(lattice, required_sum_order(order_f), 1e-10);
    const auto poly = expand_effective_series(sums, order_f);
    std::vector<double> out(order_f + 1, 0.0);
    for (int j = 0; j <= order_f; ++j)
        for (int k = 0; k <= j; ++k) out[j] += poly.coeff(j, k).real();
    return out;
}

} // namespace effcond
