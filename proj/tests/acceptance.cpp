// End-to-end acceptance checks. Each check prints a single PASS/FAIL line;
// the exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "effcond/closed_forms.hpp"
#include "effcond/lattice_sums.hpp"
#include "effcond/rayleigh.hpp"
#include "effcond/series.hpp"
#include "effcond/sweep.hpp"

using namespace effcond;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
    std::printf("%s  %2d  %-34s %s\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. S_2 = pi for the square and hexagonal lattices.
void check_s2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sq = eisenstein_s2_accurate(make_lattice(LatticeKind::square), 1e-8);
    const auto hex = eisenstein_s2_accurate(make_lattice(LatticeKind::hexagonal), 1e-8);
    const double elapsed = seconds_since(t0);
    const double err =
        std::max(std::abs(sq.value - cplx(kPi, 0.0)), std::abs(hex.value - cplx(kPi, 0.0)));
    char buf[128];
    std::snprintf(buf, sizeof buf, "max |S_2 - pi| = %.2e, %.2f s", err, elapsed);
    report(1, "S_2 = pi (square, hexagonal)", err < 1e-6 && elapsed < 5.0, buf);
}

// 2. S_2(a) + S_2(1/a) = 2 pi for rectangular lattices.
void check_rect_duality() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double a : {2.0, 4.0}) {
        const auto va = eisenstein_s2_accurate(make_lattice(LatticeKind::rectangular, a), 1e-8);
        const auto vb =
            eisenstein_s2_accurate(make_lattice(LatticeKind::rectangular, 1.0 / a), 1e-8);
        worst = std::max(worst, std::abs(va.value + vb.value - cplx(2.0 * kPi, 0.0)));
    }
    const double elapsed = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "max defect = %.2e, %.2f s", worst, elapsed);
    report(2, "rectangular S_2 duality", worst < 2e-6 && elapsed < 10.0, buf);
}

// 3. Hexagonal rho = 1 coefficients through f^26.
void check_hex_series(const std::vector<double>& coeffs, double elapsed) {
    static const std::vector<double> printed = {
        1, 2, 2, 2, 2, 2, 2,
        2.1508443464271876, 2.301688692854377,  2.452533039281566,  2.6033773857087543,
        2.754221732135944,  2.9050660785631326, 3.0674404324522926, 3.2411917947659736,
        3.426320165504177,  3.6228255446669055, 3.8307079322541555, 4.049967328265928,
        4.441422739726373,  4.845994396051242,  5.264540375940583,  5.69791875809444,
        6.146987621212864,  6.6126050439959,    7.135044602470776,  7.700073986554016};
    bool ok = coeffs.size() == 27 && elapsed < 60.0;
    double worst = 0.0;
    if (ok) {
        for (int j = 1; j <= 6; ++j) ok = ok && std::abs(coeffs[j] - 2.0) < 1e-10;
        ok = ok && std::abs(coeffs[7] - 2.1508443464271876) < 1e-8;
        for (int j = 0; j <= 26; ++j) worst = std::max(worst, std::abs(coeffs[j] - printed[j]));
        ok = ok && worst < 1e-6;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "max deviation = %.2e, %.2f s", worst, elapsed);
    report(3, "hexagonal series through f^26", ok, buf);
}

// 4. Contrast coefficients of the hexagonal expansion.
void check_contrast_coeffs(const LatticeSumTable& hex) {
    const auto poly = expand_effective_series(hex, 11);
    struct Ref {
        int j, k;
        double value;
    };
    const Ref refs[] = {{7, 3, 0.150844}, {8, 4, 0.301688}, {9, 5, 0.452532},
                        {10, 6, 0.603376}, {11, 7, 0.75422}};
    double worst = 0.0;
    for (const auto& r : refs)
        worst = std::max(worst, std::abs(poly.coeff(r.j, r.k).real() - r.value));
    char buf[128];
    std::snprintf(buf, sizeof buf, "max deviation = %.2e", worst);
    report(4, "hexagonal contrast coefficients", worst < 5e-6, buf);
}

// 5. The f^12 Taylor expansion of the Perrins expression at rho = 1.
void check_perrins_consistency(const LatticeSumTable& hex, const std::vector<double>& series) {
    // 1 + 2f / D(f), D = 1 - f - c6 f^6 - c12 f^12 + O(f^18), expanded by
    // power-series division. Only c6 reaches the first 12 coefficients; its
    // full-precision value is 5 S_6^2 / pi^6 = 0.07542217..., printed as
    // 0.075422 (six digits, which alone would cost ~2e-6 at f^12).
    const double s6 = hex.at(6).real();
    const double c6 = 5.0 * s6 * s6 / std::pow(kPi, 6.0);
    if (std::abs(c6 - 0.075422) > 5e-7) {
        report(5, "perrins Taylor coefficients", false, "printed constant mismatch");
        return;
    }
    std::vector<double> den(13, 0.0);
    den[0] = 1.0;
    den[1] = -1.0;
    den[6] = -c6;
    den[12] = -0.000076;
    std::vector<double> inv(13, 0.0);
    inv[0] = 1.0;
    for (int n = 1; n <= 12; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k) acc += den[k] * inv[n - k];
        inv[n] = -acc;
    }
    double worst = 0.0;
    for (int n = 1; n <= 12; ++n) {
        const double taylor = 2.0 * inv[n - 1];
        worst = std::max(worst, std::abs(taylor - series[n]));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "max deviation = %.2e", worst);
    report(5, "perrins Taylor coefficients", worst < 1e-6, buf);
}

// 6. Truncated solver against the series on the square lattice.
void check_solver_vs_series() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sums = LatticeSumTable::build(make_lattice(LatticeKind::square), 26, 1e-10);
    const auto poly = expand_effective_series(sums, 12);
    double worst = 0.0;
    for (double f : {0.1, 0.3, 0.5}) {
        const auto params = CompositeParams::from_concentration(f, 0.5);
        const auto tensor = solve_effective(sums, params, 12);
        const double series_val = poly.evaluate(0.5, f).real();
        worst = std::max(worst, std::abs(tensor.sigma11 / series_val - 1.0));
    }
    const double elapsed = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "max rel diff = %.2e, %.2f s", worst, elapsed);
    report(6, "solver vs series, square lattice", worst < 1e-5 && elapsed < 5.0, buf);
}

// 7. Keller-Dykhne duality, both as a coefficient identity and for the solver.
void check_duality(const LatticeSumTable& hex) {
    double worst_poly = 0.0;
    struct Case {
        const LatticeSumTable* sums;
        int order;
    };
    const auto square = LatticeSumTable::build(make_lattice(LatticeKind::square), 26, 1e-10);
    for (const auto& c : {Case{&hex, 26}, Case{&square, 12}}) {
        const auto poly = expand_effective_series(*c.sums, c.order);
        for (int j = 1; j <= c.order; ++j)
            for (int k = 0; k <= j; ++k) {
                cplx acc = 0.0;
                for (int j1 = 0; j1 <= j; ++j1)
                    for (int k1 = 0; k1 <= std::min(j1, k); ++k1) {
                        const int j2 = j - j1, k2 = k - k1;
                        if (k2 > j2) continue;
                        const double sign = (k2 % 2 == 0) ? 1.0 : -1.0;
                        acc += poly.coeff(j1, k1) * sign * poly.coeff(j2, k2);
                    }
                worst_poly = std::max(worst_poly, std::abs(acc));
            }
    }
    double worst_solver = 0.0;
    for (double f : {0.2, 0.35, 0.5})
        for (double rho : {0.4, 0.8, 1.0}) {
            const auto plus = solve_effective(
                square, CompositeParams::from_concentration(f, rho), 12);
            const auto minus = solve_effective(
                square, CompositeParams::from_concentration(f, -rho), 12);
            worst_solver = std::max(worst_solver, std::abs(plus.sigma11 * minus.sigma11 - 1.0));
        }
    char buf[128];
    std::snprintf(buf, sizeof buf, "poly defect = %.2e, solver defect = %.2e", worst_poly,
                  worst_solver);
    report(7, "Keller-Dykhne duality", worst_poly < 1e-9 && worst_solver < 1e-4, buf);
}

// 8. Endpoints of the matched expressions.
void check_matched_endpoints() {
    const double fc = hexagonal_percolation_threshold();
    const double at_zero = std::abs(matched_perfect_hex(0.0) - 1.0);
    const double f = fc - 1e-5;
    const double ratio = std::abs(matched_perfect_hex(f) / keller_hex(f) - 1.0);
    bool exact_one = true;
    for (double rho : {-1.0, 0.3, 1.0}) exact_one = exact_one && matched_contrast_hex(0.0, rho) == 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "|m(0)-1| = %.2e, |m/k - 1| = %.2e", at_zero, ratio);
    report(8, "matched-asymptotics endpoints", at_zero < 1e-3 && ratio < 1e-2 && exact_one, buf);
}

// 9. Ordering and divergence of the closed forms near the threshold.
void check_figure_content() {
    SweepConfig cfg;
    cfg.lattice_kind = LatticeKind::hexagonal;
    cfg.methods = {Method::perrins, Method::matched_contrast, Method::matched_perfect};
    cfg.rho = 1.0;
    cfg.f_min = 0.8;
    cfg.f_max = hexagonal_percolation_threshold() - 1e-6;
    cfg.steps = 20;
    const auto rows = run_sweep(cfg);
    bool ordering = true;
    double perrins_max = 0.0, matched_last = 0.0, matched_first = 0.0;
    for (std::size_t i = 0; i < rows.size(); i += 3) {
        if (rows[i].status != RowStatus::ok || rows[i + 1].status != RowStatus::ok ||
            rows[i + 2].status != RowStatus::ok) {
            ordering = false;
            break;
        }
        // with the printed six-digit constants the two curves cross near
        // f = 0.885; the strict ordering holds from there up to f_c
        if (rows[i].f >= 0.89) ordering = ordering && rows[i + 1].sigma11 > rows[i].sigma11;
        perrins_max = std::max(perrins_max, rows[i].sigma11);
        if (i == 0) matched_first = rows[i + 2].sigma11;
        matched_last = rows[i + 2].sigma11;
    }
    const bool diverges = matched_last > 10.0 * matched_first && matched_last > 10.0 * perrins_max;
    char buf[128];
    std::snprintf(buf, sizeof buf, "perrins <= %.1f, matched reaches %.1f", perrins_max,
                  matched_last);
    report(9, "near-threshold ordering and divergence", ordering && diverges, buf);
}

// 10. The transfer DP against explicit chain enumeration.
struct ChainOracle {
    const LatticeSumTable& sums;
    BiPolynomial& poly;
    const std::vector<double>& pi_pow;
    int budget;

    void descend(int last, int e, int k, cplx weight) const {
        if (k >= 1) {
            const cplx close = chain_weight(sums, last, 1);
            if (close != 0.0) poly.add(e + 2, k + 2, 2.0 * weight * close / pi_pow[e + 1]);
        }
        for (int next = 1; e + 2 * next - 1 <= budget; ++next) {
            const cplx w = chain_weight(sums, last, next);
            if (w == 0.0) continue;
            descend(next, e + 2 * next - 1, k + 1, weight * w);
        }
    }
};

void check_dp_oracle(const LatticeSumTable& hex) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto square = LatticeSumTable::build(make_lattice(LatticeKind::square), 20, 1e-10);
    double worst = 0.0;
    for (const auto* sums : {&square, &hex}) {
        const int order = 10;
        BiPolynomial brute(order, sums->lattice().kind);
        brute.add(0, 0, 1.0);
        brute.add(1, 1, 2.0);
        brute.add(2, 2, 2.0 * sums->at(2) / kPi);
        std::vector<double> pi_pow(order, 1.0);
        for (std::size_t i = 1; i < pi_pow.size(); ++i) pi_pow[i] = pi_pow[i - 1] * kPi;
        ChainOracle oracle{*sums, brute, pi_pow, order - 2};
        oracle.descend(1, 0, 0, 1.0);
        const auto dp = expand_effective_series(*sums, order);
        for (int j = 0; j <= order; ++j)
            for (int k = 0; k <= j; ++k)
                worst = std::max(worst, std::abs(dp.coeff(j, k) - brute.coeff(j, k)));
    }
    const double elapsed = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof buf, "max deviation = %.2e, %.2f s", worst, elapsed);
    report(10, "DP vs chain enumeration", worst < 1e-12 && elapsed < 10.0, buf);
}

} // namespace

int main() {
    check_s2();
    check_rect_duality();

    const auto t_series = std::chrono::steady_clock::now();
    const auto hex_sums = LatticeSumTable::build(make_lattice(LatticeKind::hexagonal), 26, 1e-10);
    const auto hex_series = hexagonal_coefficients(26);
    check_hex_series(hex_series, seconds_since(t_series));

    check_contrast_coeffs(hex_sums);
    check_perrins_consistency(hex_sums, hex_series);
    check_solver_vs_series();
    check_duality(hex_sums);
    check_matched_endpoints();
    check_figure_content();
    check_dp_oracle(hex_sums);

    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
