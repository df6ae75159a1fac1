#include "effcond/closed_forms.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace effcond {

namespace {

constexpr double kPi = std::numbers::pi;

// Published decimal constants, kept together so they can be audited in
// one place. All are exact as printed in their sources.
namespace constants {

// Perrins-McPhedran hexagonal-array approximation.
constexpr double perrins_f6 = 0.075422;
constexpr double perrins_f12_inner = 1.060283;
constexpr double perrins_f12 = 0.000076;

// Singular prefactor alpha(f) of the matched rho = 1 expression.
constexpr double alpha_inv_sqrt = 4.82231;
constexpr double alpha_const = -5.79784;
constexpr double alpha_sqrt = 2.13365;
constexpr double alpha_linear = -0.328432;

// Numerator F and denominator G polynomials of the matched expression.
constexpr std::array<double, 14> matched_num = {
    1.49313,  1.30576,  0.383574, 0.467713, 0.471121, 0.510435, 0.256682,
    0.434917, 0.813868, 0.961464, 0.317194, 0.377055, -1.2022,  -0.931575};
constexpr std::array<double, 14> matched_den = {
    1.49313, 1.30576, 0.383574, 0.394949, 0.4479,   0.5034,   0.3033,
    0.2715,  0.7328,  0.827239, 0.25509,  0.239752, -1.26489, -1.0};

// Contrast-matched expression: U(f, rho) and W(f, rho) = U(f, -rho).
constexpr double u_const = 26.4332;
constexpr double u_rho1 = 11.8598;
constexpr double u_rho3_f3 = 2.10888;
constexpr double u_rho3_f7 = 1.99365;
constexpr double u_rho5_f5 = 0.457218;
constexpr double u_rho5_f9 = 1.59231;
constexpr double u_rho7_f7 = -0.232667;
constexpr double u_rho7_f11 = 1.44959;
constexpr double u_rho9_f9 = -0.660339;
constexpr double u_rho11_f11 = -1.0;

} // namespace constants

double polyval(const std::array<double, 14>& coeffs, double f) {
    double acc = 0.0;
    for (int i = 13; i >= 0; --i) acc = acc * f + coeffs[i];
    return acc;
}

} // namespace

double hexagonal_percolation_threshold() { return kPi / std::sqrt(12.0); }

FormulaId formula_from_name(const std::string& name) {
    if (name == "cma") return FormulaId::cma;
    if (name == "perrins") return FormulaId::perrins_hex;
    if (name == "keller") return FormulaId::keller_hex;
    if (name == "matched-perfect") return FormulaId::matched_perfect_hex;
    if (name == "matched-contrast") return FormulaId::matched_contrast_hex;
    throw std::invalid_argument("unknown formula '" + name + "'");
}

std::string to_string(FormulaId id) {
    switch (id) {
    case FormulaId::cma: return "cma";
    case FormulaId::perrins_hex: return "perrins";
    case FormulaId::keller_hex: return "keller";
    case FormulaId::matched_perfect_hex: return "matched-perfect";
    case FormulaId::matched_contrast_hex: return "matched-contrast";
    }
    return "?";
}

double clausius_mossotti(double f, double rho) {
    const double x = f * rho;
    if (x == 1.0) throw std::domain_error("clausius_mossotti: pole at f rho = 1");
    return (1.0 + x) / (1.0 - x);
}

double perrins_mcphedran_hex(double f, double rho) {
    using namespace constants;
    const double r2 = rho * rho;
    const double f6 = f * f * f * f * f * f;
    const double f12 = f6 * f6;
    const double inner = 1.0 - perrins_f12_inner * r2 * f12;
    if (inner == 0.0) throw std::domain_error("perrins_mcphedran_hex: inner pole");
    const double den = 1.0 - f * rho - perrins_f6 * r2 * f6 / inner - perrins_f12 * r2 * f12;
    if (den == 0.0) throw std::domain_error("perrins_mcphedran_hex: pole");
    return 1.0 + 2.0 * f * rho / den;
}

double keller_hex(double f) {
    const double fc = hexagonal_percolation_threshold();
    if (f < 0.0 || f >= fc)
        throw std::domain_error("keller_hex: f must lie in [0, f_c)");
    const double prefactor = std::pow(3.0, 0.25) * std::pow(kPi, 1.5) / std::sqrt(2.0);
    return prefactor / std::sqrt(fc - f);
}

double matched_perfect_hex(double f) {
    using namespace constants;
    const double fc = hexagonal_percolation_threshold();
    if (f < 0.0 || f >= fc)
        throw std::domain_error("matched_perfect_hex: f must lie in [0, f_c)");
    const double d = fc - f;
    const double alpha =
        alpha_inv_sqrt / std::sqrt(d) + alpha_const + alpha_sqrt * std::sqrt(d) + alpha_linear * d;
    const double den = polyval(matched_den, f);
    if (den == 0.0) throw std::domain_error("matched_perfect_hex: vanishing denominator");
    return alpha * polyval(matched_num, f) / den;
}

double matched_contrast_hex(double f, double rho) {
    using namespace constants;
    const double fc = hexagonal_percolation_threshold();
    if (f < 0.0) throw std::domain_error("matched_contrast_hex: f must be nonnegative");
    if (std::abs(rho * f) >= fc)
        throw std::domain_error("matched_contrast_hex: |rho f| must stay below f_c");
    auto poly_u = [&](double r) {
        const double rf = r * f;
        const double f4 = f * f * f * f;
        double acc = u_const + u_rho1 * rf;
        double p = rf * rf * rf;  // (rho f)^3
        acc += p * (u_rho3_f3 + u_rho3_f7 * f4);
        p *= rf * rf;
        acc += p * (u_rho5_f5 + u_rho5_f9 * f4);
        p *= rf * rf;
        acc += p * (u_rho7_f7 + u_rho7_f11 * f4);
        p *= rf * rf;
        acc += p * u_rho9_f9;
        p *= rf * rf;
        acc += p * u_rho11_f11;
        return acc;
    };
    const double w = poly_u(-rho);
    if (w == 0.0) throw std::domain_error("matched_contrast_hex: vanishing denominator");
    const double x = rho * f / fc;
    const double star = std::sqrt((1.0 + x) / (1.0 - x));
    return star * poly_u(rho) / w;
}

double evaluate_formula(FormulaId id, double f, double rho) {
    switch (id) {
    case FormulaId::cma: return clausius_mossotti(f, rho);
    case FormulaId::perrins_hex: return perrins_mcphedran_hex(f, rho);
    case FormulaId::keller_hex: return keller_hex(f);
    case FormulaId::matched_perfect_hex: return matched_perfect_hex(f);
    case FormulaId::matched_contrast_hex: return matched_contrast_hex(f, rho);
    }
    throw std::invalid_argument("unknown formula id");
}

} // namespace effcond
