#ifndef EFFCOND_CLOSED_FORMS_HPP
#define EFFCOND_CLOSED_FORMS_HPP

#include <string>

namespace effcond {

/// Touching concentration of the hexagonal array, pi/sqrt(12).
double hexagonal_percolation_threshold();

enum class FormulaId { cma, perrins_hex, keller_hex, matched_perfect_hex, matched_contrast_hex };

FormulaId formula_from_name(const std::string& name);
std::string to_string(FormulaId id);

/// (1 + f rho) / (1 - f rho); throws std::domain_error at the pole.
double clausius_mossotti(double f, double rho);

/// Perrins-McPhedran approximation for the hexagonal array.
double perrins_mcphedran_hex(double f, double rho);

/// Inverse-square-root percolation law for the hexagonal array, rho = 1.
/// Valid on [0, f_c).
double keller_hex(double f);

/// Matched low-concentration/percolation expression for rho = 1.
double matched_perfect_hex(double f);

/// Matched expression in both f and rho; requires |rho f| < f_c.
double matched_contrast_hex(double f, double rho);

/// Dispatch by id; keller and matched_perfect ignore rho.
double evaluate_formula(FormulaId id, double f, double rho);

} // namespace effcond

#endif
