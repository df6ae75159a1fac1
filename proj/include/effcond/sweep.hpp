#ifndef EFFCOND_SWEEP_HPP
#define EFFCOND_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "effcond/lattice.hpp"

namespace effcond {

enum class Method { solver, series, cma, perrins, keller, matched_perfect, matched_contrast };

Method method_from_name(const std::string& name);
std::string to_string(Method method);

struct SweepConfig {
    LatticeKind lattice_kind = LatticeKind::square;
    std::optional<double> aspect;
    std::vector<Method> methods;
    double rho = 1.0;
    double f_min = 0.0;
    double f_max = 0.0;
    int steps = 1;              // grid has steps+1 points, f_min..f_max inclusive
    int truncation = 12;        // solver L
    int series_order = 12;      // series N
    double tolerance = 1e-10;   // lattice-sum tolerance
    std::string output_path;    // empty = stdout only

    void validate() const;      // throws std::invalid_argument
};

enum class RowStatus { ok, domain_error, convergence_failure };

std::string to_string(RowStatus status);

struct ResultRow {
    double f = 0.0;
    Method method = Method::cma;
    // Numeric fields are meaningful only when status == ok.
    double sigma11 = 0.0;
    double sigma12 = 0.0;
    double sigma22 = 0.0;
    std::optional<int> order;       // truncation L or series order N
    std::optional<double> residual;
    RowStatus status = RowStatus::ok;
    std::string message;
};

/// Evaluates every (f, method) pair of the grid, f major, method minor.
/// Per-row failures are recorded in the row, never aborting the sweep.
std::vector<ResultRow> run_sweep(const SweepConfig& config);

/// CSV with the fixed header f,method,sigma11,sigma12,sigma22,order,
/// residual,status; 17 significant digits, LF line endings.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
void write_csv(const std::vector<ResultRow>& rows, std::ostream& os);

/// Companion matplotlib script next to the CSV (path + ".plot.py").
void write_plot_script(const std::string& csv_path);

bool all_rows_ok(const std::vector<ResultRow>& rows);

} // namespace effcond

#endif
