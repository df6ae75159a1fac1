#include "effcond/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "effcond/closed_forms.hpp"
#include "effcond/errors.hpp"
#include "effcond/rayleigh.hpp"
#include "effcond/series.hpp"

namespace effcond {

Method method_from_name(const std::string& name) {
    if (name == "solver") return Method::solver;
    if (name == "series") return Method::series;
    if (name == "cma") return Method::cma;
    if (name == "perrins") return Method::perrins;
    if (name == "keller") return Method::keller;
    if (name == "matched-perfect") return Method::matched_perfect;
    if (name == "matched-contrast") return Method::matched_contrast;
    throw std::invalid_argument("unknown method '" + name + "'");
}

std::string to_string(Method method) {
    switch (method) {
    case Method::solver: return "solver";
    case Method::series: return "series";
    case Method::cma: return "cma";
    case Method::perrins: return "perrins";
    case Method::keller: return "keller";
    case Method::matched_perfect: return "matched-perfect";
    case Method::matched_contrast: return "matched-contrast";
    }
    return "?";
}

std::string to_string(RowStatus status) {
    switch (status) {
    case RowStatus::ok: return "ok";
    case RowStatus::domain_error: return "domain-error";
    case RowStatus::convergence_failure: return "convergence-failure";
    }
    return "?";
}

void SweepConfig::validate() const {
    if (methods.empty()) throw std::invalid_argument("method set must be nonempty");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (f_min < 0.0 || f_max < f_min)
        throw std::invalid_argument("require 0 <= f_min <= f_max");
    if (std::abs(rho) > 1.0) throw std::invalid_argument("contrast must lie in [-1,1]");
    if (truncation < 0) throw std::invalid_argument("truncation must be >= 0");
    if (series_order < 0 || series_order > kMaxSeriesOrder)
        throw std::invalid_argument("series order out of range");
    make_lattice(lattice_kind, aspect);  // rejects bad kind/aspect combinations
    // f_max past the touching bound is allowed: affected rows report a
    // per-row domain error instead
}

namespace {

bool is_hex_only(Method m) {
    return m == Method::perrins || m == Method::keller || m == Method::matched_perfect ||
           m == Method::matched_contrast;
}

/// Shared per-sweep state, built once and reused across grid points.
struct SweepContext {
    Lattice lattice;
    std::unique_ptr<LatticeSumTable> solver_sums;
    std::unique_ptr<LatticeSumTable> solver_sums22;
    std::unique_ptr<BiPolynomial> series11;
    std::unique_ptr<BiPolynomial> series22;
    std::string setup_error;  // non-empty: solver/series rows fail with it

    SweepContext(const SweepConfig& cfg) : lattice(make_lattice(cfg.lattice_kind, cfg.aspect)) {
        bool want_solver = false, want_series = false;
        for (Method m : cfg.methods) {
            want_solver |= m == Method::solver;
            want_series |= m == Method::series;
        }
        try {
            if (want_solver) {
                solver_sums = std::make_unique<LatticeSumTable>(
                    LatticeSumTable::build(lattice, 2 * cfg.truncation + 2, cfg.tolerance));
                solver_sums22 =
                    std::make_unique<LatticeSumTable>(solver_sums->with_conjugate_axis());
            }
            if (want_series) {
                const auto sums = LatticeSumTable::build(
                    lattice, required_sum_order(cfg.series_order), cfg.tolerance);
                series11 = std::make_unique<BiPolynomial>(
                    expand_effective_series(sums, cfg.series_order));
                series22 =
                    std::make_unique<BiPolynomial>(sigma22_series(sums, cfg.series_order));
            }
        } catch (const std::exception& err) {
            setup_error = err.what();
        }
    }
};

ResultRow evaluate_row(const SweepContext& ctx, const SweepConfig& cfg, double f, Method method) {
    ResultRow row;
    row.f = f;
    row.method = method;
    try {
        if ((method == Method::solver || method == Method::series) && !ctx.setup_error.empty())
            throw convergence_error(ctx.setup_error, 0.0, 0.0);
        if (is_hex_only(method) && ctx.lattice.kind != LatticeKind::hexagonal)
            throw std::domain_error(to_string(method) + " is defined for the hexagonal lattice");
        switch (method) {
        case Method::solver: {
            const auto params = CompositeParams::from_concentration(f, cfg.rho);
            const auto c11 = solve_direct(build_truncated_system(*ctx.solver_sums, params,
                                                                 cfg.truncation));
            const auto c22 = solve_direct(build_truncated_system(*ctx.solver_sums22, params,
                                                                 cfg.truncation));
            const auto tensor = effective_tensor(*ctx.solver_sums, params, c11, c22);
            row.sigma11 = tensor.sigma11;
            row.sigma12 = tensor.sigma12;
            row.sigma22 = tensor.sigma22;
            row.order = cfg.truncation;
            row.residual = std::max(c11.residual, c22.residual);
            break;
        }
        case Method::series: {
            const auto v11 = ctx.series11->evaluate(cfg.rho, f);
            const auto v22 = ctx.series22->evaluate(cfg.rho, f);
            row.sigma11 = v11.real();
            row.sigma12 = -v11.imag();
            row.sigma22 = v22.real();
            row.order = cfg.series_order;
            break;
        }
        case Method::cma: {
            const double v = clausius_mossotti(f, cfg.rho);
            row.sigma11 = row.sigma22 = v;
            break;
        }
        case Method::perrins: {
            const double v = perrins_mcphedran_hex(f, cfg.rho);
            row.sigma11 = row.sigma22 = v;
            break;
        }
        case Method::keller: {
            const double v = keller_hex(f);
            row.sigma11 = row.sigma22 = v;
            break;
        }
        case Method::matched_perfect: {
            const double v = matched_perfect_hex(f);
            row.sigma11 = row.sigma22 = v;
            break;
        }
        case Method::matched_contrast: {
            const double v = matched_contrast_hex(f, cfg.rho);
            row.sigma11 = row.sigma22 = v;
            break;
        }
        }
    } catch (const convergence_error& err) {
        row = ResultRow{f, method};
        row.status = RowStatus::convergence_failure;
        row.message = err.what();
    } catch (const std::exception& err) {
        row = ResultRow{f, method};
        row.status = RowStatus::domain_error;
        row.message = err.what();
    }
    return row;
}

} // namespace

std::vector<ResultRow> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    SweepContext ctx(cfg);
    std::vector<ResultRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.steps + 1) * cfg.methods.size());
    const double df = (cfg.f_max - cfg.f_min) / cfg.steps;
    for (int i = 0; i <= cfg.steps; ++i) {
        const double f = (i == cfg.steps) ? cfg.f_max : cfg.f_min + i * df;
        for (Method method : cfg.methods) rows.push_back(evaluate_row(ctx, cfg, f, method));
    }
    return rows;
}

void write_csv(const std::vector<ResultRow>& rows, std::ostream& os) {
    os << "f,method,sigma11,sigma12,sigma22,order,residual,status\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& row : rows) {
        os << num(row.f) << ',' << to_string(row.method) << ',';
        if (row.status == RowStatus::ok)
            os << num(row.sigma11) << ',' << num(row.sigma12) << ',' << num(row.sigma22);
        else
            os << ",,";
        os << ',';
        if (row.status == RowStatus::ok && row.order) os << *row.order;
        os << ',';
        if (row.status == RowStatus::ok && row.residual) os << num(*row.residual);
        os << ',' << to_string(row.status) << '\n';
    }
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
    write_csv(rows, os);
    if (!os.good()) throw std::runtime_error("write failed for '" + path + "'");
}

void write_plot_script(const std::string& csv_path) {
    const std::string path = csv_path + ".plot.py";
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file '" + path + "'");
    os << "#!/usr/bin/env python3\n"
          "# Plots sigma11(f) per method from the CSV written next to this script.\n"
          "import csv\n"
          "import matplotlib.pyplot as plt\n"
          "\n"
          "curves = {}\n"
          "with open(" << '"' << csv_path << '"' << ") as fh:\n"
          "    for row in csv.DictReader(fh):\n"
          "        if row[\"status\"] != \"ok\":\n"
          "            continue\n"
          "        curves.setdefault(row[\"method\"], ([], []))\n"
          "        curves[row[\"method\"]][0].append(float(row[\"f\"]))\n"
          "        curves[row[\"method\"]][1].append(float(row[\"sigma11\"]))\n"
          "for name, (fs, sigmas) in sorted(curves.items()):\n"
          "    plt.plot(fs, sigmas, label=name)\n"
          "plt.xlabel(\"f\")\n"
          "plt.ylabel(\"sigma11\")\n"
          "plt.legend()\n"
          "plt.show()\n";
}

bool all_rows_ok(const std::vector<ResultRow>& rows) {
    for (const auto& row : rows)
        if (row.status != RowStatus::ok) return false;
    return true;
}

} // namespace effcond
