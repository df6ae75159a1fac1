// Command-line front end: lattice-sum tables, single solves, series
// coefficient export, closed-form evaluation, and method-comparison
// sweeps written as CSV.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "effcond/closed_forms.hpp"
#include "effcond/errors.hpp"
#include "effcond/lattice_sums.hpp"
#include "effcond/rayleigh.hpp"
#include "effcond/series.hpp"
#include "effcond/sweep.hpp"

namespace {

struct LatticeOpts {
    std::string kind = "square";
    std::optional<double> aspect;
};

struct ContrastOpts {
    std::optional<std::string> sigma;  // "inf" accepted
    std::optional<double> rho;
};

void add_lattice_options(CLI::App* cmd, LatticeOpts& opts) {
    cmd->add_option("--lattice", opts.kind, "square | hexagonal | rectangular | general")
        ->default_val("square");
    cmd->add_option("--aspect", opts.aspect, "aspect ratio (rectangular/general only)");
}

effcond::Lattice build_lattice(const LatticeOpts& opts) {
    std::string kind = opts.kind;
    if (kind == "hex") kind = "hexagonal";
    if (kind == "square") return effcond::make_lattice(effcond::LatticeKind::square);
    if (kind == "hexagonal") return effcond::make_lattice(effcond::LatticeKind::hexagonal);
    if (kind == "rectangular")
        return effcond::make_lattice(effcond::LatticeKind::rectangular, opts.aspect);
    if (kind == "general")
        return effcond::make_lattice(effcond::LatticeKind::general, opts.aspect);
    throw CLI::ValidationError("--lattice", "unknown lattice kind '" + opts.kind + "'");
}

void add_contrast_options(CLI::App* cmd, ContrastOpts& opts) {
    auto* sigma = cmd->add_option("--sigma", opts.sigma,
                                  "inclusion/matrix conductivity ratio ('inf' accepted)");
    auto* rho = cmd->add_option("--rho", opts.rho, "contrast parameter in [-1,1]");
    sigma->excludes(rho);
    rho->excludes(sigma);
}

double resolve_rho(const ContrastOpts& opts) {
    if (opts.rho) {
        if (std::abs(*opts.rho) > 1.0)
            throw CLI::ValidationError("--rho", "contrast must lie in [-1,1]");
        return *opts.rho;
    }
    if (opts.sigma) {
        if (*opts.sigma == "inf")
            return 1.0;
        double value = 0.0;
        try {
            value = std::stod(*opts.sigma);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--sigma", "expected a number or 'inf'");
        }
        return effcond::CompositeParams::rho_from_sigma(value);
    }
    throw CLI::RequiredError("--sigma or --rho");
}

int run_sums(const LatticeOpts& lat_opts, int max_order, double tol,
             const std::string& output) {
    const auto lattice = build_lattice(lat_opts);
    const auto table = effcond::LatticeSumTable::build(lattice, max_order, tol);
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!output.empty()) {
        file.open(output, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file '" + output + "'");
        os = &file;
    }
    char line[96];
    for (int m = 2; m <= max_order; ++m) {
        const auto s = table.at(m);
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g\n", m, s.real(), s.imag());
        *os << line;
    }
    return 0;
}

int run_solve(const LatticeOpts& lat_opts, const ContrastOpts& contrast, double f,
              int truncation, double tol) {
    const auto lattice = build_lattice(lat_opts);
    const auto params = effcond::CompositeParams::from_concentration(f, resolve_rho(contrast));
    const auto sums = effcond::LatticeSumTable::build(lattice, 2 * truncation + 2, tol);
    double residual = 0.0;
    const auto tensor = effcond::solve_effective(sums, params, truncation, &residual);
    std::printf("sigma11 = %.12g\nsigma12 = %.12g\nsigma22 = %.12g\nresidual = %.3g\n",
                tensor.sigma11, tensor.sigma12, tensor.sigma22, residual);
    return 0;
}

int run_series(const LatticeOpts& lat_opts, int order, double tol, const std::string& axis,
               const std::string& output) {
    const auto lattice = build_lattice(lat_opts);
    const auto sums =
        effcond::LatticeSumTable::build(lattice, effcond::required_sum_order(order), tol);
    const auto poly = axis == "22" ? effcond::sigma22_series(sums, order)
                                   : effcond::expand_effective_series(sums, order);
    if (output.empty()) {
        poly.write_coefficients(std::cout);
    } else {
        std::ofstream os(output, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file '" + output + "'");
        poly.write_coefficients(os);
    }
    return 0;
}

int run_closed_form(const std::string& formula, double f, const ContrastOpts& contrast) {
    const auto id = effcond::formula_from_name(formula);
    double rho = 1.0;
    if (contrast.rho || contrast.sigma) rho = resolve_rho(contrast);
    const double value = effcond::evaluate_formula(id, f, rho);
    std::printf("%.17g\n", value);
    return 0;
}

int run_compare(const effcond::SweepConfig& config, bool to_file) {
    const auto rows = effcond::run_sweep(config);
    if (to_file) {
        effcond::write_csv(rows, config.output_path);
        effcond::write_plot_script(config.output_path);
    } else {
        effcond::write_csv(rows, std::cout);
    }
    return effcond::all_rows_ok(rows) ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Effective conductivity of doubly periodic composites with one circular "
                 "inclusion per cell"};
    app.require_subcommand(1);

    LatticeOpts lat_opts;
    ContrastOpts contrast;
    double f = 0.0;
    double tol = 1e-10;
    int truncation = 12;
    int order = 26;
    std::string output;
    std::string axis = "11";
    std::string formula;
    std::string methods_arg;
    effcond::SweepConfig sweep_cfg;

    auto* sums = app.add_subcommand("sums", "print the lattice-sum table S_2..S_max");
    add_lattice_options(sums, lat_opts);
    sums->add_option("--max-order", order, "largest order to tabulate")->default_val(12);
    sums->add_option("--tol", tol, "absolute tolerance")->default_val(1e-10);
    sums->add_option("--output", output, "write to file instead of stdout");

    auto* solve = app.add_subcommand("solve", "solve the truncated system at one (f, rho)");
    add_lattice_options(solve, lat_opts);
    add_contrast_options(solve, contrast);
    solve->add_option("--f", f, "inclusion concentration")->required();
    solve->add_option("--truncation", truncation, "truncation order L")->default_val(12);
    solve->add_option("--tol", tol, "lattice-sum tolerance")->default_val(1e-10);

    auto* series = app.add_subcommand("series", "export series coefficients as j,k,re,im");
    add_lattice_options(series, lat_opts);
    series->add_option("--order", order, "f-order of the expansion")->default_val(26);
    series->add_option("--axis", axis, "11 (default) or 22")
        ->check(CLI::IsMember({"11", "22"}));
    series->add_option("--tol", tol, "lattice-sum tolerance")->default_val(1e-10);
    series->add_option("--output", output, "write to file instead of stdout");

    auto* closed = app.add_subcommand("closed-form", "evaluate one closed-form expression");
    closed->add_option("--formula", formula,
                       "cma | perrins | keller | matched-perfect | matched-contrast")
        ->required();
    closed->add_option("--f", f, "inclusion concentration")->required();
    add_contrast_options(closed, contrast);

    auto add_sweep_options = [&](CLI::App* cmd, bool output_required) {
        add_lattice_options(cmd, lat_opts);
        add_contrast_options(cmd, contrast);
        cmd->add_option("--methods", methods_arg, "comma-separated method list")->required();
        cmd->add_option("--f-min", sweep_cfg.f_min, "grid start")->default_val(0.0);
        cmd->add_option("--f-max", sweep_cfg.f_max, "grid end")->required();
        cmd->add_option("--steps", sweep_cfg.steps, "grid intervals (points = steps+1)")
            ->default_val(50);
        cmd->add_option("--truncation", sweep_cfg.truncation, "solver truncation L")
            ->default_val(12);
        cmd->add_option("--series-order", sweep_cfg.series_order, "series f-order")
            ->default_val(12);
        cmd->add_option("--tol", sweep_cfg.tolerance, "lattice-sum tolerance")
            ->default_val(1e-10);
        auto* out = cmd->add_option("--output", sweep_cfg.output_path, "CSV output path");
        if (output_required) out->required();
    };
    auto* compare = app.add_subcommand("compare", "method comparison table (CSV to stdout)");
    add_sweep_options(compare, false);
    auto* sweep = app.add_subcommand("sweep", "parameter sweep written as CSV + plot script");
    add_sweep_options(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sums->parsed()) return run_sums(lat_opts, order, tol, output);
        if (solve->parsed()) return run_solve(lat_opts, contrast, f, truncation, tol);
        if (series->parsed()) return run_series(lat_opts, order, tol, axis, output);
        if (closed->parsed()) return run_closed_form(formula, f, contrast);
        if (compare->parsed() || sweep->parsed()) {
            sweep_cfg.rho = resolve_rho(contrast);
            std::string kind = lat_opts.kind == "hex" ? "hexagonal" : lat_opts.kind;
            if (kind == "square") sweep_cfg.lattice_kind = effcond::LatticeKind::square;
            else if (kind == "hexagonal") sweep_cfg.lattice_kind = effcond::LatticeKind::hexagonal;
            else if (kind == "rectangular") sweep_cfg.lattice_kind = effcond::LatticeKind::rectangular;
            else if (kind == "general") sweep_cfg.lattice_kind = effcond::LatticeKind::general;
            else throw std::invalid_argument("unknown lattice kind '" + lat_opts.kind + "'");
            sweep_cfg.aspect = lat_opts.aspect;
            sweep_cfg.methods.clear();
            std::size_t pos = 0;
            while (pos <= methods_arg.size()) {
                const std::size_t comma = methods_arg.find(',', pos);
                const std::string name =
                    methods_arg.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
                if (!name.empty()) sweep_cfg.methods.push_back(effcond::method_from_name(name));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            return run_compare(sweep_cfg, sweep->parsed());
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const effcond::convergence_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
