#include <complex>
#include <optional>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "effcond/closed_forms.hpp"
#include "effcond/lattice_sums.hpp"
#include "effcond/rayleigh.hpp"
#include "effcond/series.hpp"

namespace py = pybind11;
using namespace effcond;

namespace {

Lattice lattice_from_args(const std::string& kind, std::optional<double> aspect) {
    if (kind == "square") return make_lattice(LatticeKind::square);
    if (kind == "hexagonal" || kind == "hex") return make_lattice(LatticeKind::hexagonal);
    if (kind == "rectangular") return make_lattice(LatticeKind::rectangular, aspect);
    if (kind == "general") return make_lattice(LatticeKind::general, aspect);
    throw std::invalid_argument("unknown lattice kind '" + kind + "'");
}

} // namespace

PYBIND11_MODULE(_effcond, m) {
    m.doc() = "Effective conductivity of doubly periodic composites with one "
              "circular inclusion per unit cell";

    m.def(
        "lattice_sums",
        [](const std::string& kind, int max_order, double tol, std::optional<double> aspect) {
            const auto table =
                LatticeSumTable::build(lattice_from_args(kind, aspect), max_order, tol);
            std::vector<std::complex<double>> out;
            for (int order = 2; order <= max_order; ++order) out.push_back(table.at(order));
            return out;
        },
        py::arg("kind"), py::arg("max_order") = 12, py::arg("tol") = 1e-10,
        py::arg("aspect") = std::nullopt,
        "Lattice sums S_2..S_max as a list indexed by order - 2.");

    m.def(
        "solve",
        [](const std::string& kind, double f, double rho, int truncation, double tol,
           std::optional<double> aspect) {
            const auto lattice = lattice_from_args(kind, aspect);
            const auto params = CompositeParams::from_concentration(f, rho);
            params.validate(lattice);
            const auto sums = LatticeSumTable::build(lattice, 2 * truncation + 2, tol);
            double residual = 0.0;
            const auto tensor = solve_effective(sums, params, truncation, &residual);
            py::dict out;
            out["sigma11"] = tensor.sigma11;
            out["sigma12"] = tensor.sigma12;
            out["sigma22"] = tensor.sigma22;
            out["residual"] = residual;
            return out;
        },
        py::arg("kind"), py::arg("f"), py::arg("rho"), py::arg("truncation") = 12,
        py::arg("tol") = 1e-10, py::arg("aspect") = std::nullopt,
        "Effective tensor from the truncated system at one (f, rho).");

    m.def(
        "series_coefficients",
        [](const std::string& kind, int order, double tol, std::optional<double> aspect) {
            const auto lattice = lattice_from_args(kind, aspect);
            const auto sums = LatticeSumTable::build(lattice, required_sum_order(order), tol);
            const auto poly = expand_effective_series(sums, order);
            std::vector<std::vector<std::complex<double>>> out(order + 1);
            for (int j = 0; j <= order; ++j) {
                out[j].resize(j + 1);
                for (int k = 0; k <= j; ++k) out[j][k] = poly.coeff(j, k);
            }
            return out;
        },
        py::arg("kind"), py::arg("order") = 12, py::arg("tol") = 1e-10,
        py::arg("aspect") = std::nullopt,
        "Coefficients c[j][k] of rho^k f^j in the expansion of sigma11 - i sigma12.");

    m.def("hexagonal_coefficients", &hexagonal_coefficients, py::arg("order") = 26,
          "Coefficients of f^0..f^order at rho = 1 on the hexagonal lattice.");

    m.def(
        "closed_form",
        [](const std::string& name, double f, double rho) {
            return evaluate_formula(formula_from_name(name), f, rho);
        },
        py::arg("name"), py::arg("f"), py::arg("rho") = 1.0,
        "One of cma, perrins, keller, matched-perfect, matched-contrast.");

    m.def("percolation_threshold", &hexagonal_percolation_threshold,
          "Touching concentration of the hexagonal array, pi/sqrt(12).");
}
