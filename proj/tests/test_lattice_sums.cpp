#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "effcond/errors.hpp"
#include "effcond/lattice_sums.hpp"

using namespace effcond;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct GoldenEntry {
    int m;
    cplx value;
};

/// Fixture generated by tests/oracles/gen_golden_sums.py (independent
/// q-series route, ~25 correct digits).
std::map<std::string, std::vector<GoldenEntry>> load_golden() {
    std::ifstream in(std::string(EFFCOND_TEST_DATA_DIR) + "/golden_sums.txt");
    REQUIRE(in.good());
    std::map<std::string, std::vector<GoldenEntry>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string name;
        int m;
        double re, im, acc;
        ss >> name >> m >> re >> im >> acc;
        out[name].push_back({m, {re, im}});
    }
    return out;
}

Lattice lattice_by_name(const std::string& name) {
    if (name == "square") return make_lattice(LatticeKind::square);
    if (name == "hexagonal") return make_lattice(LatticeKind::hexagonal);
    const auto colon = name.find(':');
    REQUIRE(colon != std::string::npos);
    return make_lattice(LatticeKind::rectangular, std::stod(name.substr(colon + 1)));
}

/// Plain double-loop summation over |m1|,|m2| <= cutoff, no shell logic.
cplx brute_force_sum(const Lattice& lat, int m, long cutoff) {
    cplx acc = 0.0;
    for (long m2 = -cutoff; m2 <= cutoff; ++m2)
        for (long m1 = -cutoff; m1 <= cutoff; ++m1) {
            if (m1 == 0 && m2 == 0) continue;
            acc += std::pow(lat.point(m1, m2), -m);
        }
    return acc;
}

} // namespace

TEST_CASE("make_lattice fixes the periods per kind") {
    const auto sq = make_lattice(LatticeKind::square);
    CHECK(sq.omega1 == 1.0);
    CHECK(sq.omega2 == cplx(0.0, 1.0));

    const auto rect1 = make_lattice(LatticeKind::rectangular, 1.0);
    CHECK(rect1.omega1 == doctest::Approx(sq.omega1));
    CHECK(rect1.omega2.imag() == doctest::Approx(1.0));

    const auto hex = make_lattice(LatticeKind::hexagonal);
    CHECK(hex.omega1 == doctest::Approx(std::sqrt(2.0 / std::sqrt(3.0))));
    CHECK(std::abs(hex.omega2 / hex.omega1 - std::polar(1.0, kPi / 3.0)) < 1e-15);
    // unit cell area
    CHECK(hex.omega1 * hex.omega2.imag() == doctest::Approx(1.0));
}

TEST_CASE("make_lattice rejects bad aspect usage") {
    CHECK_THROWS_AS(make_lattice(LatticeKind::rectangular, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(LatticeKind::rectangular), std::invalid_argument);
    CHECK_THROWS_AS(make_lattice(LatticeKind::square, 2.0), std::invalid_argument);
}

TEST_CASE("touching bounds") {
    CHECK(make_lattice(LatticeKind::square).max_concentration() == doctest::Approx(kPi / 4.0));
    CHECK(make_lattice(LatticeKind::hexagonal).max_concentration() ==
          doctest::Approx(kPi / std::sqrt(12.0)));
    // narrow rectangle: shorter period governs
    CHECK(make_lattice(LatticeKind::rectangular, 4.0).max_concentration() ==
          doctest::Approx(kPi / 16.0));
}

TEST_CASE("eisenstein_s2 partial sums approach pi for the square lattice") {
    const auto sq = make_lattice(LatticeKind::square);
    const double coarse = std::abs(eisenstein_s2(sq, 2000, 6).real() - kPi);
    const double fine = std::abs(eisenstein_s2(sq, 16000, 6).real() - kPi);
    CHECK(coarse < 0.05);
    CHECK(fine < coarse);
    CHECK_THROWS_AS(eisenstein_s2(sq, 2, 5), std::invalid_argument);
}

TEST_CASE("S_2 = pi for square and hexagonal lattices") {
    for (auto kind : {LatticeKind::square, LatticeKind::hexagonal}) {
        const auto res = eisenstein_s2_accurate(make_lattice(kind), 1e-8);
        CHECK(std::abs(res.value - cplx(kPi, 0.0)) < 1e-8);
        CHECK(res.error_estimate < 1e-8);
    }
}

TEST_CASE("rectangular duality S_2(a) + S_2(1/a) = 2 pi") {
    for (double a : {1.0, 2.0, 4.0}) {
        const auto va = eisenstein_s2_accurate(make_lattice(LatticeKind::rectangular, a), 1e-8);
        const auto vb =
            eisenstein_s2_accurate(make_lattice(LatticeKind::rectangular, 1.0 / a), 1e-8);
        CHECK(std::abs(va.value + vb.value - cplx(2.0 * kPi, 0.0)) < 2e-8);
    }
}

TEST_CASE("odd orders and symmetry-forced zeros are exact") {
    const auto sq = make_lattice(LatticeKind::square);
    const auto hex = make_lattice(LatticeKind::hexagonal);
    CHECK(lattice_sum(sq, 7, 1e-10) == cplx(0.0, 0.0));
    CHECK(lattice_sum(hex, 7, 1e-10) == cplx(0.0, 0.0));
    CHECK(lattice_sum(make_lattice(LatticeKind::rectangular, 2.0), 9, 1e-10) == cplx(0.0, 0.0));
    for (int m : {6, 10, 14}) CHECK(lattice_sum(sq, m, 1e-10) == cplx(0.0, 0.0));
    for (int m : {4, 8, 10, 14, 16}) CHECK(lattice_sum(hex, m, 1e-10) == cplx(0.0, 0.0));
}

TEST_CASE("lattice sums match the golden fixture") {
    const auto golden = load_golden();
    REQUIRE(!golden.empty());
    for (const auto& [name, entries] : golden) {
        const auto lat = lattice_by_name(name);
        for (const auto& entry : entries) {
            CAPTURE(name);
            CAPTURE(entry.m);
            const auto got = lattice_sum(lat, entry.m, 1e-8);
            CHECK(std::abs(got - entry.value) < 2e-8);
        }
    }
}

TEST_CASE("square S_4 agrees with brute-force summation") {
    const auto sq = make_lattice(LatticeKind::square);
    const auto brute = brute_force_sum(sq, 4, 300);
    CHECK(std::abs(lattice_sum(sq, 4, 1e-8) - brute) < 1e-4);
}

TEST_CASE("doubling the shell cutoff stays within the requested tolerance") {
    const auto rect = make_lattice(LatticeKind::rectangular, 2.0);
    const auto coarse = lattice_sum(rect, 4, 1e-6);
    const auto fine = lattice_sum(rect, 4, 1e-12);
    CHECK(std::abs(coarse - fine) < 1e-6);
}

TEST_CASE("build_sum_table populates all orders") {
    const auto sq = make_lattice(LatticeKind::square);
    const auto table = LatticeSumTable::build(sq, 4, 1e-10);
    CHECK(std::abs(table.at(2) - cplx(kPi, 0.0)) < 1e-10);
    CHECK(table.at(3) == cplx(0.0, 0.0));
    CHECK(std::abs(table.at(4) - cplx(3.151212002153898, 0.0)) < 1e-10);
    CHECK_THROWS_AS(table.at(5), std::invalid_argument);
    CHECK_THROWS_AS(table.at(1), std::invalid_argument);

    const auto hex = LatticeSumTable::build(make_lattice(LatticeKind::hexagonal), 12, 1e-10);
    for (int m = 3; m <= 12; ++m)
        if (m % 6 != 0) CHECK(hex.at(m) == cplx(0.0, 0.0));
    CHECK(std::abs(hex.at(6).real() - 3.808150792274771) < 1e-9);
    CHECK(std::abs(hex.at(12).real() - 2.535316863059959) < 1e-9);

    const auto coarse = LatticeSumTable::build(sq, 2, 1e-6);
    CHECK(std::abs(coarse.at(2) - cplx(kPi, 0.0)) < 1e-6);
}

TEST_CASE("conjugate-axis table matches the quarter-turned lattice") {
    const auto wide = make_lattice(LatticeKind::rectangular, 2.0);
    const auto tall = make_lattice(LatticeKind::rectangular, 0.5);
    const auto table = LatticeSumTable::build(wide, 8, 1e-8);
    const auto flipped = table.with_conjugate_axis();
    CHECK(std::abs(flipped.at(2) - (2.0 * kPi - table.at(2))) < 1e-14);
    CHECK(flipped.at(4) == table.at(4));
    CHECK(flipped.at(6) == -table.at(6));
    CHECK(flipped.at(8) == table.at(8));
    // agrees with the sums of the aspect-inverted lattice
    const auto dual = LatticeSumTable::build(tall, 8, 1e-8);
    for (int m = 2; m <= 8; ++m) CHECK(std::abs(flipped.at(m) - dual.at(m)) < 1e-7);
}
