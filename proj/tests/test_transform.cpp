#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "hm/measure.hpp"
#include "hm/transform.hpp"

using namespace hm;
using std::complex;

namespace {

const double kPi = std::acos(-1.0);

Measure delta0() { return Measure::make({{0.0, 1.0}}, {}); }
Measure uniform01() { return Measure::make({}, {{0.0, 1.0, 1.0}}); }

Measure random_measure(std::mt19937& rng, bool with_density) {
    std::uniform_real_distribution<double> pos(-5.0, 5.0), w(0.05, 1.0);
    std::vector<Atom> atoms;
    int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) atoms.push_back({pos(rng), w(rng)});
    std::vector<DensityPiece> pieces;
    if (with_density) pieces.push_back({6.0, 7.0 + w(rng), w(rng)});
    return Measure::make(std::move(atoms), std::move(pieces));
}

// adaptive-free quadrature oracle for the a.c. part: fine midpoint rule
complex<double> quad_oracle(const Measure& mu, complex<double> z, int n = 400000) {
    complex<double> s = 0.0;
    for (const auto& a : mu.atoms()) s += a.w / (a.x - z);
    for (const auto& p : mu.density()) {
        double dx = (p.b - p.a) / n;
        for (int i = 0; i < n; ++i) {
            double x = p.a + (i + 0.5) * dx;
            s += p.h * dx / (x - z);
        }
    }
    return s;
}

}  // namespace

TEST_CASE("single atom closed forms") {
    Measure mu = delta0();
    CHECK(std::abs(stieltjes(mu, {0.0, 1.0}) - complex<double>(0.0, 1.0)) < 1e-15);
    CHECK(boundary_real(mu, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(hilbert(mu, 1.0) == doctest::Approx(-1.0 / kPi).epsilon(1e-15));
    CHECK(hilbert(mu, -2.0) == doctest::Approx(0.5 / kPi).epsilon(1e-15));
}

TEST_CASE("uniform density boundary values") {
    Measure mu = uniform01();
    // off support: plain log integral
    CHECK(boundary_real(mu, 2.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-14));
    // inside: principal value plus the pi*h imaginary part
    BoundaryValue b = stieltjes_boundary(mu, 0.5);
    CHECK(b.kind == BoundaryKind::regular);
    CHECK(b.value.real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(b.value.imag() == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(stieltjes_boundary(mu, 0.25).value.real() ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));
}

TEST_CASE("boundary classification") {
    Measure mu = Measure::make({{0.0, 1.0}}, {{1.0, 2.0, 1.0}});
    CHECK(stieltjes_boundary(mu, 0.0).kind == BoundaryKind::pole);
    CHECK(stieltjes_boundary(mu, 1.0).kind == BoundaryKind::density_edge);
    CHECK(stieltjes_boundary(mu, 2.0).kind == BoundaryKind::density_edge);
    CHECK(stieltjes_boundary(mu, 1.5).kind == BoundaryKind::regular);
    CHECK_THROWS_AS(boundary_real(mu, 0.0), std::domain_error);
    CHECK_THROWS_AS(stieltjes(mu, {0.0, -1.0}), std::domain_error);
}

TEST_CASE("closed-form log evaluation matches quadrature oracle") {
    std::mt19937 rng(11);
    Measure mu = Measure::make({{-1.0, 0.5}}, {{0.0, 1.0, 0.75}, {2.0, 2.5, 2.0}});
    std::uniform_real_distribution<double> ux(-4.0, 4.0), uy(0.05, 3.0);
    for (int i = 0; i < 20; ++i) {
        complex<double> z(ux(rng), uy(rng));
        complex<double> f = stieltjes(mu, z);
        complex<double> q = quad_oracle(mu, z, 200000);
        CHECK(std::abs(f - q) < 1e-8);
    }
}

TEST_CASE("Herglotz property on random measures") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ux(-20.0, 20.0), uy(1e-6, 10.0);
    for (int i = 0; i < 1000; ++i) {
        Measure mu = random_measure(rng, (i % 3) == 0);
        complex<double> z(ux(rng), uy(rng));
        CHECK(stieltjes(mu, z).imag() > 0.0);
    }
}

TEST_CASE("boundary value is the vertical limit") {
    Measure mu = Measure::make({{-1.0, 0.4}}, {{0.0, 2.0, 0.3}});
    for (double x : {-3.0, 0.7, 1.2, 5.0}) {
        BoundaryValue b = stieltjes_boundary(mu, x);
        complex<double> up = stieltjes(mu, {x, 1e-8});
        CHECK(std::abs(up - b.value) < 1e-5);
    }
}

TEST_CASE("derivative matches finite differences and is positive") {
    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        Measure mu = random_measure(rng, false);
        double x = mu.support_max() + 0.5 + (i % 5);
        double d = stieltjes_deriv(mu, x);
        double h = 1e-6;
        double fd = (boundary_real(mu, x + h) - boundary_real(mu, x - h)) / (2 * h);
        CHECK(d > 0.0);
        CHECK(d == doctest::Approx(fd).epsilon(1e-6));
    }
    CHECK_THROWS_AS(stieltjes_deriv(uniform01(), 0.5), std::domain_error);
    CHECK_THROWS_AS(stieltjes_deriv(delta0(), 0.0), std::domain_error);
}

TEST_CASE("scaling and translation covariance") {
    std::mt19937 rng(41);
    for (int i = 0; i < 25; ++i) {
        Measure mu = random_measure(rng, true);
        complex<double> z(0.3, 0.7);
        CHECK(std::abs(stieltjes(mu.scaled(2.5), z) - 2.5 * stieltjes(mu, z)) < 1e-12);
        CHECK(std::abs(stieltjes(mu.shifted(3.0), z + 3.0) - stieltjes(mu, z)) < 1e-12);
    }
}

TEST_CASE("Moebius family maps the upper half plane to itself") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> ux(-10.0, 10.0), uy(1e-4, 5.0);
    for (int i = 0; i < 200; ++i) {
        Measure mu = random_measure(rng, false);
        complex<double> z(ux(rng), uy(rng));
        for (double t0 : {0.5, 2.0, 20.0}) CHECK(mobius(mu, t0, z).imag() > 0.0);
    }
}
