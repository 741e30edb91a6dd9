#include "hm/transform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hm {

namespace {

bool is_atom_position(const Measure& mu, double x) {
    for (const auto& a : mu.atoms())
        if (x == a.x) return true;
    return false;
}

bool is_density_edge(const Measure& mu, double x) {
    for (const auto& p : mu.density())
        if (x == p.a || x == p.b) return true;
    return false;
}

}  // namespace

std::complex<double> stieltjes(const Measure& mu, std::complex<double> z) {
    if (z.imag() < 0.0) throw std::domain_error("stieltjes: Im z < 0");
    if (z.imag() == 0.0) {
        BoundaryValue bv = stieltjes_boundary(mu, z.real());
        if (bv.kind != BoundaryKind::regular)
            throw std::domain_error("stieltjes: boundary evaluation at a singularity");
        return bv.value;
    }
    std::complex<double> f = 0.0;
    for (const auto& a : mu.atoms()) f += a.w / (a.x - z);
    for (const auto& p : mu.density())
        f += p.h * (std::log(std::complex<double>(p.b) - z) -
                    std::log(std::complex<double>(p.a) - z));
    return f;
}

BoundaryValue stieltjes_boundary(const Measure& mu, double x) {
    if (is_atom_position(mu, x)) return {{0.0, 0.0}, BoundaryKind::pole};
    if (is_density_edge(mu, x)) return {{0.0, 0.0}, BoundaryKind::density_edge};

    double re = 0.0;
    double im = 0.0;
    for (const auto& a : mu.atoms()) re += a.w / (a.x - x);
    for (const auto& p : mu.density()) {
        // p.v. of h ∫_a^b dy/(y−x); for x inside the piece the i0 limit
        // also picks up the residue iπh.
        re += p.h * (std::log(std::abs(p.b - x)) - std::log(std::abs(p.a - x)));
        if (p.a < x && x < p.b) im += M_PI * p.h;
    }
    return {{re, im}, BoundaryKind::regular};
}

double boundary_real(const Measure& mu, double x) {
    BoundaryValue bv = stieltjes_boundary(mu, x);
    if (bv.kind == BoundaryKind::pole) throw std::domain_error("boundary_real: pole at atom");
    if (bv.kind == BoundaryKind::density_edge)
        throw std::domain_error("boundary_real: logarithmic divergence at density edge");
    return bv.value.real();
}

double hilbert(const Measure& mu, double x) { return boundary_real(mu, x) / M_PI; }

double stieltjes_deriv(const Measure& mu, double x) {
    for (const auto& a : mu.atoms())
        if (x == a.x) throw std::domain_error("stieltjes_deriv: x at atom");
    for (const auto& p : mu.density())
        if (p.a <= x && x <= p.b) throw std::domain_error("stieltjes_deriv: x in density support");
    double d = 0.0;
    for (const auto& a : mu.atoms()) {
        double g = a.x - x;
        d += a.w / (g * g);
    }
    for (const auto& p : mu.density()) d += p.h * (1.0 / (p.a - x) - 1.0 / (p.b - x));
    return d;
}

std::complex<double> mobius(const Measure& mu, double t0, std::complex<double> z) {
    if (!(t0 > 0.0)) throw std::invalid_argument("mobius: t0 must be positive");
    std::complex<double> f = stieltjes(mu, z);
    std::complex<double> den = 1.0 + f / t0;
    if (z.imag() == 0.0 && std::abs(den) == 0.0)
        throw std::domain_error("mobius: pole of the transformed family");
    return f / den;
}

}  // namespace hm
