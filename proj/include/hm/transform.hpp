#ifndef HM_TRANSFORM_HPP
#define HM_TRANSFORM_HPP

#include <complex>

#include "hm/measure.hpp"

namespace hm {

// Classification of the boundary value F(x+i0).
enum class BoundaryKind { regular, pole, density_edge };

struct BoundaryValue {
    std::complex<double> value;  // principal-value limit when regular
    BoundaryKind kind;
};

// F(z) = ∫ dμ(x)/(x−z) on the closed upper half plane. Density pieces use
// the closed-form logarithm (principal branch; each log is continuous on
// C+ since Im(b−z) < 0 there). Im z = 0 falls through to the boundary
// formula; Im z < 0 is rejected.
std::complex<double> stieltjes(const Measure& mu, std::complex<double> z);

// Principal-value boundary limit F(x+i0), with pole / density-edge
// classification. Never approximated by a small-ε offset.
BoundaryValue stieltjes_boundary(const Measure& mu, double x);

// Re F(x+i0); throws std::domain_error at atoms and density edges.
double boundary_real(const Measure& mu, double x);

// H(x) = Re F(x+i0) / π.
double hilbert(const Measure& mu, double x);

// F'(x) = ∫ dμ(y)/(y−x)², valid (and strictly positive for μ ≠ 0) off the
// support; throws std::domain_error on the support.
double stieltjes_deriv(const Measure& mu, double x);

// Möbius-transformed family F_{t0} = F / (1 + F/t0); maps C+ to C+.
std::complex<double> mobius(const Measure& mu, double t0, std::complex<double> z);

}  // namespace hm

#endif
