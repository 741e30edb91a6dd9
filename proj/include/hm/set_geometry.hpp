#ifndef HM_SET_GEOMETRY_HPP
#define HM_SET_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "hm/interval_union.hpp"

namespace hm {

struct HomogeneityReport {
    double delta;      // in (0, 1]
    double witness_x;  // argmin location
    double witness_a;  // argmin half-width
    double diam;
    double certified_error;  // absolute slack of the reported infimum
};

struct DensityProfile {
    double x0;
    std::vector<std::pair<double, double>> samples;  // (a, ratio)
    double limsup_estimate;
    double liminf_estimate;
};

// |E ∩ (x-a, x+a)|. Piecewise linear and 1-Lipschitz in x and in a
// separately (Lipschitz constant 2 in each).
double window_measure(const IntervalUnion& e, double x, double a);

// Homogeneity constant: inf over x ∈ E, 0 < a < diam(E) of
// window_measure/(2a). The window measure is piecewise affine on the
// arrangement cut by the lines a = ±(x - endpoint), and the ratio is
// monotone in a on every cell, so the infimum sits at arrangement
// vertices (endpoint/endpoint and endpoint/midpoint combinations) or at
// the open limits a → 0+ and a → diam−, which are enumerated as ladders.
// Ties resolve to smallest witness_a, then smallest witness_x.
HomogeneityReport homogeneity_delta(const IntervalUnion& e);

DensityProfile density_profile(const IntervalUnion& e, double x0,
                               const std::vector<double>& a_seq);

// Minimum of window_measure(e,x,a)/(2a) over a ∈ (0, amax); exact via the
// kink candidates a = |x - endpoint| plus the a → 0 and a → amax limits.
// Requires x ∈ E.
double min_window_ratio(const IntervalUnion& e, double x, double amax);

// e_n = {x ∈ E : ∀ a < 1/n, |E ∩ (x-a,x+a)| ≥ 2a/n}, built per maximal
// interval from the exact min-ratio function with bisection-refined
// threshold crossings on a dense sample grid.
IntervalUnion en_subset(const IntervalUnion& e, int n, int samples_per_cell = 2048);

}  // namespace hm

#endif
