#ifndef HM_LEVEL_SETS_HPP
#define HM_LEVEL_SETS_HPP

#include <optional>
#include <vector>

#include "hm/interval_union.hpp"
#include "hm/measure.hpp"

namespace hm {

enum class LevelSign { abs, pos, neg };

// Which boundary function the threshold applies to: the real boundary part
// Re F(x+i0) itself, or the Hilbert transform H = Re F / π.
enum class TransformKind { F, H };

struct LevelSet {
    IntervalUnion set;
    bool exact;         // guaranteed-bracket path (purely atomic measures)
    double resolution;  // endpoint tolerance (exact) or coarse grid step (mixed)
};

struct TailPoint {
    double t;
    double lambda;
    double t_lambda;
};

struct WeakLimitMeasure {
    IntervalUnion support;
    double height;

    double mass() const { return height * support.length(); }
};

struct LevelSetOptions {
    // Samples per inter-singularity segment in the mixed (atoms + density)
    // scan. The exact atomic path ignores this.
    int mixed_samples_per_segment = 512;
};

// Γ-type level set of the boundary real part f = Re F(x+i0):
//   pos: {f > t},  neg: {f < -t},  abs: their union.
// Purely atomic measures take the exact path: f is strictly increasing on
// every gap of the support, so each component endpoint is a guaranteed
// bracketed root. Mixed measures fall back to an adaptive sign scan and the
// result is flagged approximate.
LevelSet gamma(const Measure& mu, double t, LevelSign sign,
               const LevelSetOptions& opts = {});

// Lebesgue length of the level set, optionally restricted to S. For
// transform H the threshold is converted via {|H| > t} = {|Re F| > πt}.
double distribution(const Measure& mu, double t,
                    const std::optional<IntervalUnion>& s, TransformKind kind,
                    const LevelSetOptions& opts = {});

std::vector<TailPoint> tail_sweep(const Measure& mu, const std::vector<double>& t_grid,
                                  const std::optional<IntervalUnion>& s,
                                  TransformKind kind = TransformKind::H,
                                  const LevelSetOptions& opts = {});

// The measure (πt/2)·χ_{{|H_μ| ≥ t}} dx. Exact support for atomic μ; its
// mass equals ‖μ‖ for every t.
WeakLimitMeasure weak_limit_measure(const Measure& mu, double t);

// λ(t) = |{|H_μ| ≥ t} ∩ {|H_ν| ≥ ct}| per grid point; both measures atomic.
std::vector<TailPoint> intersection_decay(const Measure& mu, const Measure& nu, double c,
                                          const std::vector<double>& t_grid);

// {|Re F| ≥ t} ∩ [p,q] for purely atomic μ with no atoms in [p,q];
// exact via monotonicity of F between atoms.
IntervalUnion levelset_on_atomfree_interval(const Measure& mu, double t, double p, double q);

// ∫ g over the union, g given by coefficients c0 + c1 x + c2 x² + ...
double integrate_polynomial(const std::vector<double>& coeffs, const IntervalUnion& s);

}  // namespace hm

#endif
