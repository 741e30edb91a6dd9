#ifndef HM_CHECKS_HPP
#define HM_CHECKS_HPP

#include <vector>

#include "hm/interval_union.hpp"
#include "hm/measure.hpp"
#include "hm/report.hpp"

namespace hm {

// One operation per verified statement. Each returns a CheckReport whose
// margin is the statement-specific slack (positive = headroom); finalize()
// has already been applied. Preconditions that make the statement
// inapplicable throw std::invalid_argument, except where the check is
// defined to produce an out-of-regime / precondition-violation report.

// Boole's identity |{±H >= t}| = ||mu|| / (pi t), atomic mu, both signs,
// 1e-9 relative.
CheckReport check_boole(const Measure& mu, double t);

// Loomis/Davis with C = 1: t |{|H| >= t}| <= ||mu|| on every grid point.
CheckReport check_loomis(const Measure& mu, const std::vector<double>& t_grid);

// pi t |{±H >= t}| -> ||mu_s||: deviation decreasing over the grid tail and
// below 5% at the largest t.
CheckReport check_limit_18(const Measure& mu, const std::vector<double>& t_grid);

// For every maximal component [c-a, c+a] of Gamma_t: |F(c+a+2ia)| >= t/(8 pi^2).
CheckReport check_prop32(const Measure& mu, double t);

// With t0 = delta t / (128 pi^2): both touching intervals of each component
// satisfy |I~ \ Gamma_{t0}| <= (delta/2)|I|.
CheckReport check_prop34(const Measure& mu, double t, double delta);

// Key inequality |Gamma_{t0} ∩ E| >= (delta/24)|Gamma_t| for t above
// T = pi ||mu|| / diam(E), delta from homogeneity_delta(E). Also asserts the
// per-component bound |Gamma_{t0} ∩ E ∩ I#| >= (delta/2)|I| with
// I# = [c-3a, c+3a]. t <= T is reported out-of-regime, not failed.
CheckReport check_key_ineq(const Measure& mu, const IntervalUnion& e, double t);

// mu(E) <= C1 min over the grid tail (t >= T) of t |{x in E : |H| >= t}|,
// C1 = 1536 pi^3 / delta^2.
CheckReport check_thm14(const Measure& mu, const IntervalUnion& e,
                        const std::vector<double>& t_grid);

// {|F| > t0} = {F_{t0} > t0/2}: left side from the exact level set, right
// side by independent root-finding on the Moebius transform per gap;
// symmetric difference below 1e-8. Includes a Herglotz spot check of F_{t0}.
CheckReport check_lemma33(const Measure& mu, double t0);

// (pi t / 2) chi_{|H|>=t} dx -> mu weak-*: mass identity exact per t,
// polynomial moments converging (decreasing over the tail, < 1% at the end).
CheckReport check_poltoratski(const Measure& mu, const std::vector<double>& g,
                              const std::vector<double>& t_grid);

// t |{|H_mu| >= t} ∩ {|H_nu| >= ct}| nonincreasing over the tail and < 1% of
// min mass at the largest t. Non-singular pairs yield a
// precondition-violation report, not a failure.
CheckReport check_prop52(const Measure& mu, const Measure& nu, double c,
                         const std::vector<double>& t_grid);

}  // namespace hm

#endif
