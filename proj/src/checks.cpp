#include "hm/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "hm/json_io.hpp"
#include "hm/level_sets.hpp"
#include "hm/transform.hpp"
#include "hm/set_geometry.hpp"

namespace hm {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

nlohmann::json grid_json(const std::vector<double>& g) {
    return nlohmann::json(g);
}

void require_positive_grid(const std::vector<double>& g) {
    if (g.empty()) throw std::invalid_argument("t grid must be non-empty");
    double prev = 0.0;
    for (double t : g) {
        if (!(t > prev)) throw std::invalid_argument("t grid must be strictly increasing and positive");
        prev = t;
    }
}

// Boundary real part with a tiny nudge if the query accidentally lands on a
// singular point (only reachable through bisection midpoints).
double f_at(const Measure& mu, double x, double nudge) {
    BoundaryValue b = stieltjes_boundary(mu, x);
    if (b.kind == BoundaryKind::regular) return b.value.real();
    return stieltjes_boundary(mu, x + nudge).value.real();
}

// Root of f = target on a gap where f is strictly increasing and brackets it.
double bisect_increasing(const Measure& mu, double target, double lo, double hi) {
    for (int i = 0; i < 200 && hi - lo > 0; ++i) {
        double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break;
        if (f_at(mu, m, (hi - lo) * 1e-9) < target)
            lo = m;
        else
            hi = m;
    }
    return 0.5 * (lo + hi);
}

// Tail of the grid used for monotonicity/limit assertions.
std::size_t tail_start(std::size_t n) { return n <= 2 ? 0 : n - std::max<std::size_t>(3, n / 2); }

// Maximal components of {|F| > t} as subsets of R minus the atoms: the
// one-sided components attached to a pole stay separate instead of being
// merged across it.
std::vector<Interval> abs_components(const Measure& mu, double t) {
    std::vector<Interval> parts;
    for (LevelSign s : {LevelSign::pos, LevelSign::neg}) {
        LevelSet ls = gamma(mu, t, s);
        parts.insert(parts.end(), ls.set.parts().begin(), ls.set.parts().end());
    }
    std::sort(parts.begin(), parts.end(),
              [](const Interval& a, const Interval& b) { return a.left < b.left; });
    return parts;
}

}  // namespace

CheckReport check_boole(const Measure& mu, double t) {
    if (!(t > 0)) throw std::invalid_argument("check_boole: t must be positive");
    if (!mu.purely_atomic() || mu.is_zero())
        throw std::invalid_argument("check_boole: measure must be purely atomic and nonzero");
    CheckReport rep;
    rep.check_id = "boole";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"t", t}};
    const double mass = mu.total_mass();
    double worst = 0.0;
    for (LevelSign sign : {LevelSign::pos, LevelSign::neg}) {
        double lambda = gamma(mu, kPi * t, sign).set.length();
        double rel = std::abs(kPi * t * lambda - mass) / mass;
        worst = std::max(worst, rel);
        ++rep.asserted_cases;
    }
    rep.margin = (1e-9 - worst) / 1e-9;
    rep.notes.push_back("max relative deviation " + std::to_string(worst));
    rep.finalize(0.0);
    return rep;
}

CheckReport check_loomis(const Measure& mu, const std::vector<double>& t_grid) {
    require_positive_grid(t_grid);
    if (mu.is_zero()) throw std::invalid_argument("check_loomis: zero measure");
    CheckReport rep;
    rep.check_id = "loomis";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"t_grid", grid_json(t_grid)}};
    const double mass = mu.total_mass();
    double margin = std::numeric_limits<double>::infinity();
    for (double t : t_grid) {
        double lambda = distribution(mu, t, std::nullopt, TransformKind::H);
        margin = std::min(margin, (mass - t * lambda) / mass);
        ++rep.asserted_cases;
    }
    rep.margin = margin;
    rep.finalize(1e-9);
    return rep;
}

CheckReport check_limit_18(const Measure& mu, const std::vector<double>& t_grid) {
    require_positive_grid(t_grid);
    if (mu.is_zero()) throw std::invalid_argument("check_limit_18: zero measure");
    CheckReport rep;
    rep.check_id = "limit18";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"t_grid", grid_json(t_grid)}};
    auto [ac, singular] = mu.decompose();
    const double ms = singular.total_mass();
    const double denom = ms > 0 ? ms : mu.total_mass();
    double margin = std::numeric_limits<double>::infinity();
    for (LevelSign sign : {LevelSign::pos, LevelSign::neg}) {
        std::vector<double> dev;
        for (double t : t_grid) {
            double lambda = gamma(mu, kPi * t, sign).set.length();
            dev.push_back(std::abs(kPi * t * lambda - ms));
        }
        for (std::size_t i = tail_start(dev.size()); i + 1 < dev.size(); ++i) {
            margin = std::min(margin, (dev[i] - dev[i + 1]) / denom + 1e-6);
            ++rep.asserted_cases;
        }
        margin = std::min(margin, 0.05 - dev.back() / denom);
        ++rep.asserted_cases;
    }
    rep.margin = margin;
    rep.finalize(0.0);
    return rep;
}

CheckReport check_prop32(const Measure& mu, double t) {
    if (!(t > 0)) throw std::invalid_argument("check_prop32: t must be positive");
    if (!mu.purely_atomic() || mu.is_zero())
        throw std::invalid_argument("check_prop32: measure must be purely atomic and nonzero");
    CheckReport rep;
    rep.check_id = "prop32";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"t", t}};
    auto comps = abs_components(mu, t);
    if (comps.empty()) throw std::domain_error("check_prop32: level set is empty");
    const double bound = t / (8 * kPi * kPi);
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& iv : comps) {
        double c = 0.5 * (iv.left + iv.right), a = 0.5 * iv.length();
        std::complex<double> z0(c + a, 2 * a);
        double v = std::abs(stieltjes(mu, z0));
        margin = std::min(margin, v / bound - 1.0);
        ++rep.asserted_cases;
    }
    rep.margin = margin;
    rep.finalize(1e-9);
    return rep;
}

CheckReport check_prop34(const Measure& mu, double t, double delta) {
    if (!(t > 0)) throw std::invalid_argument("check_prop34: t must be positive");
    if (!(delta > 0 && delta <= 1))
        throw std::invalid_argument("check_prop34: delta must lie in (0,1]");
    if (!mu.purely_atomic() || mu.is_zero())
        throw std::invalid_argument("check_prop34: measure must be purely atomic and nonzero");
    CheckReport rep;
    rep.check_id = "prop34";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"t", t}, {"delta", delta}};
    auto comps = abs_components(mu, t);
    if (comps.empty()) throw std::domain_error("check_prop34: level set is empty");
    const double t0 = delta * t / (128 * kPi * kPi);
    IntervalUnion gt0 = gamma(mu, t0, LevelSign::abs).set;
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& iv : comps) {
        double c = 0.5 * (iv.left + iv.right), a = 0.5 * iv.length();
        const double bound = 0.5 * delta * iv.length();
        for (int side : {+1, -1}) {
            Interval touching = side > 0 ? Interval{c + a, c + 3 * a} : Interval{c - 3 * a, c - a};
            double outside = IntervalUnion({touching}).subtract(gt0).length();
            margin = std::min(margin, (bound - outside) / std::max(bound, 1e-300));
            ++rep.asserted_cases;
        }
    }
    rep.margin = margin;
    rep.finalize(1e-9);
    return rep;
}

CheckReport check_key_ineq(const Measure& mu, const IntervalUnion& e, double t) {
    if (!(t > 0)) throw std::invalid_argument("check_key_ineq: t must be positive");
    if (!mu.purely_atomic() || mu.is_zero())
        throw std::invalid_argument("check_key_ineq: measure must be purely atomic and nonzero");
    if (e.empty()) throw std::invalid_argument("check_key_ineq: empty set");
    for (const auto& a : mu.atoms())
        if (!e.contains(a.x)) throw std::invalid_argument("check_key_ineq: atom outside the set");

    CheckReport rep;
    rep.check_id = "key";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"set", set_to_json(e)}, {"t", t}};
    const double delta = homogeneity_delta(e).delta;
    const double T = kPi * mu.total_mass() / e.diam();
    rep.inputs_echo["delta"] = delta;
    rep.inputs_echo["T"] = T;
    if (!(t > T)) {
        rep.precondition_violation = true;
        rep.notes.push_back("out of regime: t <= T = pi*mass/diam, nothing asserted");
        rep.finalize(0.0);
        return rep;
    }

    const double t0 = delta * t / (128 * kPi * kPi);
    IntervalUnion gt = gamma(mu, t, LevelSign::abs).set;
    auto comps = abs_components(mu, t);
    IntervalUnion gt0 = gamma(mu, t0, LevelSign::abs).set;
    double margin = std::numeric_limits<double>::infinity();

    double lhs = gt0.intersect(e).length();
    double rhs = (delta / 24.0) * gt.length();
    if (rhs > 0) {
        margin = std::min(margin, lhs / rhs - 1.0);
    } else {
        rep.notes.push_back("Gamma_t empty above T; main inequality holds trivially");
        margin = std::min(margin, 1.0);
    }
    ++rep.asserted_cases;

    // Component version: |Gamma_{t0} ∩ E ∩ I#| >= (delta/2)|I| for every
    // component meeting E with half-width at most diam(E).
    for (const auto& iv : comps) {
        double c = 0.5 * (iv.left + iv.right), a = 0.5 * iv.length();
        if (a > e.diam()) continue;
        if (e.intersect_interval(iv.left, iv.right).empty()) continue;
        double covered = gt0.intersect(e).intersect_interval(c - 3 * a, c + 3 * a).length();
        double bound = 0.5 * delta * iv.length();
        margin = std::min(margin, covered / bound - 1.0);
        ++rep.asserted_cases;
    }
    rep.margin = margin;
    rep.finalize(1e-9);
    return rep;
}

CheckReport check_thm14(const Measure& mu, const IntervalUnion& e,
                        const std::vector<double>& t_grid) {
    require_positive_grid(t_grid);
    if (!mu.purely_atomic() || mu.is_zero())
        throw std::invalid_argument("check_thm14: measure must be purely atomic and nonzero");
    if (e.empty()) throw std::invalid_argument("check_thm14: empty set");
    for (const auto& a : mu.atoms())
        if (!e.contains(a.x)) throw std::invalid_argument("check_thm14: atom outside the set");

    CheckReport rep;
    rep.check_id = "thm14";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"set", set_to_json(e)},
                       {"t_grid", grid_json(t_grid)}};
    const double delta = homogeneity_delta(e).delta;
    const double c1 = 1536 * kPi * kPi * kPi / (delta * delta);
    const double T = kPi * mu.total_mass() / e.diam();
    rep.inputs_echo["delta"] = delta;
    rep.inputs_echo["C1"] = c1;
    const double mass_e = mu.total_mass();

    double best = std::numeric_limits<double>::infinity();
    for (double t : t_grid) {
        if (t < T) continue;
        double lambda = distribution(mu, t, e, TransformKind::H);
        best = std::min(best, c1 * t * lambda);
        ++rep.asserted_cases;
    }
    if (rep.asserted_cases == 0) {
        rep.precondition_violation = true;
        rep.notes.push_back("no grid point reaches the threshold T; nothing asserted");
        rep.finalize(0.0);
        return rep;
    }
    rep.margin = (best - mass_e) / mass_e;
    rep.finalize(1e-9);
    return rep;
}

CheckReport check_lemma33(const Measure& mu, double t0) {
    if (!(t0 > 0)) throw std::invalid_argument("check_lemma33: t0 must be positive");
    if (!mu.purely_atomic() || mu.is_zero())
        throw std::invalid_argument("check_lemma33: measure must be purely atomic and nonzero");
    CheckReport rep;
    rep.check_id = "lemma33";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"t0", t0}};

    IntervalUnion left = gamma(mu, t0, LevelSign::abs).set;

    // Right side {F_{t0} > t0/2} gap by gap. On every gap f = Re F(x+i0) is
    // strictly increasing, F_{t0} = t0 f/(t0+f), and the set boundary is
    // either the pole f = -t0 or the crossing F_{t0} = t0/2 (i.e. f = t0).
    const auto& atoms = mu.atoms();
    const double mass = mu.total_mass();
    auto g_sign = [&](double x) {
        double f = f_at(mu, x, 1e-12);
        if (f <= -t0) return +1;  // left of the pole the Moebius image blows up above t0/2
        return (t0 * f / (t0 + f) - t0 / 2 > 0) ? +1 : -1;
    };
    std::vector<Interval> right_parts;
    // Leftmost gap: f decreases to 0+ leftwards, so the component is (v, x_1)
    // with F_{t0}(v) = t0/2.
    {
        double x1 = atoms.front().x;
        double d = std::max(1.0, mass / t0);
        while (g_sign(x1 - d) > 0) d *= 2;
        double lo = x1 - d, hi = x1;
        for (int i = 0; i < 200; ++i) {
            double m = 0.5 * (lo + hi);
            if (g_sign(m) < 0) lo = m; else hi = m;
        }
        right_parts.push_back({0.5 * (lo + hi), x1});
    }
    // Bounded gaps: (x_j, u) with f(u) = -t0, then (v, x_{j+1}) with
    // F_{t0}(v) = t0/2 located right of the pole.
    for (std::size_t j = 0; j + 1 < atoms.size(); ++j) {
        double gl = atoms[j].x, gr = atoms[j + 1].x;
        double u = bisect_increasing(mu, -t0, gl, gr);
        right_parts.push_back({gl, u});
        double lo = u, hi = gr;
        for (int i = 0; i < 200; ++i) {
            double m = 0.5 * (lo + hi);
            if (m <= lo || m >= hi) break;
            if (g_sign(m) < 0) lo = m; else hi = m;
        }
        right_parts.push_back({0.5 * (lo + hi), gr});
    }
    // Rightmost gap: the component ends at the pole f = -t0.
    {
        double xn = atoms.back().x;
        double d = std::max(1.0, mass / t0);
        while (g_sign(xn + d) > 0) d *= 2;
        double lo = xn, hi = xn + d;
        for (int i = 0; i < 200; ++i) {
            double m = 0.5 * (lo + hi);
            if (m <= lo || m >= hi) break;
            if (g_sign(m) > 0) lo = m; else hi = m;
        }
        right_parts.push_back({xn, 0.5 * (lo + hi)});
    }
    IntervalUnion right(std::move(right_parts));

    double symdiff = left.symmetric_difference_length(right);
    rep.notes.push_back("symmetric difference " + std::to_string(symdiff));
    double margin = (1e-8 - symdiff) / 1e-8;
    ++rep.asserted_cases;

    // Herglotz spot check: the Moebius family maps C+ to C+.
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ux(-10.0, 10.0), uy(1e-3, 5.0);
    for (int i = 0; i < 100; ++i) {
        std::complex<double> z(ux(rng), uy(rng));
        if (!(mobius(mu, t0, z).imag() > 0)) {
            margin = std::min(margin, -1.0);
            rep.notes.push_back("Herglotz violation at a sampled point");
        }
        ++rep.asserted_cases;
    }
    rep.margin = margin;
    rep.finalize(0.0);
    return rep;
}

CheckReport check_poltoratski(const Measure& mu, const std::vector<double>& g,
                              const std::vector<double>& t_grid) {
    require_positive_grid(t_grid);
    if (!mu.purely_atomic() || mu.is_zero())
        throw std::invalid_argument("check_poltoratski: measure must be purely atomic and nonzero");
    if (g.empty() || g.size() > 7)
        throw std::invalid_argument("check_poltoratski: polynomial degree must be at most 6");
    CheckReport rep;
    rep.check_id = "poltoratski";
    rep.inputs_echo = {{"measure", measure_to_json(mu)}, {"g", nlohmann::json(g)},
                       {"t_grid", grid_json(t_grid)}};
    const double mass = mu.total_mass();
    double target = 0.0;
    for (const auto& a : mu.atoms()) {
        double p = 0.0;
        for (std::size_t k = g.size(); k-- > 0;) p = p * a.x + g[k];
        target += a.w * p;
    }
    const double denom = std::max(std::abs(target), mass);

    double margin = std::numeric_limits<double>::infinity();
    std::vector<double> err;
    for (double t : t_grid) {
        WeakLimitMeasure wl = weak_limit_measure(mu, t);
        double mass_rel = std::abs(wl.mass() - mass) / mass;
        margin = std::min(margin, (1e-12 - mass_rel) / 1e-12);
        ++rep.asserted_cases;
        double moment = wl.height * integrate_polynomial(g, wl.support);
        err.push_back(std::abs(moment - target));
    }
    for (std::size_t i = tail_start(err.size()); i + 1 < err.size(); ++i) {
        margin = std::min(margin, (err[i] - err[i + 1]) / denom + 1e-9);
        ++rep.asserted_cases;
    }
    margin = std::min(margin, 0.01 - err.back() / denom);
    ++rep.asserted_cases;
    rep.margin = margin;
    rep.finalize(0.0);
    return rep;
}

CheckReport check_prop52(const Measure& mu, const Measure& nu, double c,
                         const std::vector<double>& t_grid) {
    require_positive_grid(t_grid);
    if (!(c > 0)) throw std::invalid_argument("check_prop52: c must be positive");
    if (!mu.purely_atomic() || !nu.purely_atomic() || mu.is_zero() || nu.is_zero())
        throw std::invalid_argument("check_prop52: both measures must be purely atomic and nonzero");
    CheckReport rep;
    rep.check_id = "prop52";
    rep.inputs_echo = {{"mu", measure_to_json(mu)}, {"nu", measure_to_json(nu)},
                       {"c", c}, {"t_grid", grid_json(t_grid)}};
    if (!Measure::mutually_singular(mu, nu)) {
        rep.precondition_violation = true;
        rep.notes.push_back("measures are not mutually singular; nothing asserted");
        rep.finalize(0.0);
        return rep;
    }
    const double min_mass = std::min(mu.total_mass(), nu.total_mass());
    auto pts = intersection_decay(mu, nu, c, t_grid);
    std::vector<double> y;
    for (const auto& p : pts) y.push_back(p.t_lambda);
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = tail_start(y.size()); i + 1 < y.size(); ++i) {
        margin = std::min(margin, (y[i] - y[i + 1]) / min_mass + 1e-9);
        ++rep.asserted_cases;
    }
    margin = std::min(margin, 0.01 - y.back() / min_mass);
    ++rep.asserted_cases;
    rep.margin = margin;
    rep.finalize(0.0);
    return rep;
}

}  // namespace hm
