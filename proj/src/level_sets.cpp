#include "hm/level_sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "hm/transform.hpp"

namespace hm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double eval_f(const Measure& mu, double x) { return boundary_real(mu, x); }

// Root of f = target on (lo, hi), where f is continuous on the open
// interval, f - target is negative near lo and positive near hi. The
// bracket is assumed guaranteed by the caller; bisection runs down to
// double resolution.
double bisect_root(const Measure& mu, double target, double lo, double hi) {
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (!(lo < mid && mid < hi)) break;
        if (eval_f(mu, mid) - target < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Exact path: purely atomic measures. F is strictly increasing on every
// gap, running from -inf (right of an atom) to +inf (left of the next),
// from 0+ to +inf on the bottom gap and from -inf to 0- on the top gap.
// Hence exactly one {F > t} component hangs off the left of each atom and
// one {F < -t} component off the right.
std::vector<Interval> atomic_pos_components(const Measure& mu, double t) {
    const auto& atoms = mu.atoms();
    double mass = mu.total_mass();
    std::vector<Interval> out;
    out.reserve(atoms.size());
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        double hi = atoms[j].x;
        double lo;
        if (j > 0) {
            lo = atoms[j - 1].x;
        } else {
            // |F| <= mass/dist below the support, so F < t once far enough out.
            double d = mass / t + 1.0;
            lo = hi - d;
            while (eval_f(mu, lo) >= t) {
                d *= 2.0;
                lo = hi - d;
            }
        }
        double r = bisect_root(mu, t, lo, hi);
        if (r < hi) out.push_back({r, hi});
    }
    return out;
}

std::vector<Interval> atomic_neg_components(const Measure& mu, double t) {
    const auto& atoms = mu.atoms();
    double mass = mu.total_mass();
    std::vector<Interval> out;
    out.reserve(atoms.size());
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        double lo = atoms[j].x;
        double hi;
        if (j + 1 < atoms.size()) {
            hi = atoms[j + 1].x;
        } else {
            double d = mass / t + 1.0;
            hi = lo + d;
            while (eval_f(mu, hi) <= -t) {
                d *= 2.0;
                hi = lo + d;
            }
        }
        double s = bisect_root(mu, -t, lo, hi);
        if (lo < s) out.push_back({lo, s});
    }
    return out;
}

// ---- mixed path: adaptive sign scan --------------------------------------

struct Segment {
    double left, right;
    bool left_singular, right_singular;
};

std::vector<double> segment_samples(const Segment& seg, int base_n) {
    std::set<double> pts;
    double w = seg.right - seg.left;
    for (int i = 1; i < base_n; ++i) pts.insert(seg.left + w * i / base_n);
    for (int k = 1; k <= 52; ++k) {
        double off = std::ldexp(w, -k);
        pts.insert(seg.left + off);
        pts.insert(seg.right - off);
    }
    if (!seg.left_singular) pts.insert(seg.left);
    if (!seg.right_singular) pts.insert(seg.right);
    std::vector<double> out;
    for (double p : pts)
        if (seg.left <= p && p <= seg.right) out.push_back(p);
    return out;
}

// {pred(f) } over one segment, pred(f) = (sgn * f > t).
void scan_segment(const Measure& mu, const Segment& seg, double sgn, double t, int base_n,
                  std::vector<Interval>& out) {
    std::vector<double> xs = segment_samples(seg, base_n);
    if (xs.size() < 2) return;
    std::vector<double> fs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fs[i] = sgn * eval_f(mu, xs[i]);

    bool in = fs[0] > t;
    // A component reaching the innermost ladder point is extended to the
    // singular endpoint itself; the gap below the ladder is 2^-52 of the
    // segment width and goes into the resolution figure.
    double open_at = in ? seg.left : 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        bool in_next = fs[i] > t;
        if (in_next != in) {
            double lo = xs[i - 1], hi = xs[i];
            // bisect sgn*f - t; orient the bracket
            double a = lo, b = hi;
            bool rising = in_next;
            for (int it = 0; it < 120; ++it) {
                double mid = 0.5 * (a + b);
                if (!(a < mid && mid < b)) break;
                double v = sgn * eval_f(mu, mid) - t;
                bool above = v > 0.0;
                if (above == rising)
                    b = mid;
                else
                    a = mid;
            }
            double root = 0.5 * (a + b);
            if (in_next)
                open_at = root;
            else if (root > open_at)
                out.push_back({open_at, root});
            in = in_next;
        }
    }
    if (in && seg.right > open_at) out.push_back({open_at, seg.right});
}

LevelSet mixed_gamma(const Measure& mu, double t, LevelSign sign, const LevelSetOptions& opts) {
    std::set<double> brk;
    for (const auto& a : mu.atoms()) brk.insert(a.x);
    for (const auto& p : mu.density()) {
        brk.insert(p.a);
        brk.insert(p.b);
    }
    double mass = mu.total_mass();
    double reach = mass / t * 4.0 + 1.0;
    std::vector<double> bs(brk.begin(), brk.end());

    std::vector<Segment> segs;
    segs.push_back({bs.front() - reach, bs.front(), false, true});
    for (std::size_t i = 0; i + 1 < bs.size(); ++i)
        segs.push_back({bs[i], bs[i + 1], true, true});
    segs.push_back({bs.back(), bs.back() + reach, true, false});

    std::vector<Interval> parts;
    double coarse = 0.0;
    for (const auto& seg : segs) {
        if (sign == LevelSign::pos || sign == LevelSign::abs)
            scan_segment(mu, seg, +1.0, t, opts.mixed_samples_per_segment, parts);
        if (sign == LevelSign::neg || sign == LevelSign::abs)
            scan_segment(mu, seg, -1.0, t, opts.mixed_samples_per_segment, parts);
        coarse = std::max(coarse, (seg.right - seg.left) / opts.mixed_samples_per_segment);
    }
    return {IntervalUnion(std::move(parts)), false, coarse};
}

}  // namespace

LevelSet gamma(const Measure& mu, double t, LevelSign sign, const LevelSetOptions& opts) {
    if (!(t > 0.0)) throw std::invalid_argument("gamma: threshold must be positive");
    if (mu.is_zero()) return {IntervalUnion{}, true, 0.0};
    if (!mu.purely_atomic()) return mixed_gamma(mu, t, sign, opts);

    std::vector<Interval> parts;
    if (sign == LevelSign::pos || sign == LevelSign::abs) {
        auto pos = atomic_pos_components(mu, t);
        parts.insert(parts.end(), pos.begin(), pos.end());
    }
    if (sign == LevelSign::neg || sign == LevelSign::abs) {
        auto neg = atomic_neg_components(mu, t);
        parts.insert(parts.end(), neg.begin(), neg.end());
    }
    return {IntervalUnion(std::move(parts)), true, 1e-12};
}

double distribution(const Measure& mu, double t, const std::optional<IntervalUnion>& s,
                    TransformKind kind, const LevelSetOptions& opts) {
    double tf = (kind == TransformKind::H) ? M_PI * t : t;
    LevelSet ls = gamma(mu, tf, LevelSign::abs, opts);
    if (s) return ls.set.intersect(*s).length();
    return ls.set.length();
}

std::vector<TailPoint> tail_sweep(const Measure& mu, const std::vector<double>& t_grid,
                                  const std::optional<IntervalUnion>& s, TransformKind kind,
                                  const LevelSetOptions& opts) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0)) throw std::invalid_argument("tail_sweep: grid must be positive");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("tail_sweep: grid must be strictly increasing");
    }
    std::vector<TailPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        double lambda = distribution(mu, t, s, kind, opts);
        out.push_back({t, lambda, t * lambda});
    }
    return out;
}

WeakLimitMeasure weak_limit_measure(const Measure& mu, double t) {
    if (!mu.purely_atomic())
        throw std::invalid_argument("weak_limit_measure: measure must be purely atomic");
    LevelSet ls = gamma(mu, M_PI * t, LevelSign::abs);
    return {ls.set, M_PI * t / 2.0};
}

std::vector<TailPoint> intersection_decay(const Measure& mu, const Measure& nu, double c,
                                          const std::vector<double>& t_grid) {
    if (!mu.purely_atomic() || !nu.purely_atomic())
        throw std::invalid_argument("intersection_decay: measures must be purely atomic");
    if (!(c > 0.0)) throw std::invalid_argument("intersection_decay: c must be positive");
    std::vector<TailPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        IntervalUnion a = gamma(mu, M_PI * t, LevelSign::abs).set;
        IntervalUnion b = gamma(nu, c * M_PI * t, LevelSign::abs).set;
        double lambda = a.intersect(b).length();
        out.push_back({t, lambda, t * lambda});
    }
    return out;
}

IntervalUnion levelset_on_atomfree_interval(const Measure& mu, double t, double p, double q) {
    if (!mu.purely_atomic())
        throw std::invalid_argument("levelset_on_atomfree_interval: measure must be atomic");
    if (!(p < q)) throw std::invalid_argument("levelset_on_atomfree_interval: p < q required");
    for (const auto& a : mu.atoms())
        if (p <= a.x && a.x <= q)
            throw std::invalid_argument("levelset_on_atomfree_interval: atom inside interval");

    double fp = eval_f(mu, p);
    double fq = eval_f(mu, q);
    std::vector<Interval> parts;
    // F is strictly increasing on the atom-free interval.
    if (fp >= t) {
        parts.push_back({p, q});
    } else if (fq >= t) {
        double r = bisect_root(mu, t, p, q);
        if (r < q) parts.push_back({r, q});
    }
    if (fq <= -t) {
        parts.push_back({p, q});
    } else if (fp <= -t) {
        double r = bisect_root(mu, -t, p, q);
        if (p < r) parts.push_back({p, r});
    }
    return IntervalUnion(std::move(parts));
}

double integrate_polynomial(const std::vector<double>& coeffs, const IntervalUnion& s) {
    auto antideriv = [&](double x) {
        double v = 0.0;
        double xp = x;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            v += coeffs[k] * xp / static_cast<double>(k + 1);
            xp *= x;
        }
        return v;
    };
    double total = 0.0;
    for (const auto& iv : s.parts()) total += antideriv(iv.right) - antideriv(iv.left);
    return total;
}

}  // namespace hm
