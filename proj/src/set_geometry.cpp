#include "hm/set_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hm {

namespace {

std::vector<double> all_endpoints(const IntervalUnion& e) {
    std::vector<double> out;
    for (const auto& iv : e.parts()) {
        out.push_back(iv.left);
        out.push_back(iv.right);
    }
    return out;
}

struct Candidate {
    double ratio, x, a;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    if (a.a != b.a) return a.a < b.a;
    return a.x < b.x;
}

}  // namespace

double window_measure(const IntervalUnion& e, double x, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("window_measure: a must be positive");
    return e.window_length(x, a);
}

HomogeneityReport homogeneity_delta(const IntervalUnion& e) {
    if (e.empty()) throw std::invalid_argument("homogeneity_delta: empty set");
    const double diam = e.diam();
    if (!(diam > 0.0)) throw std::invalid_argument("homogeneity_delta: degenerate set");

    std::vector<double> eps = all_endpoints(e);
    Candidate best{2.0, 0.0, 0.0};

    auto consider = [&](double x, double a) {
        if (!(a > 0.0) || !(a < diam)) return;
        if (!e.contains(x)) return;
        Candidate c{window_measure(e, x, a) / (2.0 * a), x, a};
        if (better(c, best)) best = c;
    };

    // Arrangement vertices: endpoint x with kink a, and endpoint-pair
    // midpoints at half distance.
    for (double x : eps) {
        for (double ei : eps) consider(x, std::abs(x - ei));
        for (int k = 1; k <= 50; ++k)
            consider(x, diam * (1.0 - std::ldexp(1.0, -k)));  // a -> diam- ladder
        // a -> 0+: inside the first kink cell the window grows from zero
        // linearly, so the ratio is constant there: 1/2 at a part endpoint,
        // 1 in the interior. Computing this analytically avoids the
        // catastrophic cancellation of x + a for tiny a.
        Candidate limit0{0.5, x, 0.0};
        if (better(limit0, best)) best = limit0;
    }
    for (std::size_t i = 0; i < eps.size(); ++i)
        for (std::size_t j = i + 1; j < eps.size(); ++j) {
            double x = 0.5 * (eps[i] + eps[j]);
            consider(x, 0.5 * std::abs(eps[j] - eps[i]));
        }

    // Cross-check grid; any grid value is a genuine function value, so
    // taking it into the minimum can only tighten the estimate.
    const int nx = 1000, na = 1000;
    double total_len = e.length();
    for (const auto& iv : e.parts()) {
        int m = std::max(2, static_cast<int>(nx * iv.length() / total_len));
        for (int i = 0; i <= m; ++i) {
            double x = iv.left + iv.length() * i / m;
            for (int k = 1; k < na; ++k) consider(x, diam * k / na);
        }
    }

    // Local coordinate-descent refinement around the winner.
    double step = diam / na;
    for (int it = 0; it < 60; ++it) {
        Candidate cur = best;
        consider(cur.x + step, cur.a);
        consider(cur.x - step, cur.a);
        consider(cur.x, cur.a + step);
        consider(cur.x, cur.a - step);
        if (!better(best, cur)) step *= 0.5;
        if (step < 1e-15 * diam) break;
    }

    return {best.ratio, best.x, best.a, diam, 1e-6 * diam};
}

double min_window_ratio(const IntervalUnion& e, double x, double amax) {
    if (!e.contains(x)) throw std::invalid_argument("min_window_ratio: x not in E");
    if (!(amax > 0.0)) throw std::invalid_argument("min_window_ratio: amax must be positive");

    // a -> 0+ limit: 1 at interior points, 1/2 at part endpoints.
    double limit0 = 1.0;
    for (const auto& iv : e.parts())
        if (x == iv.left || x == iv.right) limit0 = 0.5;

    double m = limit0;
    auto consider = [&](double a) {
        if (!(a > 0.0)) return;
        m = std::min(m, e.window_length(x, a) / (2.0 * a));
    };
    // The ratio is monotone in a between kinks, so the minimum over the
    // open interval (0, amax) is over kinks and the endpoint limits.
    for (double ei : all_endpoints(e)) {
        double d = std::abs(x - ei);
        if (d > 0.0 && d < amax) consider(d);
    }
    consider(amax);
    return m;
}

DensityProfile density_profile(const IntervalUnion& e, double x0,
                               const std::vector<double>& a_seq) {
    if (!e.contains(x0)) throw std::invalid_argument("density_profile: x0 not in E");
    for (std::size_t i = 0; i < a_seq.size(); ++i) {
        if (!(a_seq[i] > 0.0)) throw std::invalid_argument("density_profile: a must be positive");
        if (i > 0 && !(a_seq[i] < a_seq[i - 1]))
            throw std::invalid_argument("density_profile: a_seq must be decreasing");
    }
    DensityProfile p;
    p.x0 = x0;
    double hi = 0.0, lo = 1.0;
    for (double a : a_seq) {
        double r = e.window_length(x0, a) / (2.0 * a);
        p.samples.push_back({a, r});
        hi = std::max(hi, r);
        lo = std::min(lo, r);
    }
    p.limsup_estimate = a_seq.empty() ? 0.0 : hi;
    p.liminf_estimate = a_seq.empty() ? 0.0 : lo;
    return p;
}

IntervalUnion en_subset(const IntervalUnion& e, int n, int samples_per_cell) {
    if (n < 1) throw std::invalid_argument("en_subset: n must be positive");
    const double amax = 1.0 / n;
    const double thresh = 1.0 / n;

    auto q = [&](double x) { return min_window_ratio(e, x, amax) - thresh; };

    std::vector<Interval> result;
    for (const auto& part : e.parts()) {
        // Structural breakpoints inside the part: other endpoints shifted
        // by ±1/n (where the kink set changes).
        std::set<double> cuts{part.left, part.right};
        for (double ei : all_endpoints(e)) {
            for (double c : {ei - amax, ei + amax, ei})
                if (part.left < c && c < part.right) cuts.insert(c);
        }
        std::vector<double> cut(cuts.begin(), cuts.end());

        std::vector<double> xs;
        for (std::size_t ci = 0; ci + 1 < cut.size(); ++ci) {
            double a = cut[ci], b = cut[ci + 1];
            int m = std::max(
                16, static_cast<int>(samples_per_cell * (b - a) / (part.right - part.left)));
            for (int i = 0; i <= m; ++i) {
                double x = a + (b - a) * (i + 0.5) / (m + 1);
                xs.push_back(x);
            }
        }
        if (xs.empty()) continue;

        std::vector<double> qs(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) qs[i] = q(xs[i]);

        bool in = qs[0] >= 0.0;
        double open_at = in ? part.left : 0.0;
        for (std::size_t i = 1; i < xs.size(); ++i) {
            bool in_next = qs[i] >= 0.0;
            if (in_next != in) {
                double a = xs[i - 1], b = xs[i];
                for (int it = 0; it < 120; ++it) {
                    double mid = 0.5 * (a + b);
                    if (!(a < mid && mid < b)) break;
                    bool above = q(mid) >= 0.0;
                    if (above == in_next)
                        b = mid;
                    else
                        a = mid;
                }
                double root = 0.5 * (a + b);
                if (in_next)
                    open_at = root;
                else if (root > open_at)
                    result.push_back({open_at, root});
                in = in_next;
            }
        }
        if (in && part.right > open_at) result.push_back({open_at, part.right});
    }
    return IntervalUnion(std::move(result));
}

}  // namespace hm
