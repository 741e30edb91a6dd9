#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hm/interval_union.hpp"
#include "hm/set_geometry.hpp"

using namespace hm;

namespace {

IntervalUnion random_union(std::mt19937& rng, int max_parts) {
    std::uniform_real_distribution<double> u(0.0, 10.0), len(0.2, 2.0);
    std::vector<Interval> parts;
    int n = 1 + static_cast<int>(rng() % max_parts);
    for (int i = 0; i < n; ++i) {
        double a = u(rng);
        parts.push_back({a, a + len(rng)});
    }
    return IntervalUnion(std::move(parts));
}

// brute-force infimum of the window ratio on a dense (x,a) grid
double delta_oracle(const IntervalUnion& e, int nx, int na) {
    double diam = e.diam();
    double best = 1.0;
    for (const auto& part : e.parts()) {
        for (int i = 0; i <= nx; ++i) {
            double x = part.left + (part.right - part.left) * i / nx;
            for (int j = 1; j < na; ++j) {
                double a = diam * j / na;
                best = std::min(best, window_measure(e, x, a) / (2 * a));
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("window measure basics") {
    IntervalUnion e({{0.0, 1.0}});
    CHECK(window_measure(e, 0.5, 0.25) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(window_measure(e, 0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(window_measure(e, 2.0, 0.5) == 0.0);
    CHECK(window_measure(e, 1.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("window measure is Lipschitz in x and a") {
    std::mt19937 rng(3);
    IntervalUnion e = random_union(rng, 4);
    std::uniform_real_distribution<double> ux(-1.0, 11.0), ua(0.01, 5.0), eps(1e-4, 0.1);
    for (int i = 0; i < 500; ++i) {
        double x = ux(rng), a = ua(rng), h = eps(rng);
        CHECK(std::abs(window_measure(e, x + h, a) - window_measure(e, x, a)) <= 2 * h + 1e-12);
        CHECK(std::abs(window_measure(e, x, a + h) - window_measure(e, x, a)) <= 2 * h + 1e-12);
    }
}

TEST_CASE("homogeneity of a single interval is 1/2") {
    HomogeneityReport r = homogeneity_delta(IntervalUnion({{0.0, 1.0}}));
    CHECK(r.delta == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.diam == 1.0);
}

TEST_CASE("homogeneity of two unit intervals with a unit gap is 1/4") {
    HomogeneityReport r = homogeneity_delta(IntervalUnion({{0.0, 1.0}, {2.0, 3.0}}));
    CHECK(r.delta == doctest::Approx(0.25).epsilon(1e-9));
    // witnessed at an endpoint with the window just covering one part
    CHECK(window_measure(IntervalUnion({{0.0, 1.0}, {2.0, 3.0}}), r.witness_x, r.witness_a) /
              (2 * r.witness_a) ==
          doctest::Approx(r.delta).epsilon(1e-9));
}

TEST_CASE("homogeneity matches the brute-force oracle") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 8; ++rep) {
        IntervalUnion e = random_union(rng, 3);
        HomogeneityReport r = homogeneity_delta(e);
        double oracle = delta_oracle(e, 400, 400);
        CHECK(r.delta <= oracle + 1e-9);
        CHECK(r.delta >= oracle - 0.02);  // the oracle grid overshoots the infimum
    }
}

TEST_CASE("min window ratio is the restricted infimum") {
    IntervalUnion e({{0.0, 1.0}, {2.0, 3.0}});
    // interior point, small radius cap: ratio stays 1
    CHECK(min_window_ratio(e, 0.5, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
    // endpoint: half windows only
    CHECK(min_window_ratio(e, 0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    // radius past the gap dips to 1/4 at a = 2 from x = 0
    CHECK(min_window_ratio(e, 0.0, 2.5) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK_THROWS(min_window_ratio(e, 1.5, 1.0));
}

TEST_CASE("min window ratio matches dense sampling") {
    std::mt19937 rng(19);
    for (int rep = 0; rep < 6; ++rep) {
        IntervalUnion e = random_union(rng, 3);
        const auto& p = e.parts()[rng() % e.size()];
        double x = p.left + (p.right - p.left) * 0.37;
        double amax = 0.8 * e.diam();
        double exact = min_window_ratio(e, x, amax);
        double sampled = 1.0;
        for (int j = 1; j <= 20000; ++j) {
            double a = amax * j / 20001.0;
            sampled = std::min(sampled, window_measure(e, x, a) / (2 * a));
        }
        CHECK(exact <= sampled + 1e-12);
        CHECK(exact >= sampled - 1e-3);
    }
}

TEST_CASE("density profile brackets the ratio") {
    IntervalUnion e({{0.0, 1.0}});
    DensityProfile p = density_profile(e, 0.25, {0.5, 0.25, 0.1, 0.01});
    CHECK(p.limsup_estimate >= p.liminf_estimate);
    CHECK(p.liminf_estimate > 0.0);
    CHECK(p.samples.size() == 4);
}

TEST_CASE("en subset of a single interval") {
    IntervalUnion e({{0.0, 1.0}});
    // interior windows are full, boundary ratio is 1/2 >= 1/n for n >= 2
    IntervalUnion e2 = en_subset(e, 2);
    CHECK(e2.symmetric_difference_length(e) < 1e-6);
    // n = 1 requires full windows at every radius below 1: impossible
    CHECK(en_subset(e, 1).length() < 1e-6);
}

TEST_CASE("en subsets are nested and contained in E") {
    IntervalUnion e({{0.0, 1.0}, {1.5, 1.8}, {4.0, 4.2}});
    IntervalUnion prev;
    for (int n = 2; n <= 5; ++n) {
        IntervalUnion en = en_subset(e, n);
        CHECK(e.contains_set(en, 1e-9));
        if (!prev.empty()) CHECK(en.contains_set(prev, 1e-6));
        prev = en;
    }
}

TEST_CASE("en subset agrees with a pointwise oracle") {
    IntervalUnion e({{0.0, 1.0}, {1.2, 1.5}});
    int n = 3;
    IntervalUnion en = en_subset(e, n);
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(0.0, 1.5);
    for (int i = 0; i < 300; ++i) {
        double x = u(rng);
        if (!e.contains(x)) continue;
        double q = min_window_ratio(e, x, 1.0 / n) - 1.0 / n;
        if (q > 1e-4) CHECK(en.contains(x));
        if (q < -1e-4) CHECK_FALSE(en.contains(x));
    }
}
