#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>

#include "hm/level_sets.hpp"
#include "hm/measure.hpp"
#include "hm/transform.hpp"

using namespace hm;

namespace {

const double kPi = std::acos(-1.0);

Measure delta0() { return Measure::make({{0.0, 1.0}}, {}); }
Measure uniform01() { return Measure::make({}, {{0.0, 1.0, 1.0}}); }

Measure random_atomic(std::mt19937& rng, int max_atoms) {
    std::uniform_real_distribution<double> pos(-10.0, 10.0), w(0.01, 1.0);
    int n = 1 + static_cast<int>(rng() % max_atoms);
    std::vector<Atom> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back({pos(rng), w(rng)});
    return Measure::make(std::move(atoms), {});
}

// grid scan oracle for {|Re F| > t}
IntervalUnion grid_oracle(const Measure& mu, double t, double lo, double hi, int n) {
    std::vector<Interval> parts;
    double step = (hi - lo) / n;
    bool in = false;
    double start = 0.0;
    for (int i = 0; i <= n; ++i) {
        double x = lo + i * step;
        bool above = false;
        BoundaryValue b = stieltjes_boundary(mu, x);
        if (b.kind == BoundaryKind::pole)
            above = true;
        else
            above = std::abs(b.value.real()) > t;
        if (above && !in) { in = true; start = x; }
        if (!above && in) { in = false; parts.push_back({start, x}); }
    }
    if (in) parts.push_back({start, hi});
    return IntervalUnion(std::move(parts));
}

}  // namespace

TEST_CASE("single atom level set endpoints") {
    LevelSet ls = gamma(delta0(), kPi, LevelSign::pos);
    CHECK(ls.exact);
    REQUIRE(ls.set.size() == 1);
    CHECK(ls.set.parts()[0].left == doctest::Approx(-1.0 / kPi).epsilon(1e-12));
    CHECK(ls.set.parts()[0].right == doctest::Approx(0.0).epsilon(1e-12));
    LevelSet neg = gamma(delta0(), kPi, LevelSign::neg);
    CHECK(neg.set.parts()[0].right == doctest::Approx(1.0 / kPi).epsilon(1e-12));
}

TEST_CASE("Boole identity for random atomic measures") {
    std::mt19937 rng(101);
    for (int rep = 0; rep < 30; ++rep) {
        Measure mu = random_atomic(rng, 16);
        double mass = mu.total_mass();
        for (double scale : {0.3, 1.0, 8.0}) {
            double t = scale * mass;
            for (LevelSign s : {LevelSign::pos, LevelSign::neg}) {
                double lambda = gamma(mu, kPi * t, s).set.length();
                CHECK(std::abs(kPi * t * lambda - mass) <= 1e-9 * mass);
            }
        }
    }
}

TEST_CASE("level sets are nested in t") {
    std::mt19937 rng(103);
    for (int rep = 0; rep < 10; ++rep) {
        Measure mu = random_atomic(rng, 8);
        IntervalUnion big = gamma(mu, 0.5, LevelSign::abs).set;
        IntervalUnion small = gamma(mu, 5.0, LevelSign::abs).set;
        CHECK(big.contains_set(small, 1e-9));
    }
}

TEST_CASE("uniform density closed form on the support") {
    Measure u = uniform01();
    IntervalUnion s({{0.0, 1.0}});
    for (double t : {1.0, 3.0, 10.0, 20.0}) {
        double lambda = distribution(u, t, s, TransformKind::F);
        CHECK(std::abs(lambda - 2.0 / (1.0 + std::exp(t))) < 1e-6);
    }
    // whole-line set gains the exterior tail (exp(t)-1)^-1 on each side
    double lam_all = distribution(u, 3.0, std::nullopt, TransformKind::F);
    double expect = 2.0 / (1.0 + std::exp(3.0)) + 2.0 / (std::exp(3.0) - 1.0);
    CHECK(std::abs(lam_all - expect) < 1e-6);
}

TEST_CASE("H thresholds are F thresholds scaled by pi") {
    std::mt19937 rng(107);
    Measure mu = random_atomic(rng, 6);
    double a = distribution(mu, 2.0, std::nullopt, TransformKind::H);
    double b = distribution(mu, 2.0 * kPi, std::nullopt, TransformKind::F);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("subadditivity of the distribution under sums") {
    std::mt19937 rng(109);
    for (int rep = 0; rep < 10; ++rep) {
        Measure mu = random_atomic(rng, 5);
        Measure nu = random_atomic(rng, 5);
        std::vector<Atom> both = mu.atoms();
        for (const auto& a : nu.atoms()) both.push_back(a);
        Measure sum = Measure::make(both, {});
        for (double theta : {0.25, 0.5, 0.75}) {
            double t = 2.0;
            double lhs = distribution(sum, t, std::nullopt, TransformKind::H);
            double rhs = distribution(mu, theta * t, std::nullopt, TransformKind::H) +
                         distribution(nu, (1 - theta) * t, std::nullopt, TransformKind::H);
            CHECK(lhs <= rhs + 1e-9);
        }
    }
}

TEST_CASE("tail sweep validates the grid and scales as mass/(pi t)") {
    Measure mu = delta0();
    CHECK_THROWS(tail_sweep(mu, {2.0, 1.0}, std::nullopt));
    CHECK_THROWS(tail_sweep(mu, {-1.0, 1.0}, std::nullopt));
    auto pts = tail_sweep(mu, {1.0, 2.0, 4.0}, std::nullopt);
    for (const auto& p : pts) CHECK(p.t_lambda == doctest::Approx(2.0 / kPi).epsilon(1e-9));
}

TEST_CASE("weak limit measure has full mass") {
    std::mt19937 rng(113);
    for (int rep = 0; rep < 10; ++rep) {
        Measure mu = random_atomic(rng, 6);
        for (double t : {1.0, 10.0}) {
            WeakLimitMeasure wl = weak_limit_measure(mu, t);
            CHECK(wl.mass() == doctest::Approx(mu.total_mass()).epsilon(1e-9));
        }
    }
}

TEST_CASE("intersection decay vanishes for far-separated atoms") {
    Measure mu = delta0();
    Measure nu = Measure::make({{1.0, 1.0}}, {});
    auto pts = intersection_decay(mu, nu, 1.0, {1.0, 10.0, 100.0});
    CHECK(pts[1].lambda == 0.0);  // components have radius 1/(pi t) < 1/2
    CHECK(pts[2].lambda == 0.0);
}

TEST_CASE("atom-free interval level set matches gamma") {
    Measure mu = Measure::make({{0.0, 1.0}, {3.0, 0.5}}, {});
    double t = 2.0;
    IntervalUnion direct = levelset_on_atomfree_interval(mu, t, 0.5, 2.5);
    IntervalUnion full = gamma(mu, t, LevelSign::abs).set.intersect_interval(0.5, 2.5);
    CHECK(direct.symmetric_difference_length(full) < 1e-9);
}

TEST_CASE("polynomial integration over unions") {
    IntervalUnion s({{0.0, 1.0}, {2.0, 3.0}});
    // x^2 over [0,1] u [2,3] = 1/3 + (27-8)/3
    CHECK(integrate_polynomial({0.0, 0.0, 1.0}, s) ==
          doctest::Approx(1.0 / 3 + 19.0 / 3).epsilon(1e-14));
    CHECK(integrate_polynomial({1.0}, s) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("exact level sets agree with a dense grid oracle") {
    std::mt19937 rng(127);
    for (int rep = 0; rep < 5; ++rep) {
        Measure mu = random_atomic(rng, 6);
        double t = mu.total_mass();
        IntervalUnion exact = gamma(mu, kPi * t, LevelSign::abs).set;
        double lo = exact.min() - 1.0, hi = exact.max() + 1.0;
        int n = 200000;
        IntervalUnion oracle = grid_oracle(mu, kPi * t, lo, hi, n);
        CHECK(exact.symmetric_difference_length(oracle) <
              10.0 * (hi - lo) / n * (2.0 * mu.atoms().size() + 2.0));
    }
}

TEST_CASE("mixed measures fall back to the flagged approximate path") {
    Measure m = Measure::make({{0.0, 1.0}}, {{0.0, 1.0, 1.0}});
    LevelSet ls = gamma(m, 5.0, LevelSign::abs);
    CHECK_FALSE(ls.exact);
    CHECK(ls.resolution > 0.0);
    // measure of {|f| > t} sandwiched between the components of the parts
    double lam = ls.set.length();
    CHECK(lam > 0.0);
    CHECK(lam < 4.0);
}
