#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hm/measure.hpp"

using namespace hm;

TEST_CASE("atoms are sorted and merged") {
    Measure mu = Measure::make({{2.0, 0.5}, {-1.0, 0.25}, {2.0 + 5e-15, 0.25}}, {});
    REQUIRE(mu.atoms().size() == 2);
    CHECK(mu.atoms()[0].x == -1.0);
    CHECK(mu.atoms()[1].x == 2.0);
    CHECK(mu.atoms()[1].w == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("validation rejects bad input") {
    CHECK_THROWS_AS(Measure::make({{0.0, 0.0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Measure::make({{0.0, -1.0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Measure::make({}, {{0.0, 1.0, -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(Measure::make({}, {{1.0, 0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Measure::make({}, {{0.0, 2.0, 1.0}, {1.0, 3.0, 1.0}}),
                    std::invalid_argument);
}

TEST_CASE("adjacent equal-height pieces fuse, zero-height pieces drop") {
    Measure mu = Measure::make({}, {{0.0, 1.0, 2.0}, {1.0, 2.0, 2.0}, {3.0, 4.0, 0.0}});
    REQUIRE(mu.density().size() == 1);
    CHECK(mu.density()[0].a == 0.0);
    CHECK(mu.density()[0].b == 2.0);
}

TEST_CASE("mass is additive over parts") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pos(-5.0, 5.0), w(0.01, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Atom> atoms;
        double expect = 0.0;
        for (int i = 0; i < 8; ++i) {
            atoms.push_back({pos(rng), w(rng)});
            expect += atoms.back().w;
        }
        Measure mu = Measure::make(atoms, {{6.0, 7.5, 0.4}});
        expect += 1.5 * 0.4;
        CHECK(mu.total_mass() == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("restrict keeps atoms in the set and clips pieces") {
    Measure mu = Measure::make({{0.5, 1.0}, {2.5, 1.0}}, {{0.0, 2.0, 1.0}});
    IntervalUnion s({{0.0, 1.0}});
    Measure r = mu.restrict(s);
    REQUIRE(r.atoms().size() == 1);
    CHECK(r.atoms()[0].x == 0.5);
    REQUIRE(r.density().size() == 1);
    CHECK(r.density()[0].b == 1.0);
    CHECK(r.total_mass() == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("restrict complement is complementary in mass") {
    Measure mu = Measure::make({{0.25, 0.3}, {1.5, 0.7}}, {{0.0, 3.0, 0.5}});
    IntervalUnion s({{0.0, 1.0}});
    IntervalUnion comp = IntervalUnion({{-10.0, 10.0}}).subtract(s);
    double m = mu.restrict(s).total_mass() + mu.restrict(comp).total_mass();
    // the atom boundary may be double-counted only if it sits on an endpoint
    CHECK(m == doctest::Approx(mu.total_mass()).epsilon(1e-12));
}

TEST_CASE("decompose splits a.c. and singular parts") {
    Measure mu = Measure::make({{0.0, 1.0}}, {{0.0, 1.0, 1.0}});
    auto [ac, sing] = mu.decompose();
    CHECK(ac.purely_ac());
    CHECK(sing.purely_atomic());
    CHECK(ac.total_mass() + sing.total_mass() ==
          doctest::Approx(mu.total_mass()).epsilon(1e-15));
}

TEST_CASE("mutual singularity detects shared atoms") {
    Measure a = Measure::make({{0.0, 1.0}, {1.0, 1.0}}, {});
    Measure b = Measure::make({{0.5, 1.0}}, {});
    Measure c = Measure::make({{1.0, 2.0}}, {});
    CHECK(Measure::mutually_singular(a, b));
    CHECK_FALSE(Measure::mutually_singular(a, c));
}

TEST_CASE("scaling and shifting") {
    Measure mu = Measure::make({{1.0, 0.5}}, {{2.0, 3.0, 1.0}});
    CHECK(mu.scaled(3.0).total_mass() == doctest::Approx(4.5).epsilon(1e-15));
    Measure sh = mu.shifted(10.0);
    CHECK(sh.atoms()[0].x == 11.0);
    CHECK(sh.density()[0].a == 12.0);
    CHECK(sh.total_mass() == doctest::Approx(mu.total_mass()).epsilon(1e-15));
}

TEST_CASE("support hull") {
    Measure mu = Measure::make({{-2.0, 1.0}}, {{0.0, 5.0, 0.1}});
    CHECK(mu.support_min() == -2.0);
    CHECK(mu.support_max() == 5.0);
    CHECK_THROWS_AS(Measure().support_min(), std::domain_error);
}
