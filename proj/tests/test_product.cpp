#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "subdyn/corpus.hpp"
#include "subdyn/product.hpp"
#include "testutil.hpp"

using namespace subdyn;
using testutil::random_rat;

namespace {
Rat r(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }
}  // namespace

TEST_CASE("regime trichotomy by exact comparison with 1") {
    CHECK(frac_classify(FracMap(2, 1)) == FracRegime::AttractsToZero);
    CHECK(frac_classify(FracMap(3, 2)) == FracRegime::AttractsToZero);
    CHECK(frac_classify(FracMap(1, 2)) == FracRegime::Exact);
    CHECK(frac_classify(FracMap(1, 4)) == FracRegime::Exact);
    CHECK(frac_classify(FracMap(99, 100)) == FracRegime::Exact);
    CHECK(frac_classify(FracMap(1, 1)) == FracRegime::GenericNotErgodic);
    CHECK(frac_classify(FracMap(7, 7)) == FracRegime::GenericNotErgodic);
    CHECK_THROWS_AS(FracMap(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(FracMap(1, 0), std::invalid_argument);
    CHECK(std::string(regime_name(FracRegime::Exact)) == "Exact");
}

TEST_CASE("corpus regimes match") {
    for (const NamedMap& nm : corpus()) {
        if (!nm.is_frac()) continue;
        REQUIRE(nm.expected.regime.has_value());
        CHECK(frac_classify(nm.frac()) == *nm.expected.regime);
    }
}

TEST_CASE("map evaluation: symmetry, fixed points, sample values") {
    FracMap unit(1, 1);
    CHECK(frac_eval(unit, r(2, 5)) == r(2, 3));
    CHECK(frac_eval(unit, r(3, 5)) == r(2, 3));  // symmetric
    CHECK(frac_eval(unit, r(0)) == r(0));
    CHECK(frac_eval(unit, r(1)) == r(0));
    CHECK(frac_eval(unit, r(1, 2)) == r(1));
    FracMap q14(1, 4);
    // x/((1-1/2)x+1/4) at x=1/4: (1/4)/(1/8+1/4) = 2/3
    CHECK(frac_eval(q14, r(1, 4)) == r(2, 3));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rat x = random_rat(rng, 50);
        CHECK(frac_eval(q14, x) == frac_eval(q14, Rat(1) - x));
        double xd = x.to_double();
        CHECK(std::fabs(frac_eval(q14, xd) - frac_eval(q14, x).to_double()) < 1e-12);
    }
    CHECK_THROWS_AS(frac_eval(unit, r(3, 2)), std::domain_error);
}

TEST_CASE("continued fractions: canonical expansion and round trip") {
    CHECK(cf_expand(r(2, 5)).digits == std::vector<Int>{Int(2), Int(2)});
    CHECK(cf_expand(r(1, 3)).digits == std::vector<Int>{Int(3)});
    CHECK(cf_expand(r(1)).digits == std::vector<Int>{Int(1)});
    CHECK(cf_expand(r(0)).digits.empty());
    CHECK(cf_expand(r(5, 7)).digits == std::vector<Int>{Int(1), Int(2), Int(2)});
    CHECK(cf_value(cf_expand(r(5, 7))) == r(5, 7));
    CHECK(cf_value(CFExpansion{}) == r(0));
    CHECK_THROWS(cf_value(CFExpansion{{Int(0)}}));

    std::mt19937_64 rng(22);
    for (int i = 0; i < 300; ++i) {
        Rat x = random_rat(rng, 2000);
        CFExpansion e = cf_expand(x);
        CHECK(cf_value(e) == x);
        // canonical form: the last digit is >= 2 unless the expansion is [1]
        if (!e.digits.empty() && !(e.digits.size() == 1 && e.digits[0] == 1))
            CHECK(e.digits.back() >= 2);
    }
}

TEST_CASE("Gauss step shifts the digit sequence") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
        Rat x = random_rat(rng, 500);
        if (x.is_zero()) continue;
        CFExpansion e = cf_expand(x);
        CFExpansion shifted{std::vector<Int>(e.digits.begin() + 1, e.digits.end())};
        CHECK(gauss_step(x) == cf_value(shifted));
    }
    CHECK(gauss_step(r(2, 5)) == r(1, 2));
    CHECK(gauss_step(r(0)) == r(0));
}

TEST_CASE("the q=1 map performs slow continued fractions") {
    CHECK(slow_cf_check(r(2, 5)));
    CHECK(slow_cf_check(r(1, 2)));
    CHECK(slow_cf_check(r(1)));
    CHECK(slow_cf_check(r(355, 613)));
    std::mt19937_64 rng(44);
    for (int i = 0; i < 300; ++i) {
        Rat x = random_rat(rng, 1000);
        if (x.is_zero()) continue;
        INFO(x.str());
        CHECK(slow_cf_check(x));
    }
    CHECK_THROWS_AS(slow_cf_check(r(0)), std::domain_error);
}

TEST_CASE("block frequencies witness non-ergodicity at q=1") {
    CHECK(block_frequency_check(r(2, 5)));
    std::mt19937_64 rng(55);
    for (int i = 0; i < 100; ++i) {
        Rat x = random_rat(rng, 400);
        if (x.is_zero()) continue;
        INFO(x.str());
        CHECK(block_frequency_check(x));
    }
}

TEST_CASE("square map and the hyperbola invariant") {
    FracMap unit(1, 1);
    SquarePoint p{r(1, 2), r(1, 3)};
    SquarePoint next = square_step(p, unit);
    CHECK(next.x0 == r(2, 3));
    CHECK(next.x1 == r(1, 2));
    // for a=b=1 the product x0*x1 never decreases along orbits
    CHECK(hyperbola_monotone(SquarePoint{r(1, 3), r(2, 5)}, 25));
    CHECK(hyperbola_monotone(SquarePoint{r(9, 10), r(1, 7)}, 25));
    std::mt19937_64 rng(66);
    for (int i = 0; i < 50; ++i) {
        Rat x = random_rat(rng, 60), y = random_rat(rng, 60);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(hyperbola_monotone(SquarePoint{x, y}, 15));
    }
    CHECK_THROWS_AS(square_step(SquarePoint{r(0), r(1)}, unit), std::domain_error);
}

TEST_CASE("factored square-map orbits match dense orbits step by step") {
    FracMap unit(1, 1);
    std::mt19937_64 rng(66);
    for (int i = 0; i < 25; ++i) {
        Rat x = random_rat(rng, 40), y = random_rat(rng, 40);
        if (x.is_zero()) x = r(1, 40);
        if (y.is_zero()) y = r(1, 40);
        SquarePoint dense{x, y};
        FactoredSquareOrbit orbit(dense);
        for (int k = 0; k < 14; ++k) {
            dense = square_step(dense, unit);
            orbit.step(unit);
            REQUIRE(orbit.coordinate(0) == dense.x0);
            REQUIRE(orbit.coordinate(1) == dense.x1);
        }
        CHECK(hyperbola_monotone(SquarePoint{x, y}, 14) ==
              hyperbola_monotone_factored(SquarePoint{x, y}, 14));
    }
}

TEST_CASE("factored orbits sustain long exact hyperbola checks") {
    // dense reduced fractions reach ~10^5 bits within 40 of these steps;
    // the factored representation handles hundreds of steps immediately
    CHECK(hyperbola_monotone_factored(SquarePoint{r(11, 13), r(12, 25)}, 250));
    CHECK(hyperbola_monotone_factored(SquarePoint{r(1, 3), r(2, 5)}, 100));
    CHECK(hyperbola_monotone_factored(SquarePoint{r(1), r(1)}, 50));  // fixed point
    CHECK_THROWS_AS(FactoredSquareOrbit(SquarePoint{r(0), r(1)}), std::domain_error);
    CHECK_THROWS_AS(FactoredSquareOrbit(SquarePoint{r(1, 2), r(3, 2)}), std::domain_error);

    FactoredSquareOrbit orbit(SquarePoint{r(2, 3), r(2, 3)});
    CHECK(orbit.sign_log(orbit.product_exponents()) < 0);  // 4/9 < 1
    orbit.step(FracMap(1, 1));                             // equal pair -> (1, 2/3)
    CHECK(orbit.coordinate(0) == r(1));
    CHECK(orbit.coordinate(1) == r(2, 3));
}

TEST_CASE("derivative bounds for expanding parameters") {
    DerivBound d = deriv_bound_check(FracMap(1, 4), 10000);
    CHECK(d.reference == Catch::Approx(2.25).margin(1e-12));  // (2q+1)^2 at q=1/4
    CHECK(d.min_abs_second >= d.reference - 1e-9);
    CHECK(d.min_abs_deriv > 0.0);

    DerivBound d3 = deriv_bound_check(FracMap(1, 3), 2000);
    CHECK(d3.min_abs_second >= d3.reference - 1e-9);

    CHECK_THROWS_AS(deriv_bound_check(FracMap(2, 1), 100), std::invalid_argument);
    CHECK_THROWS_AS(deriv_bound_check(FracMap(1, 4), 3), std::invalid_argument);
}
