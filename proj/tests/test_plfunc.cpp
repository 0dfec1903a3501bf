#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "subdyn/plfunc.hpp"
#include "testutil.hpp"

using namespace subdyn;
using testutil::random_rat;
using testutil::random_term;
using testutil::rationals_up_to_den;

namespace {
Rat r(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

PLFunc tent() {
    return PLFunc::through_points({{r(0), r(0)}, {r(1, 2), r(1)}, {r(1), r(0)}});
}
}  // namespace

TEST_CASE("through_points derives integer pieces and merges collinear vertices") {
    PLFunc f = tent();
    REQUIRE(f.breakpoints() == std::vector<Rat>{r(0), r(1, 2), r(1)});
    REQUIRE(f.piece_count() == 2);
    CHECK(f.pieces()[0] == PLFunc::Piece{Int(2), Int(0)});
    CHECK(f.pieces()[1] == PLFunc::Piece{Int(-2), Int(2)});

    // (2/3, 2/3) is collinear inside the descending piece and must merge away.
    PLFunc g = PLFunc::through_points(
        {{r(0), r(1)}, {r(1, 3), r(2, 3)}, {r(1, 2), r(1)}, {r(2, 3), r(2, 3)}, {r(1), r(0)}});
    CHECK(g.breakpoints() == std::vector<Rat>{r(0), r(1, 3), r(1, 2), r(1)});
    CHECK(g.pieces() == std::vector<PLFunc::Piece>{{Int(-1), Int(1)}, {Int(2), Int(0)}, {Int(-2), Int(2)}});
}

TEST_CASE("validation rejects malformed data") {
    // non-integer slope between (0,0) and (1/3,1/2)
    CHECK_THROWS(PLFunc::through_points({{r(0), r(0)}, {r(1, 3), r(1, 2)}, {r(1), r(0)}}));
    // range leaves [0,1]
    CHECK_THROWS(PLFunc::make({r(0), r(1)}, {{Int(2), Int(0)}}));
    // breakpoints not increasing
    CHECK_THROWS(PLFunc::through_points({{r(0), r(0)}, {r(1, 2), r(1)}, {r(1, 2), r(0)}, {r(1), r(0)}}));
    // domain must start at 0 and end at 1
    CHECK_THROWS(PLFunc::through_points({{r(0), r(0)}, {r(1, 2), r(1)}}));
    // discontinuity
    CHECK_THROWS(PLFunc::make({r(0), r(1, 2), r(1)}, {{Int(2), Int(0)}, {Int(1), Int(-1)}}));
}

TEST_CASE("evaluation uses the left rule at breakpoints") {
    PLFunc f = tent();
    CHECK(f(r(0)) == r(0));
    CHECK(f(r(1, 4)) == r(1, 2));
    CHECK(f(r(1, 2)) == r(1));
    CHECK(f(r(3, 4)) == r(1, 2));
    CHECK(f(r(1)) == r(0));
    CHECK_THROWS_AS(f(r(2)), std::domain_error);
    CHECK(eval_pl(f, r(1, 3)) == r(2, 3));
}

TEST_CASE("identity, flip, constant") {
    CHECK(PLFunc::identity()(r(1, 3)) == r(1, 3));
    CHECK(PLFunc::flip()(r(1, 3)) == r(2, 3));
    CHECK(PLFunc::constant(1)(r(1, 3)) == r(1));
    CHECK(pl_equal(PLFunc::identity(), PLFunc::identity()));
    CHECK_FALSE(pl_equal(PLFunc::identity(), PLFunc::flip()));
}

TEST_CASE("pointwise connectives agree with value semantics") {
    PLFunc id = PLFunc::identity(), fl = PLFunc::flip(), tn = tent();
    std::vector<Rat> grid = rationals_up_to_den(16);
    for (const Rat& x : grid) {
        CHECK(luk_conj(id, id)(x) == luk_conj_val(x, x));
        CHECK(luk_conj(tn, fl)(x) == luk_conj_val(tn(x), fl(x)));
        CHECK(luk_impl(tn, id)(x) == luk_impl_val(tn(x), x));
        CHECK(luk_impl(id, tn)(x) == luk_impl_val(x, tn(x)));
        CHECK(luk_neg(tn)(x) == Rat(1) - tn(x));
    }
}

TEST_CASE("compose is function composition") {
    PLFunc tn = tent(), fl = PLFunc::flip();
    std::vector<Rat> grid = rationals_up_to_den(16);
    PLFunc tt = compose(tn, tn);
    PLFunc tf = compose(tn, fl);
    for (const Rat& x : grid) {
        CHECK(tt(x) == tn(tn(x)));
        CHECK(tf(x) == tn(fl(x)));
    }
    // composition against identity is neutral
    CHECK(pl_equal(compose(tn, PLFunc::identity()), tn));
    CHECK(pl_equal(compose(PLFunc::identity(), tn), tn));
    // associativity on a sample
    PLFunc left = compose(compose(tn, fl), tn);
    PLFunc right = compose(tn, compose(fl, tn));
    CHECK(pl_equal(left, right));
}

TEST_CASE("compile matches eval_term on every rational with small denominator") {
    std::vector<std::string> samples = {
        "x0",
        "!x0",
        "x0 * x0",
        "!( !x0 * !x0 ) /\\ !( x0 * x0 )",
        "x0 -> !x0",
        "(x0 \\/ !x0) * x0",
        "x0^3 -> x0^2",
        "!x0 \\/ (x0 * x0 * x0)",
    };
    std::vector<Rat> grid = rationals_up_to_den(16);
    for (const auto& src : samples) {
        TermPtr t = parse(src);
        PLFunc f = compile(t);
        for (const Rat& x : grid) CHECK(f(x) == eval_term(t, {x}));
    }
}

TEST_CASE("compile of random terms is sound") {
    std::mt19937_64 rng(31337);
    std::vector<Rat> grid = rationals_up_to_den(12);
    for (int i = 0; i < 120; ++i) {
        TermPtr t = random_term(rng, 5, 1);
        PLFunc f = compile(t);
        for (const Rat& x : grid) REQUIRE(f(x) == eval_term(t, {x}));
    }
}

TEST_CASE("compile rejects terms with more than one variable") {
    CHECK_THROWS_AS(compile(parse("x0 /\\ x1")), ArityError);
    CHECK_NOTHROW(compile(parse("1 -> 0")));
}
