#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "subdyn/rational.hpp"

using namespace subdyn;

TEST_CASE("construction normalizes sign and reduces") {
    CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(1), Int(-2)) == Rat(Int(-1), Int(2)));
    CHECK(Rat(Int(-1), Int(-2)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(0), Int(-7)) == Rat(0));
    CHECK(Rat(Int(1), Int(2)).num() == 1);
    CHECK(Rat(Int(1), Int(2)).den() == 2);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("parse accepts integers, fractions, and decimals") {
    CHECK(Rat::parse("3") == Rat(3));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK(Rat::parse("2/6") == Rat(Int(1), Int(3)));
    CHECK(Rat::parse("-2/6") == Rat(Int(-1), Int(3)));
    CHECK(Rat::parse("0.25") == Rat(Int(1), Int(4)));
    CHECK(Rat::parse("0.1234567") == Rat(Int(1234567), Int(10000000)));
    CHECK(Rat::parse("1.0") == Rat(1));
    CHECK(Rat::parse("+1/2") == Rat(Int(1), Int(2)));
    CHECK_THROWS(Rat::parse(""));
    CHECK_THROWS(Rat::parse("1/"));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("abc"));
    CHECK_THROWS(Rat::parse("1.2.3"));
    CHECK_THROWS(Rat::parse("1 / 2 extra"));
}

TEST_CASE("arithmetic is exact") {
    Rat a(Int(1), Int(3)), b(Int(1), Int(6));
    CHECK(a + b == Rat(Int(1), Int(2)));
    CHECK(a - b == b);
    CHECK(a * b == Rat(Int(1), Int(18)));
    CHECK(a / b == Rat(2));
    CHECK(-a == Rat(Int(-1), Int(3)));
    CHECK(a.pow(3) == Rat(Int(1), Int(27)));
    CHECK(Rat(Int(-2), Int(3)).abs() == Rat(Int(2), Int(3)));
    CHECK(Rat(Int(7), Int(2)).floor() == 3);
    CHECK(Rat(Int(-7), Int(2)).floor() == -4);
}

TEST_CASE("ordering and printing") {
    CHECK(Rat(Int(1), Int(3)) < Rat(Int(1), Int(2)));
    CHECK(Rat(Int(2), Int(4)) <= Rat(Int(1), Int(2)));
    CHECK(Rat(5).str() == "5");
    CHECK(Rat(Int(-1), Int(3)).str() == "-1/3");
    std::ostringstream os;
    os << Rat(Int(3), Int(4));
    CHECK(os.str() == "3/4");
    CHECK(rat_min(Rat(1), Rat(2)) == Rat(1));
    CHECK(rat_max(Rat(1), Rat(2)) == Rat(2));
}

TEST_CASE("round-trip through str/parse") {
    for (long long n = -20; n <= 20; ++n)
        for (long long d = 1; d <= 12; ++d) {
            Rat r{Int(n), Int(d)};
            CHECK(Rat::parse(r.str()) == r);
        }
}

TEST_CASE("to_double matches exact value") {
    CHECK(Rat(Int(1), Int(2)).to_double() == 0.5);
    CHECK(Rat(Int(1), Int(4)).to_double() == 0.25);
    CHECK(Rat(Int(1), Int(3)).to_double() == Catch::Approx(1.0 / 3).epsilon(1e-15));
}
