#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "maxsub/steinitz.hpp"

using namespace maxsub;

namespace {

SteinitzNumber st(std::string_view s) { return SteinitzNumber::parse(s); }

// Random Steinitz number over a small prime pool, occasionally with an
// all-but-finitely-many-infinite tail.
SteinitzNumber random_steinitz(std::mt19937_64& rng, bool allow_inf = true) {
    static const std::uint64_t pool[] = {2, 3, 5, 7, 11, 13};
    std::map<std::uint64_t, Exponent> m;
    for (std::uint64_t p : pool) {
        switch (rng() % 6) {
            case 0:
            case 1:
                break;  // exponent 0
            case 2:
            case 3:
            case 4:
                m.emplace(p, Exponent(1 + rng() % 4));
                break;
            case 5:
                if (allow_inf) m.emplace(p, Exponent::infinity());
                break;
        }
    }
    Exponent def = allow_inf && rng() % 8 == 0 ? Exponent::infinity() : Exponent(0);
    return SteinitzNumber::make(std::move(m), def);
}

}  // namespace

TEST_CASE("parse and render round-trip") {
    for (const char* s : {"1", "2", "2^3", "2^3 * 3^inf", "5^inf", "all^inf",
                          "2 * 3 * 5^2 * rest^inf", "2^0 * rest^inf", "3 * 13^inf"}) {
        SteinitzNumber n = st(s);
        CHECK(SteinitzNumber::parse(n.render()) == n);
        CHECK(SteinitzNumber::parse(n.render_compact()) == n);
    }
    CHECK(st("2^3*3^inf").render() == "2^3 * 3^inf");
    CHECK(st("2^3 * 3^inf").render_compact() == "2^3*3^inf");
    CHECK(st("1").render() == "1");
    CHECK(st("all^inf").render() == "all^inf");
    CHECK(st("2*rest^inf").render() == "2 * rest^inf");
    CHECK(st("3^1").render() == "3");
}

TEST_CASE("parse rejects malformed expressions") {
    for (const char* s : {"", "4", "2**3", "2^", "1*2", "rest^inf", "2*2", "all^inf 2", "2^-1",
                          "x", "2*", "2^inf3", "6^2"}) {
        CHECK_THROWS_AS(st(s), SyntaxError);
    }
}

TEST_CASE("construction helpers") {
    CHECK(SteinitzNumber::one() == st("1"));
    CHECK(SteinitzNumber::all_infinite() == st("all^inf"));
    CHECK(SteinitzNumber::of_natural(12) == st("2^2*3"));
    CHECK(SteinitzNumber::of_natural(1) == st("1"));
    CHECK(SteinitzNumber::prime_power(5, Exponent::infinity()) == st("5^inf"));
    CHECK_THROWS(SteinitzNumber::of_natural(0));
    CHECK(st("2^2*3").exponent_at(2) == Exponent(2));
    CHECK(st("2^2*3").exponent_at(7) == Exponent(0));
    CHECK(st("all^inf").exponent_at(97).is_infinite());
}

TEST_CASE("multiplication and quotient") {
    CHECK(mul(st("2^3*3^inf"), st("2")) == st("2^4*3^inf"));
    CHECK(mul(st("2^3*3^inf"), st("2")).render() == "2^4 * 3^inf");
    CHECK(mul(st("all^inf"), st("all^inf")) == st("all^inf"));
    CHECK(mul(st("2^inf"), st("2^5")) == st("2^inf"));

    CHECK(quotient(st("2^4*3^inf"), st("2")) == st("2^3*3^inf"));
    CHECK(quotient(st("2^inf"), st("2^100")) == st("2^inf"));
    CHECK(quotient(st("2^2*3"), st("2^2*3")) == st("1"));
    CHECK_THROWS_AS(quotient(st("2"), st("3")), NotDivisibleError);
    CHECK_THROWS_AS(quotient(st("2^inf"), st("2^inf")), AmbiguousInfiniteQuotientError);
    CHECK_THROWS_AS(quotient(st("all^inf"), st("all^inf")), AmbiguousInfiniteQuotientError);
}

TEST_CASE("divisibility and lattice operations") {
    CHECK(divides(st("2^2"), st("2^3")));
    CHECK(divides(st("2^2"), st("2^inf")));
    CHECK(!divides(st("2^inf"), st("2^100")));
    CHECK(divides(st("2*3"), st("all^inf")));
    CHECK(!divides(st("all^inf"), st("2^inf*3^inf")));

    CHECK(meet(st("2^2*3"), st("2*5")) == st("2"));
    CHECK(join(st("2^2*3"), st("2*5")) == st("2^2*3*5"));
    CHECK(meet(st("2^inf"), st("2^7")) == st("2^7"));
    CHECK(join(st("2^inf*3"), st("3^inf")) == st("2^inf*3^inf"));
    CHECK(meet(st("all^inf"), st("2^4*7")) == st("2^4*7"));
}

TEST_CASE("stable and finite parts") {
    SteinitzNumber n = st("2^2*3*5^inf");
    CHECK(n.stable_part() == st("5^inf"));
    CHECK(n.finite_part() == st("2^2*3"));
    CHECK(mul(n.stable_part(), n.finite_part()) == n);

    CHECK(st("all^inf").stable_part() == st("all^inf"));
    CHECK(st("all^inf").finite_part() == st("1"));
    CHECK(st("2^2*3").stable_part() == st("1"));
    CHECK(st("2^3*rest^inf").stable_part() == st("2^0*rest^inf"));
    CHECK(st("2^3*rest^inf").finite_part() == st("2^3"));
}

TEST_CASE("natural valuation") {
    CHECK(st("2^4*3^2").as_natural() == Natural(144));
    CHECK(st("1").as_natural() == Natural(1));
    CHECK(!st("2^inf").as_natural().has_value());
    CHECK(!st("all^inf").as_natural().has_value());
    CHECK(!st("2*rest^inf").as_natural().has_value());
    CHECK(st("2^inf").natural_valued() == false);
    CHECK(st("2^10*97").natural_valued());
    CHECK_THROWS_AS(st("2^2000000").as_natural(), OverflowError);

    CHECK(st("2^2*3*5^inf").finite_support() == std::vector<std::uint64_t>{2, 3});
    CHECK(st("all^inf").finite_support().empty());
}

TEST_CASE("randomized algebraic laws") {
    std::mt19937_64 rng(20260823);
    for (int iter = 0; iter < 2000; ++iter) {
        SteinitzNumber a = random_steinitz(rng);
        SteinitzNumber b = random_steinitz(rng);
        SteinitzNumber c = random_steinitz(rng);

        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, SteinitzNumber::one()) == a);

        CHECK(meet(a, b) == meet(b, a));
        CHECK(join(a, b) == join(b, a));
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        CHECK(meet(a, join(a, b)) == a);
        CHECK(join(a, meet(a, b)) == a);
        CHECK(meet(a, a) == a);

        CHECK(divides(meet(a, b), a));
        CHECK(divides(a, join(a, b)));
        CHECK(divides(a, b) == (meet(a, b) == a));

        CHECK(mul(a.stable_part(), a.finite_part()) == a);

        SteinitzNumber nat = random_steinitz(rng, false);
        CHECK(quotient(mul(a, nat), nat) == a);
    }
}

TEST_CASE("integer oracle on natural-valued inputs") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::uint64_t> dist(1, 999999);
    for (int iter = 0; iter < 2000; ++iter) {
        std::uint64_t x = dist(rng), y = dist(rng);
        SteinitzNumber a = SteinitzNumber::of_natural(x);
        SteinitzNumber b = SteinitzNumber::of_natural(y);
        CHECK(mul(a, b).as_natural() == Natural(x) * y);
        CHECK(meet(a, b).as_natural() == Natural(std::gcd(x, y)));
        CHECK(join(a, b).as_natural() == Natural(std::lcm(x, y)));
        CHECK(divides(a, b) == (y % x == 0));
        if (y % x == 0) CHECK(quotient(b, a).as_natural() == Natural(y / x));
    }
}
