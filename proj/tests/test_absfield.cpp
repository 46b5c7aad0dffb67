#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "maxsub/absfield.hpp"

using namespace maxsub;

namespace {

AbsField gf(std::string_view s) { return AbsField::parse(s); }

}  // namespace

TEST_CASE("field literals parse and render") {
    CHECK(gf("GF(2^2^2*3)") == AbsField(2, SteinitzNumber::parse("2^2*3")));
    CHECK(gf("F_{2^4}") == AbsField::finite(2, 4));
    CHECK(gf("F_{7}") == AbsField::finite(7, 1));
    CHECK(gf("GF(3^all^inf)").render() == "GF(3^all^inf)");
    CHECK(gf("GF(2^2^2*3*5^inf)").render() == "GF(2^2^2*3*5^inf)");
    CHECK(AbsField::parse(gf("GF(5^2*3^inf)").render()) == gf("GF(5^2*3^inf)"));
    CHECK(AbsField::finite(2, 12) == gf("GF(2^2^2*3)"));
    CHECK(AbsField::finite(3, 1) == gf("GF(3^1)"));

    CHECK_THROWS_AS(gf("GF(4^2)"), SyntaxError);   // characteristic must be prime
    CHECK_THROWS_AS(gf("GF(2^2"), SyntaxError);    // unbalanced
    CHECK_THROWS_AS(gf("F_{2^0}"), SyntaxError);   // zero degree
    CHECK_THROWS_AS(gf("latin"), SyntaxError);
    CHECK_THROWS(AbsField::finite(6, 2));
}

TEST_CASE("subfield relation is Steinitz divisibility") {
    CHECK(is_subfield(gf("GF(2^2)"), gf("GF(2^2^2*3)")));
    CHECK(!is_subfield(gf("GF(2^3)"), gf("GF(3^3)")));  // characteristic mismatch
    CHECK(is_subfield(gf("GF(2^2^inf)"), gf("GF(2^all^inf)")));
    CHECK(!is_subfield(gf("GF(2^2^inf)"), gf("GF(2^2^100)")));
    CHECK(is_subfield(gf("GF(5^1)"), gf("GF(5^7^inf)")));
}

TEST_CASE("extension degree") {
    CHECK(extension_degree(gf("GF(2^2)"), gf("GF(2^2^2*3)")) == Natural(6));
    CHECK(extension_degree(gf("GF(2^2^2*3)"), gf("GF(2^2^2*3)")) == Natural(1));
    CHECK(!extension_degree(gf("GF(2^2)"), gf("GF(2^2^inf)")).has_value());
    CHECK(extension_degree(gf("GF(2^2^inf)"), gf("GF(2^2^inf*3^2)")) == Natural(9));
    CHECK(!extension_degree(gf("GF(2^3)"), gf("GF(2^3*rest^inf)")).has_value());
    CHECK_THROWS_AS(extension_degree(gf("GF(2^3)"), gf("GF(2^2)")), NotASubfieldError);
    CHECK_THROWS_AS(extension_degree(gf("GF(2^2)"), gf("GF(3^2)")), NotASubfieldError);
}

TEST_CASE("maximal subring descriptors") {
    auto ms = maximal_subrings(gf("GF(2^2^2*3*5^inf)"));
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].prime == 2);
    CHECK(ms[0].subfield == gf("GF(2^2*3*5^inf)"));
    CHECK(ms[1].prime == 3);
    CHECK(ms[1].subfield == gf("GF(2^2^2*5^inf)"));
    for (const auto& m : ms) {
        CHECK(is_subfield(m.subfield, m.parent));
        CHECK(extension_degree(m.subfield, m.parent) == Natural(m.prime));
    }

    CHECK(maximal_subrings(gf("GF(2^all^inf)")).empty());
    CHECK(maximal_subrings(gf("GF(7^1)")).empty());

    auto f16 = maximal_subrings(gf("F_{2^4}"));
    REQUIRE(f16.size() == 1);
    CHECK(f16[0].subfield == AbsField::finite(2, 2));
}

TEST_CASE("counting maximal subrings") {
    CHECK(count_maximal_subrings_up_to_iso(gf("GF(2^2^2*3*5^inf)")) == Cardinal::of(2));
    CHECK(count_maximal_subrings_up_to_iso(gf("GF(2^all^inf)")) == Cardinal::of(0));
    CHECK(count_maximal_subrings_up_to_iso(gf("GF(3^1)")) == Cardinal::of(0));
    CHECK(count_maximal_subrings_up_to_iso(gf("F_{2^8}")) == Cardinal::of(1));
    CHECK(has_finitely_many_maximal_subrings(gf("GF(2^2^2*3*5^inf)")));
    CHECK(has_finitely_many_maximal_subrings(gf("GF(2^all^inf)")));

    CHECK(!Cardinal::aleph0().is_finite());
    CHECK_THROWS_AS(Cardinal::aleph0().value(), InfinitelyManyMaximalSubringsError);
}

TEST_CASE("core field without maximal subrings") {
    CHECK(no_maximal_subring_core(gf("GF(2^2^2*3*5^inf)")) == gf("GF(2^5^inf)"));
    CHECK(no_maximal_subring_core(gf("GF(2^all^inf)")) == gf("GF(2^all^inf)"));
    CHECK(no_maximal_subring_core(gf("F_{3^9}")) == gf("GF(3^1)"));
    CHECK(maximal_subrings(no_maximal_subring_core(gf("GF(2^2^6*7)"))).empty());
}

TEST_CASE("chain length and chain count") {
    CHECK(chain_length(gf("GF(2^2^2*3*5^inf)")) == 3);
    CHECK(chain_count(gf("GF(2^2^2*3*5^inf)")) == Natural(3));
    CHECK(chain_length(gf("GF(2^all^inf)")) == 0);
    CHECK(chain_length(gf("F_{2^12}")) == 3);
    CHECK(chain_count(gf("F_{2^12}")) == Natural(3));
    CHECK(chain_length(gf("GF(2^2*3*5)")) == 3);
    CHECK(chain_count(gf("GF(2^2*3*5)")) == Natural(6));  // orderings of {2,3,5}
    CHECK(chain_count(gf("GF(2^2^3)")) == Natural(1));
    CHECK(chain_count(gf("GF(3^1)")) == Natural(1));  // the empty chain
}

TEST_CASE("chain enumeration") {
    auto chains = enumerate_chains(gf("GF(2^2*3)"), 100);
    REQUIRE(chains.size() == 2);
    for (const auto& ch : chains) {
        REQUIRE(ch.size() == 3);
        CHECK(ch.front() == gf("GF(2^2*3)"));
        CHECK(ch.back() == gf("GF(2^1)"));
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
            auto d = extension_degree(ch[i + 1], ch[i]);
            REQUIRE(d.has_value());
            CHECK(*d > 1);
        }
    }

    auto f4096 = enumerate_chains(gf("F_{2^12}"), 100);
    CHECK(f4096.size() == 3);

    auto trivial = enumerate_chains(gf("GF(2^5^inf)"), 100);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].size() == 1);

    CHECK_THROWS_AS(enumerate_chains(gf("GF(2^2*3*5*7*11)"), 10), LimitExceededError);
}

TEST_CASE("irreducible degree criterion") {
    CHECK(irreducible_degree_exists(gf("GF(2^2^inf)"), 3));
    CHECK(!irreducible_degree_exists(gf("GF(2^2^inf)"), 2));
    CHECK(!irreducible_degree_exists(gf("GF(2^2^inf)"), 6));
    CHECK(irreducible_degree_exists(gf("GF(2^1)"), 8));
    CHECK(irreducible_degree_exists(gf("GF(2^2^100)"), 2));
    CHECK(!irreducible_degree_exists(gf("GF(2^all^inf)"), 2));
    CHECK(irreducible_degree_exists(gf("GF(2^all^inf)"), 1));
    CHECK_THROWS(irreducible_degree_exists(gf("GF(2^1)"), 0));
}

TEST_CASE("adjoining a root of given degree") {
    CHECK(adjoin_degree(gf("GF(2^3^inf)"), 2) == gf("GF(2^2*3^inf)"));
    CHECK(adjoin_degree(gf("GF(2^1)"), 12) == gf("F_{2^12}"));
    CHECK_THROWS_AS(adjoin_degree(gf("GF(2^2^inf)"), 2), NoIrreducibleOfThatDegreeError);
    CHECK_THROWS_AS(adjoin_degree(gf("GF(2^all^inf)"), 5), NoIrreducibleOfThatDegreeError);
}

TEST_CASE("algebraic closedness") {
    CHECK(is_algebraically_closed(gf("GF(2^all^inf)")));
    CHECK(is_algebraically_closed(gf("GF(7^all^inf)")));
    CHECK(!is_algebraically_closed(gf("GF(2^2^inf)")));
    CHECK(!is_algebraically_closed(gf("GF(2^1)")));
    CHECK(!is_algebraically_closed(gf("GF(2^2^3*rest^inf)")));
}
