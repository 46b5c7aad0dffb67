#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "maxsub/errors.hpp"
#include "maxsub/subrings.hpp"

using namespace maxsub;

namespace {

bool closed_under_ops(const FiniteRing& r, const ElemSet& s) {
    if (!s.test(0) || !s.test(1)) return false;
    auto idx = s.to_indices();
    for (Elem a : idx)
        for (Elem b : idx)
            if (!s.test(r.add(a, b)) || !s.test(r.mul(a, b))) return false;
    for (Elem a : idx)
        if (!s.test(r.neg(a))) return false;
    return true;
}

ElemSet singleton_closure(const FiniteRing& r, Elem x) {
    ElemSet seed;
    seed.set(x);
    return ring_closure(r, seed);
}

}  // namespace

TEST_CASE("element sets") {
    ElemSet s;
    CHECK(s.none());
    s.set(0);
    s.set(200);
    s.set(63);
    CHECK(s.count() == 3);
    CHECK(s.test(200));
    CHECK(!s.test(199));
    s.reset(200);
    CHECK(s.count() == 2);
    CHECK(s.to_indices() == std::vector<Elem>{0, 63});
    CHECK(ElemSet::of_indices({0, 63}) == s);

    ElemSet t = ElemSet::of_indices({0, 1, 63});
    CHECK(s.subset_of(t));
    CHECK(!t.subset_of(s));
    CHECK((s & t) == s);
    CHECK((s | t) == t);
    CHECK(ElemSet::Hash{}(s) == ElemSet::Hash{}(ElemSet::of_indices({0, 63})));
}

TEST_CASE("prime subring") {
    CHECK(prime_subring(FiniteRing::build("Z/12Z")).count() == 12);
    CHECK(prime_subring(FiniteRing::build("GF(2,4)")) == ElemSet::of_indices({0, 1}));
    CHECK(prime_subring(FiniteRing::build("GF(3,2)")).count() == 3);
    CHECK(prime_subring(FiniteRing::build("product(GF(2,1),GF(3,1))")).count() == 6);
    CHECK(prime_subring(FiniteRing::build("dual(GF(5,1))")).count() == 5);
}

TEST_CASE("closure properties") {
    FiniteRing r = FiniteRing::build("product(GF(2,2),GF(2,2))");
    for (Elem x = 0; x < r.order(); ++x) {
        ElemSet c = singleton_closure(r, x);
        CHECK(c.test(x));
        CHECK(closed_under_ops(r, c));
        CHECK(ring_closure(r, c) == c);
    }
}

TEST_CASE("known subring counts") {
    struct Row {
        const char* spec;
        std::size_t subrings;
        std::size_t maximal;
    };
    // product^n(F_2) has Bell(n) subrings (one per partition of the coordinates)
    const Row rows[] = {
        {"GF(2,4)", 3, 1},
        {"GF(2,6)", 4, 2},
        {"GF(3,2)", 2, 1},
        {"Z/4Z", 1, 0},
        {"Z/12Z", 1, 0},
        {"dual(GF(2,1))", 2, 1},
        {"product(GF(2,2),GF(2,2))", 7, 4},
        {"product(GF(3,2),GF(3,2))", 7, 4},
        {"product(GF(2,1),GF(2,1))", 2, 1},
        {"product(GF(2,1),GF(2,1),GF(2,1))", 5, 3},
        {"product(GF(2,1),GF(2,1),GF(2,1),GF(2,1))", 15, 6},
    };
    for (const Row& row : rows) {
        CAPTURE(row.spec);
        FiniteRing r = FiniteRing::build(row.spec);
        auto subs = enumerate_subrings(r);
        CHECK(subs.size() == row.subrings);
        CHECK(maximal_subring_sets(r).size() == row.maximal);
        for (const ElemSet& s : subs) CHECK(closed_under_ops(r, s));
        // the complete ring is always present and listed last
        REQUIRE(!subs.empty());
        CHECK(subs.back().count() == r.order());
        CHECK(std::is_sorted(subs.begin(), subs.end(), [](const ElemSet& a, const ElemSet& b) {
            return a.count() < b.count() || (a.count() == b.count() && a < b);
        }));
    }
}

TEST_CASE("maximality is inclusion-maximality among proper subrings") {
    FiniteRing r = FiniteRing::build("product(GF(2,2),GF(2,2))");
    auto subs = enumerate_subrings(r);
    auto maxi = maximal_subring_sets(r);
    for (const ElemSet& m : maxi) {
        CHECK(m.count() < r.order());
        for (const ElemSet& s : subs) {
            if (s.count() == r.order() || s == m) continue;
            CHECK(!m.subset_of(s));
        }
    }
}

TEST_CASE("subring lattice is closed under intersection") {
    for (const char* spec : {"product(GF(2,2),GF(2,2))", "product(GF(2,1),GF(2,1),GF(2,1))",
                             "GF(2,6)", "dual(GF(3,1))"}) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::build(spec);
        auto subs = enumerate_subrings(r);
        for (const ElemSet& a : subs)
            for (const ElemSet& b : subs) {
                ElemSet c = a & b;
                CHECK(std::find(subs.begin(), subs.end(), c) != subs.end());
            }
    }
}

TEST_CASE("serial and parallel enumeration agree") {
    for (const char* spec : {"GF(2,8)", "product(GF(2,2),GF(2,2))", "dual(GF(2,2))",
                             "product(GF(2,1),GF(2,1),GF(2,1),GF(2,1),GF(2,1))"}) {
        CAPTURE(spec);
        FiniteRing r = FiniteRing::build(spec);
        CHECK(enumerate_subrings(r, Exec::Serial) == enumerate_subrings(r, Exec::Parallel));
        CHECK(maximal_subring_sets(r, Exec::Serial) == maximal_subring_sets(r, Exec::Parallel));
    }
}

TEST_CASE("enumeration requires tables") {
    CHECK_THROWS_AS(enumerate_subrings(FiniteRing::build("GF(2,12)")), CapExceededError);
    CHECK_THROWS_AS(ring_closure(FiniteRing::build("Z/1000Z"), ElemSet{}), CapExceededError);
}

TEST_CASE("subfields by Frobenius fixed points") {
    auto sf = enumerate_subfields(FiniteRing::build("GF(2,12)"));
    std::vector<std::uint32_t> degrees;
    for (const auto& info : sf) degrees.push_back(info.degree);
    CHECK(degrees == std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12});
    for (const auto& info : sf) {
        CHECK(info.elements.size() == (1u << info.degree));
        CHECK(std::is_sorted(info.elements.begin(), info.elements.end()));
        CHECK(info.elements[0] == 0);
        CHECK(info.elements[1] == 1);
    }

    auto sf34 = enumerate_subfields(FiniteRing::build("GF(3,4)"));
    std::vector<std::uint32_t> d34;
    for (const auto& info : sf34) d34.push_back(info.degree);
    CHECK(d34 == std::vector<std::uint32_t>{1, 2, 4});

    // on a small field the subring lattice and the subfield lattice coincide
    FiniteRing f16 = FiniteRing::build("GF(2,4)");
    auto subs = enumerate_subrings(f16);
    auto fields = enumerate_subfields(f16);
    REQUIRE(subs.size() == fields.size());
    for (std::size_t i = 0; i < subs.size(); ++i)
        CHECK(subs[i] == ElemSet::of_indices(fields[i].elements));
}
