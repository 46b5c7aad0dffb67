#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxsub/finring.hpp"
#include "maxsub/subrings.hpp"

namespace maxsub {

// Standalone operation tables for a ring or one of its subrings, elements
// relabeled 0..order-1 with 0 the zero and 1 the one.
struct RingView {
    std::uint32_t order = 0;
    std::vector<Elem> add, mul, neg;  // row-major order x order (neg: length order)
    std::vector<Elem> to_parent;      // view index -> element index in the parent ring

    static RingView of_ring(const FiniteRing& r);
    static RingView of_subring(const FiniteRing& r, const ElemSet& members);

    Elem addf(Elem a, Elem b) const { return add[static_cast<std::size_t>(a) * order + b]; }
    Elem mulf(Elem a, Elem b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
};

// Isomorphism invariants; equality is necessary (not sufficient) for two
// rings to be isomorphic, so this acts as a cheap filter.
struct IsoFingerprint {
    std::uint32_t order = 0;
    std::uint32_t characteristic = 0;
    std::uint32_t units = 0;
    std::uint32_t idempotents = 0;
    std::uint32_t nilpotents = 0;
    std::vector<std::uint64_t> elementary_divisors;  // additive group, ascending
    std::vector<std::pair<std::uint32_t, std::uint32_t>> unit_orders;  // (order, count)

    bool operator==(const IsoFingerprint&) const = default;
};

IsoFingerprint fingerprint(const RingView& v);

// Unital ring isomorphism as an element map: witness[x] is the image of x.
using IsoWitness = std::vector<Elem>;

// Backtracking search over generator images, pruned by per-element
// invariants; any witness returned has been fully verified.
std::optional<IsoWitness> find_isomorphism(const RingView& a, const RingView& b);
bool are_isomorphic(const RingView& a, const RingView& b);

// Full check: bijective, unital, preserves + and *.
bool witness_checks(const RingView& a, const RingView& b, const IsoWitness& w);

struct IsoClass {
    std::size_t representative;        // index into the classified list (lowest in class)
    std::vector<std::size_t> members;  // ascending; includes the representative
    // aligned with members; maps member -> representative; empty for the
    // representative itself
    std::vector<IsoWitness> witnesses;
};

std::vector<IsoClass> classify_up_to_iso(const std::vector<RingView>& items);

}  // namespace maxsub
