#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxsub/finring.hpp"

namespace maxsub {

// Fixed-capacity bitset over element indices 0..255.
struct ElemSet {
    std::array<std::uint64_t, 4> w{};

    bool test(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(unsigned i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(unsigned i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    unsigned count() const;
    bool none() const { return !(w[0] | w[1] | w[2] | w[3]); }
    bool subset_of(const ElemSet& o) const;

    bool operator==(const ElemSet&) const = default;
    std::strong_ordering operator<=>(const ElemSet& o) const { return w <=> o.w; }

    friend ElemSet operator&(ElemSet a, const ElemSet& b);
    friend ElemSet operator|(ElemSet a, const ElemSet& b);

    std::vector<Elem> to_indices() const;
    static ElemSet of_indices(const std::vector<Elem>& idx);

    struct Hash {
        std::size_t operator()(const ElemSet& s) const;
    };
};

// Execution policy for the enumeration kernels. Serial is the reference
// implementation; Parallel distributes closure computations across OpenMP
// threads and must produce an identical result.
enum class Exec { Serial, Parallel };

// Smallest subring containing seed (0 and 1 are always included).
// Requires operation tables, so order <= kEnumCap.
ElemSet ring_closure(const FiniteRing& r, const ElemSet& seed);

// Closure of the empty set: the image of Z in the ring.
ElemSet prime_subring(const FiniteRing& r);

// Every unital subring, reachable by repeatedly adjoining single elements,
// sorted by (size, element mask). Includes the ring itself.
std::vector<ElemSet> enumerate_subrings(const FiniteRing& r, Exec exec = Exec::Parallel);

// Proper subrings maximal under inclusion.
std::vector<ElemSet> maximal_subring_sets(const FiniteRing& r, Exec exec = Exec::Parallel);

// Subfields of a field of order up to kBuildCap, via Frobenius fixed points;
// no tables needed. Sorted by degree.
struct SubfieldInfo {
    std::uint32_t degree;
    std::vector<Elem> elements;  // ascending indices
};
std::vector<SubfieldInfo> enumerate_subfields(const FiniteRing& field);

}  // namespace maxsub
