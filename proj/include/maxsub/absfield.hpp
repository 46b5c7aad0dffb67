#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxsub/steinitz.hpp"

namespace maxsub {

// An absolutely algebraic field: an algebraic extension of some prime field
// F_q, pinned down uniquely by the characteristic and a Steinitz number.
// Isomorphic fields of this kind are literally equal, so operator== doubles
// as the isomorphism test.
struct AbsField {
    std::uint64_t characteristic;
    SteinitzNumber st;

    AbsField(std::uint64_t q, SteinitzNumber n);

    // F_{p^n}
    static AbsField finite(std::uint64_t p, std::uint64_t n);

    // "GF(q^<stexpr>)", "F_{q^n}" or "F_{q}"
    static AbsField parse(std::string_view text);
    std::string render() const;

    bool operator==(const AbsField&) const = default;
};

bool is_subfield(const AbsField& sub, const AbsField& sup);

// [sup : sub]; nullopt means the extension is infinite. Throws
// NotASubfieldError when sub is not a subfield of sup.
std::optional<Natural> extension_degree(const AbsField& sub, const AbsField& sup);

struct MaximalSubringDescriptor {
    AbsField parent;
    std::uint64_t prime;  // divides the finite part of parent.st
    AbsField subfield;    // Steinitz number = parent.st / prime
};

// One descriptor per prime dividing the finite part of the Steinitz number;
// empty exactly when the field has no maximal subrings.
std::vector<MaximalSubringDescriptor> maximal_subrings(const AbsField& e);

// A count that is either finite or aleph_0.
struct Cardinal {
    std::optional<std::uint64_t> finite;

    static Cardinal of(std::uint64_t n) { return {n}; }
    static Cardinal aleph0() { return {std::nullopt}; }
    bool is_finite() const { return finite.has_value(); }
    std::uint64_t value() const;
    bool operator==(const Cardinal&) const = default;
};

Cardinal count_maximal_subrings_up_to_iso(const AbsField& e);

bool has_finitely_many_maximal_subrings(const AbsField& e);

// The unique subfield with no maximal subrings over which the extension is
// finite: characteristic unchanged, Steinitz number replaced by its stable part.
AbsField no_maximal_subring_core(const AbsField& e);

// Common length of every maximal descending chain of maximal subrings from e
// down to the core: the sum of the finite-part exponents.
std::uint64_t chain_length(const AbsField& e);

// Number of distinct maximal descending chains (multinomial of the exponent
// multiset); computed without materializing the chains.
Natural chain_count(const AbsField& e);

// All maximal descending chains from e to the core, endpoints included.
// Throws LimitExceededError when chain_count exceeds limit.
std::vector<std::vector<AbsField>> enumerate_chains(const AbsField& e, std::uint64_t limit);

// True iff an irreducible polynomial of degree m exists over e (m >= 1):
// every prime dividing m must have finite exponent in the Steinitz number.
bool irreducible_degree_exists(const AbsField& e, std::uint64_t m);

// The degree-m extension obtained by adjoining a root of an irreducible
// polynomial of degree m; Steinitz number multiplied by m.
AbsField adjoin_degree(const AbsField& e, std::uint64_t m);

bool is_algebraically_closed(const AbsField& e);

}  // namespace maxsub
