#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxsub/absfield.hpp"
#include "maxsub/finring.hpp"

namespace maxsub {

// Dense univariate polynomial over a finite field; coefficients are element
// indices, constant term first, no trailing zeros.
struct FqPoly {
    std::vector<Elem> c;

    bool is_zero() const { return c.empty(); }
    std::uint32_t degree() const;  // zero polynomial has no degree

    bool operator==(const FqPoly&) const = default;
    // by degree, then coefficients from the leading end; matches the base-q
    // encoding order used for enumeration
    bool operator<(const FqPoly& o) const;
};

FqPoly poly_from_coeffs(std::vector<Elem> coeffs);  // trims trailing zeros
FqPoly poly_parse(const FiniteRing& k, std::string_view text);
std::string poly_render(const FqPoly& f);

FqPoly poly_add(const FiniteRing& k, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const FiniteRing& k, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const FiniteRing& k, const FqPoly& a, const FqPoly& b);
std::pair<FqPoly, FqPoly> poly_divmod(const FiniteRing& k, const FqPoly& a, const FqPoly& b);
FqPoly poly_rem(const FiniteRing& k, const FqPoly& a, const FqPoly& b);
FqPoly poly_monic(const FiniteRing& k, const FqPoly& a);
FqPoly poly_gcd(const FiniteRing& k, const FqPoly& a, const FqPoly& b);
FqPoly poly_inverse_mod(const FiniteRing& k, const FqPoly& a, const FqPoly& f);

bool poly_irreducible(const FiniteRing& k, const FqPoly& f);

// all monic irreducibles of degree d in encoding order; requires q^d <= 65536
std::vector<FqPoly> monic_irreducibles(const FiniteRing& k, std::uint32_t d);

// A place of K(x): a monic irreducible polynomial, or the point at infinity.
// Its valuation ring is a maximal subring of K(x) and the residue field is
// K[x]/(f) (respectively K).
struct Place {
    bool infinite = false;
    FqPoly poly;

    std::uint32_t residue_degree() const { return infinite ? 1 : poly.degree(); }
    bool operator==(const Place&) const = default;
    bool operator<(const Place& o) const;
};

// "place(<monic poly>)" or "place(inf)"; validates monicity and irreducibility
Place place_parse(const FiniteRing& k, std::string_view text);
std::string place_render(const Place& pl);

// finite places of residue degree d in encoding order, plus the infinite
// place when d == 1
std::vector<Place> places_of_degree(const FiniteRing& k, std::uint32_t d);

AbsField residue_field(const FiniteRing& k, const Place& pl);

// Place over an arbitrary absolutely algebraic base, carried by its residue
// degree only; the degree is a prime power p^e.
struct SymbolicPlace {
    AbsField base;
    std::uint64_t prime = 2;
    std::uint64_t power = 1;

    SteinitzNumber degree_steinitz() const;
    bool operator==(const SymbolicPlace&) const = default;
};

AbsField residue_field(const SymbolicPlace& pl);

enum class Discrimination { NotIsomorphic, Inconclusive };

// Sound but incomplete: distinct residue fields rule an isomorphism out,
// equal residue fields decide nothing.
Discrimination discriminate_places(const FiniteRing& k, const Place& a, const Place& b);
Discrimination discriminate_places(const SymbolicPlace& a, const SymbolicPlace& b);

// Lazily yields symbolic places of degree p, p^2, p^3, ... where p is the
// least prime with finite exponent in the base's Steinitz number. Their
// residue fields are pairwise distinct, so the corresponding valuation rings
// fall into infinitely many isomorphism classes.
class WitnessStream {
public:
    explicit WitnessStream(AbsField base);  // AlgebraicallyClosedBaseError if closed

    std::uint64_t prime() const { return prime_; }
    SymbolicPlace next();
    std::vector<SymbolicPlace> take(std::size_t count);

private:
    AbsField base_;
    std::uint64_t prime_;
    std::uint64_t power_ = 0;
};

// Fractional-linear substitution x -> (a*x + b)/(c*x + d) with ad - bc != 0,
// canonicalized so the first nonzero entry is 1; the maps form PGL_2(K).
struct MobiusMap {
    std::array<Elem, 4> m{0, 0, 0, 0};  // a, b, c, d

    static MobiusMap identity() { return {{1, 0, 0, 1}}; }
    bool operator==(const MobiusMap&) const = default;
    bool operator<(const MobiusMap& o) const { return m < o.m; }
};

MobiusMap mobius_normalize(const FiniteRing& k, std::array<Elem, 4> m);
std::vector<MobiusMap> all_mobius_maps(const FiniteRing& k);  // |K| <= 16
MobiusMap mobius_compose(const FiniteRing& k, const MobiusMap& s, const MobiusMap& t);

// Image place: roots transported through the substitution inside K[x]/(f),
// then the minimal polynomial of the image; degree is preserved.
Place apply_mobius(const FiniteRing& k, const MobiusMap& s, const Place& pl);

std::vector<Place> mobius_orbit(const FiniteRing& k, const Place& pl);  // sorted

struct OrbitReport {
    std::uint32_t degree = 0;
    std::vector<Place> places;                     // the whole residue-degree class
    std::vector<std::vector<std::size_t>> orbits;  // index partition of places
    bool orbits_preserve_degree = false;
    bool single_orbit = false;
};

// Partition of the degree-d places into Mobius orbits. Requires a prime base
// field, where the Mobius maps are the only automorphisms available without
// moving coefficients. Degree preservation is asserted via the report flag;
// single-orbit is reported, not asserted.
OrbitReport check_orbit_vs_iso(const FiniteRing& k, std::uint32_t d);

}  // namespace maxsub
