#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxsub/finring.hpp"
#include "maxsub/isomorphism.hpp"
#include "maxsub/subrings.hpp"

namespace maxsub {

using Rational = boost::multiprecision::cpp_rational;

// A predicted maximal subring, as an element set plus a label describing how
// it was constructed.
struct Prediction {
    std::string label;
    ElemSet members;
};

// Outcome of checking a structural description of the maximal subrings
// against brute-force enumeration.
struct VerifyReport {
    std::string check;
    bool matched = false;
    std::uint32_t iso_classes = 0;
    std::uint32_t expected_iso_classes = 0;
    std::vector<Prediction> predicted;
    std::vector<std::vector<Elem>> found;  // sorted element-index arrays
    std::vector<IsoClass> classes;         // indices into found
    std::vector<std::string> notes;

    void ensure_matched() const;  // throws MismatchError when !matched
};

// The maximal subrings of K x K for a finite field K: S x K and K x S for
// each maximal subfield S, plus one diagonal {(x, t(x))} per automorphism t.
// Requires |K| <= 16 so the product fits the enumeration cap.
std::vector<Prediction> predict_kxk(const FiniteRing& k);

VerifyReport verify_kxk(const FiniteRing& k, Exec exec = Exec::Parallel);

// Maximal subrings of the dual numbers K[alpha], alpha^2 = 0: the coefficient
// rings S + K*alpha for maximal subfields S, and subrings isomorphic to K.
VerifyReport verify_dual_numbers(const FiniteRing& k, Exec exec = Exec::Parallel);

// The product of `copies` copies of the prime field F_p has maximal subrings
// given by merging two coordinates; all are isomorphic.
VerifyReport verify_product_field(std::uint32_t p, std::uint32_t copies,
                                  Exec exec = Exec::Parallel);

// Checks the Mobius-map action on places of K(x): identity and composition
// laws, residue-degree preservation, and transitivity on the q+1 places of
// degree 1. Requires |K| <= 9.
VerifyReport verify_places(const FiniteRing& k, std::uint32_t max_degree = 2);

// Localizations of the integers inside the rationals: membership closure
// under ring operations on random pairs, and distinct residue
// characteristics for distinct primes.
VerifyReport verify_rationals(std::size_t num_primes = 20, std::size_t num_pairs = 1000,
                              std::uint64_t seed = 0x5eed);

// x lies in Z localized at p: p does not divide the reduced denominator.
bool rationals_localization_membership(const Rational& x, std::uint64_t p);

// x lies in the unique maximal ideal of that localization.
bool rationals_maximal_ideal_membership(const Rational& x, std::uint64_t p);

// Characteristic of the residue field, computed as the least positive k
// whose image lands in the maximal ideal.
std::uint64_t rationals_residue_char(std::uint64_t p);

}  // namespace maxsub
