#include "maxsub/classify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "maxsub/errors.hpp"
#include "maxsub/funcfield.hpp"
#include "maxsub/nt.hpp"

namespace maxsub {

void VerifyReport::ensure_matched() const {
    if (matched) return;
    std::string msg = check + " verification failed";
    for (const std::string& n : notes) msg += "; " + n;
    throw MismatchError(msg);
}

namespace {

void require_small_field(const FiniteRing& k, std::uint32_t max_order) {
    if (!k.is_field()) throw BadSpecError(k.spec().render() + " is not a field");
    if (k.order() > max_order)
        throw CapExceededError("verification needs a field of order <= " +
                               std::to_string(max_order) + ", got " +
                               std::to_string(k.order()));
}

// frobenius powers x -> x^(p^i) for i = 0..n-1
std::vector<std::vector<Elem>> automorphisms(const FiniteRing& k) {
    const std::uint32_t p = k.field_char();
    const std::uint32_t n = k.field_degree();
    std::vector<Elem> frob(k.order());
    for (std::uint32_t x = 0; x < k.order(); ++x) frob[x] = k.pow(static_cast<Elem>(x), p);
    std::vector<std::vector<Elem>> maps;
    std::vector<Elem> cur(k.order());
    for (std::uint32_t x = 0; x < k.order(); ++x) cur[x] = static_cast<Elem>(x);
    for (std::uint32_t i = 0; i < n; ++i) {
        maps.push_back(cur);
        for (std::uint32_t x = 0; x < k.order(); ++x) cur[x] = frob[cur[x]];
    }
    return maps;
}

std::vector<SubfieldInfo> maximal_subfields(const FiniteRing& k) {
    const std::uint32_t n = k.field_degree();
    std::vector<SubfieldInfo> out;
    for (SubfieldInfo& s : enumerate_subfields(k)) {
        if (s.degree < n && n % s.degree == 0 && nt::is_prime(n / s.degree))
            out.push_back(std::move(s));
    }
    return out;
}

// set comparison between predicted and brute-forced subring collections
void compare_families(VerifyReport& rep) {
    std::set<ElemSet> pred, got;
    for (const Prediction& p : rep.predicted) pred.insert(p.members);
    for (const std::vector<Elem>& f : rep.found) got.insert(ElemSet::of_indices(f));
    if (pred == got) return;
    rep.matched = false;
    for (const ElemSet& s : pred)
        if (!got.count(s))
            rep.notes.push_back("predicted subring of size " + std::to_string(s.count()) +
                                " not found by enumeration");
    for (const ElemSet& s : got)
        if (!pred.count(s))
            rep.notes.push_back("enumerated subring of size " + std::to_string(s.count()) +
                                " not predicted");
}

void fill_found_and_classes(VerifyReport& rep, const FiniteRing& ring,
                            const std::vector<ElemSet>& brute) {
    std::vector<RingView> views;
    for (const ElemSet& s : brute) {
        rep.found.push_back(s.to_indices());
        views.push_back(RingView::of_subring(ring, s));
    }
    rep.classes = classify_up_to_iso(views);
    rep.iso_classes = static_cast<std::uint32_t>(rep.classes.size());
}

}  // namespace

std::vector<Prediction> predict_kxk(const FiniteRing& k) {
    require_small_field(k, 16);
    FiniteRing kk = FiniteRing::build(RingSpec::product({k.spec(), k.spec()}));
    std::vector<Prediction> out;
    for (const SubfieldInfo& s : maximal_subfields(k)) {
        Prediction left{"S" + std::to_string(s.elements.size()) + " x K", {}};
        Prediction right{"K x S" + std::to_string(s.elements.size()), {}};
        for (Elem a : s.elements) {
            for (std::uint32_t y = 0; y < k.order(); ++y) {
                Elem b = static_cast<Elem>(y);
                left.members.set(kk.compose(std::array<Elem, 2>{a, b}));
                right.members.set(kk.compose(std::array<Elem, 2>{b, a}));
            }
        }
        out.push_back(std::move(left));
        out.push_back(std::move(right));
    }
    std::size_t i = 0;
    for (const std::vector<Elem>& tau : automorphisms(k)) {
        Prediction diag{"diag(frob^" + std::to_string(i++) + ")", {}};
        for (std::uint32_t x = 0; x < k.order(); ++x)
            diag.members.set(kk.compose(std::array<Elem, 2>{static_cast<Elem>(x), tau[x]}));
        out.push_back(std::move(diag));
    }
    return out;
}

VerifyReport verify_kxk(const FiniteRing& k, Exec exec) {
    VerifyReport rep;
    rep.check = "kxk";
    rep.predicted = predict_kxk(k);
    FiniteRing kk = FiniteRing::build(RingSpec::product({k.spec(), k.spec()}));
    fill_found_and_classes(rep, kk, maximal_subring_sets(kk, exec));
    rep.expected_iso_classes =
        static_cast<std::uint32_t>(maximal_subfields(k).size() + 1);
    rep.matched = true;
    compare_families(rep);
    if (rep.iso_classes != rep.expected_iso_classes) {
        rep.matched = false;
        rep.notes.push_back("expected " + std::to_string(rep.expected_iso_classes) +
                            " isomorphism classes, found " + std::to_string(rep.iso_classes));
    }
    return rep;
}

VerifyReport verify_dual_numbers(const FiniteRing& k, Exec exec) {
    require_small_field(k, 16);
    VerifyReport rep;
    rep.check = "dual";
    FiniteRing t = FiniteRing::build(RingSpec::dual(k.spec()));

    std::vector<Prediction> coeff;
    for (const SubfieldInfo& s : maximal_subfields(k)) {
        Prediction pr{"S" + std::to_string(s.elements.size()) + " + K*alpha", {}};
        for (Elem a : s.elements)
            for (std::uint32_t y = 0; y < k.order(); ++y)
                pr.members.set(t.from_pair(a, static_cast<Elem>(y)));
        coeff.push_back(std::move(pr));
    }
    Prediction embedded{"K embedded", {}};
    for (std::uint32_t x = 0; x < k.order(); ++x)
        embedded.members.set(t.from_pair(static_cast<Elem>(x), 0));
    rep.predicted = coeff;
    rep.predicted.push_back(embedded);

    std::vector<ElemSet> brute = maximal_subring_sets(t, exec);
    fill_found_and_classes(rep, t, brute);
    rep.expected_iso_classes = static_cast<std::uint32_t>(coeff.size() + 1);

    // every brute-forced maximal subring must be a coefficient ring S+K*alpha
    // or isomorphic to K, with a verified witness
    rep.matched = true;
    RingView kview = RingView::of_ring(k);
    for (std::size_t i = 0; i < brute.size(); ++i) {
        bool is_coeff = std::any_of(coeff.begin(), coeff.end(), [&](const Prediction& p) {
            return p.members == brute[i];
        });
        if (is_coeff) continue;
        RingView sv = RingView::of_subring(t, brute[i]);
        auto w = find_isomorphism(sv, kview);
        if (!w || !witness_checks(sv, kview, *w)) {
            rep.matched = false;
            rep.notes.push_back("maximal subring " + std::to_string(i) +
                                " is neither a coefficient ring nor isomorphic to K");
        }
    }
    // and each predicted subring really is maximal
    compare_families(rep);
    if (rep.iso_classes != rep.expected_iso_classes) {
        rep.matched = false;
        rep.notes.push_back("expected " + std::to_string(rep.expected_iso_classes) +
                            " isomorphism classes, found " + std::to_string(rep.iso_classes));
    }
    return rep;
}

VerifyReport verify_product_field(std::uint32_t p, std::uint32_t copies, Exec exec) {
    if (!nt::is_prime(p)) throw BadSpecError(std::to_string(p) + " is not prime");
    if (copies < 2) throw BadSpecError("need at least two factors");
    VerifyReport rep;
    rep.check = "product";
    std::vector<RingSpec> parts(copies, RingSpec::field(p, 1));
    FiniteRing ring = FiniteRing::build(RingSpec::product(std::move(parts)));
    if (ring.order() > FiniteRing::kEnumCap)
        throw CapExceededError("product order exceeds the enumeration cap");

    // merging coordinates i < j gives one maximal subring per pair
    for (std::uint32_t i = 0; i < copies; ++i) {
        for (std::uint32_t j = i + 1; j < copies; ++j) {
            Prediction pr{"merge(" + std::to_string(i) + "," + std::to_string(j) + ")", {}};
            for (std::uint32_t x = 0; x < ring.order(); ++x) {
                std::vector<Elem> parts_x = ring.split(static_cast<Elem>(x));
                if (parts_x[i] == parts_x[j]) pr.members.set(x);
            }
            rep.predicted.push_back(std::move(pr));
        }
    }

    fill_found_and_classes(rep, ring, maximal_subring_sets(ring, exec));
    rep.expected_iso_classes = 1;
    rep.matched = true;
    compare_families(rep);
    if (rep.iso_classes != 1) {
        rep.matched = false;
        rep.notes.push_back("expected a single isomorphism class, found " +
                            std::to_string(rep.iso_classes));
    }
    return rep;
}

VerifyReport verify_places(const FiniteRing& k, std::uint32_t max_degree) {
    if (!k.is_field()) throw BadSpecError(k.spec().render() + " is not a field");
    if (k.order() > 9)
        throw CapExceededError("place verification needs a field of order <= 9");
    VerifyReport rep;
    rep.check = "places";
    rep.matched = true;

    std::vector<MobiusMap> maps = all_mobius_maps(k);
    std::vector<Place> sample;
    for (std::uint32_t d = 1; d <= max_degree; ++d)
        for (Place& pl : places_of_degree(k, d)) sample.push_back(std::move(pl));

    const MobiusMap id = MobiusMap::identity();
    for (const Place& pl : sample) {
        if (!(apply_mobius(k, id, pl) == pl)) {
            rep.matched = false;
            rep.notes.push_back("identity moved " + place_render(pl));
        }
        for (const MobiusMap& s : maps) {
            if (apply_mobius(k, s, pl).residue_degree() != pl.residue_degree()) {
                rep.matched = false;
                rep.notes.push_back("residue degree not preserved at " + place_render(pl));
            }
        }
    }
    for (const MobiusMap& s : maps) {
        for (const MobiusMap& t : maps) {
            MobiusMap st = mobius_compose(k, s, t);
            for (const Place& pl : sample) {
                if (!(apply_mobius(k, s, apply_mobius(k, t, pl)) == apply_mobius(k, st, pl))) {
                    rep.matched = false;
                    rep.notes.push_back("composition law failed at " + place_render(pl));
                }
            }
        }
    }

    // transitivity on the projective line: one orbit of q+1 degree-1 places
    std::vector<Place> line = places_of_degree(k, 1);
    std::vector<Place> orbit = mobius_orbit(k, Place{false, poly_from_coeffs({0, 1})});
    std::vector<Place> sorted_line = line;
    std::sort(sorted_line.begin(), sorted_line.end());
    if (orbit != sorted_line || orbit.size() != k.order() + 1) {
        rep.matched = false;
        rep.notes.push_back("degree-1 places do not form a single orbit of size q+1");
    }
    rep.iso_classes = 1;
    rep.expected_iso_classes = 1;
    for (const Place& pl : orbit) rep.predicted.push_back(Prediction{place_render(pl), {}});
    return rep;
}

bool rationals_localization_membership(const Rational& x, std::uint64_t p) {
    if (!nt::is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    return boost::multiprecision::denominator(x) % p != 0;
}

bool rationals_maximal_ideal_membership(const Rational& x, std::uint64_t p) {
    return rationals_localization_membership(x, p) &&
           boost::multiprecision::numerator(x) % p == 0;
}

std::uint64_t rationals_residue_char(std::uint64_t p) {
    if (!nt::is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    for (std::uint64_t k = 1;; ++k)
        if (rationals_maximal_ideal_membership(Rational(k), p)) return k;
}

VerifyReport verify_rationals(std::size_t num_primes, std::size_t num_pairs, std::uint64_t seed) {
    VerifyReport rep;
    rep.check = "rationals";
    rep.matched = true;

    std::vector<std::uint64_t> primes = nt::first_primes(num_primes);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> num_dist(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> den_dist(1, 1000000);

    std::set<std::uint64_t> residue_chars;
    for (std::uint64_t p : primes) {
        auto random_member = [&]() {
            std::int64_t den = den_dist(rng);
            while (den % static_cast<std::int64_t>(p) == 0) den = den_dist(rng);
            return Rational(num_dist(rng), den);
        };
        for (std::size_t i = 0; i < num_pairs; ++i) {
            Rational x = random_member();
            Rational y = random_member();
            if (!rationals_localization_membership(x, p) ||
                !rationals_localization_membership(y, p) ||
                !rationals_localization_membership(x + y, p) ||
                !rationals_localization_membership(x - y, p) ||
                !rationals_localization_membership(x * y, p)) {
                rep.matched = false;
                rep.notes.push_back("closure failure at p=" + std::to_string(p));
                break;
            }
        }
        if (rationals_localization_membership(Rational(1) / Rational(p), p)) {
            rep.matched = false;
            rep.notes.push_back("1/p accepted at p=" + std::to_string(p));
        }
        std::uint64_t rc = rationals_residue_char(p);
        if (rc != p) {
            rep.matched = false;
            rep.notes.push_back("residue characteristic at p=" + std::to_string(p) + " is " +
                                std::to_string(rc));
        }
        residue_chars.insert(rc);
    }
    if (residue_chars.size() != primes.size()) {
        rep.matched = false;
        rep.notes.push_back("residue characteristics are not pairwise distinct");
    }
    rep.iso_classes = static_cast<std::uint32_t>(residue_chars.size());
    rep.expected_iso_classes = static_cast<std::uint32_t>(primes.size());
    return rep;
}

}  // namespace maxsub
