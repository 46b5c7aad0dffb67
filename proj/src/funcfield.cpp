#include "maxsub/funcfield.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "maxsub/errors.hpp"
#include "maxsub/nt.hpp"

namespace maxsub {

namespace {

Elem field_inv(const FiniteRing& k, Elem x) {
    if (x == 0) throw Error("division by zero in the coefficient field");
    return k.pow(x, k.order() - 2);
}

void require_field(const FiniteRing& k) {
    if (!k.is_field()) throw Error(k.spec().render() + " is not a field");
}

}  // namespace

std::uint32_t FqPoly::degree() const {
    if (c.empty()) throw Error("zero polynomial has no degree");
    return static_cast<std::uint32_t>(c.size() - 1);
}

bool FqPoly::operator<(const FqPoly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    return std::lexicographical_compare(c.rbegin(), c.rend(), o.c.rbegin(), o.c.rend());
}

FqPoly poly_from_coeffs(std::vector<Elem> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return FqPoly{std::move(coeffs)};
}

FqPoly poly_add(const FiniteRing& k, const FqPoly& a, const FqPoly& b) {
    std::vector<Elem> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        out[i] = k.add(x, y);
    }
    return poly_from_coeffs(std::move(out));
}

FqPoly poly_sub(const FiniteRing& k, const FqPoly& a, const FqPoly& b) {
    std::vector<Elem> out(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        out[i] = k.sub(x, y);
    }
    return poly_from_coeffs(std::move(out));
}

FqPoly poly_mul(const FiniteRing& k, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elem> out(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out[i + j] = k.add(out[i + j], k.mul(a.c[i], b.c[j]));
    }
    return poly_from_coeffs(std::move(out));
}

std::pair<FqPoly, FqPoly> poly_divmod(const FiniteRing& k, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    const std::uint32_t db = b.degree();
    if (a.is_zero() || a.degree() < db) return {{}, a};
    std::vector<Elem> r = a.c;
    std::vector<Elem> q(a.degree() - db + 1, 0);
    const Elem lead_inv = field_inv(k, b.c.back());
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        Elem coef = k.mul(r[i], lead_inv);
        q[i - db] = coef;
        for (std::size_t j = 0; j <= db; ++j)
            r[i - db + j] = k.sub(r[i - db + j], k.mul(coef, b.c[j]));
    }
    return {poly_from_coeffs(std::move(q)), poly_from_coeffs(std::move(r))};
}

FqPoly poly_rem(const FiniteRing& k, const FqPoly& a, const FqPoly& b) {
    return poly_divmod(k, a, b).second;
}

FqPoly poly_monic(const FiniteRing& k, const FqPoly& a) {
    if (a.is_zero()) return a;
    Elem inv = field_inv(k, a.c.back());
    FqPoly out = a;
    for (Elem& ce : out.c) ce = k.mul(ce, inv);
    return out;
}

FqPoly poly_gcd(const FiniteRing& k, const FqPoly& a, const FqPoly& b) {
    FqPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        FqPoly r2 = poly_rem(k, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return poly_monic(k, r0);
}

FqPoly poly_inverse_mod(const FiniteRing& k, const FqPoly& a, const FqPoly& f) {
    // extended Euclid; u tracks the coefficient of a, so u0 * a = r0 mod f
    FqPoly r0 = f, r1 = poly_rem(k, a, f);
    FqPoly u0, u1 = poly_from_coeffs({1});
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(k, r0, r1);
        FqPoly u2 = poly_sub(k, u0, poly_mul(k, q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero() || r0.degree() != 0)
        throw Error("polynomial is not invertible modulo the given modulus");
    Elem scale = field_inv(k, r0.c[0]);
    for (Elem& ce : u0.c) ce = k.mul(ce, scale);
    return poly_rem(k, u0, f);
}

bool poly_irreducible(const FiniteRing& k, const FqPoly& f) {
    require_field(k);
    if (f.is_zero()) throw Error("zero polynomial");
    if (f.degree() == 0) return false;
    if (f.degree() == 1) return true;
    const std::uint64_t q = k.order();
    for (std::uint32_t d = 1; 2 * d <= f.degree(); ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= q;
        for (std::uint64_t j = 0; j < count; ++j) {
            std::vector<Elem> g(d + 1, 0);
            g[d] = 1;
            std::uint64_t t = j;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<Elem>(t % q);
                t /= q;
            }
            if (poly_rem(k, f, FqPoly{std::move(g)}).is_zero()) return false;
        }
    }
    return true;
}

std::vector<FqPoly> monic_irreducibles(const FiniteRing& k, std::uint32_t d) {
    require_field(k);
    if (d == 0) throw Error("polynomial degree must be positive");
    const std::uint64_t q = k.order();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        total *= q;
        if (total > 65536) throw CapExceededError("q^d exceeds 65536");
    }
    std::vector<FqPoly> out;
    for (std::uint64_t j = 0; j < total; ++j) {
        std::vector<Elem> cs(d + 1, 0);
        cs[d] = 1;
        std::uint64_t t = j;
        for (std::uint32_t i = 0; i < d; ++i) {
            cs[i] = static_cast<Elem>(t % q);
            t /= q;
        }
        FqPoly f{std::move(cs)};
        if (poly_irreducible(k, f)) out.push_back(std::move(f));
    }
    return out;
}

// ------------------------------------------------------------ parse/render

namespace {

struct PolyCursor {
    std::string_view s;
    std::size_t i = 0;

    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        ws();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    std::uint64_t num() {
        ws();
        if (!peek_digit()) throw SyntaxError("polynomial: expected a number in '" +
                                             std::string(s) + "'");
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > 1u << 20) throw SyntaxError("polynomial: number too large");
            ++i;
        }
        return v;
    }
    bool done() {
        ws();
        return i == s.size();
    }
};

constexpr std::uint32_t kMaxPolyDegree = 1024;

}  // namespace

FqPoly poly_parse(const FiniteRing& k, std::string_view text) {
    PolyCursor c{text};
    std::vector<Elem> acc;
    auto add_term = [&](std::uint64_t coeff, std::uint64_t deg) {
        if (coeff >= k.order())
            throw SyntaxError("polynomial: coefficient index " + std::to_string(coeff) +
                              " out of range for " + k.spec().render());
        if (deg > kMaxPolyDegree) throw SyntaxError("polynomial: degree too large");
        if (acc.size() < deg + 1) acc.resize(deg + 1, 0);
        acc[deg] = k.add(acc[deg], static_cast<Elem>(coeff));
    };
    while (true) {
        std::uint64_t coeff = 1;
        bool have_coeff = false;
        if (c.peek_digit()) {
            coeff = c.num();
            have_coeff = true;
        }
        bool have_x = false;
        if (have_coeff) {
            if (c.eat('*')) {
                if (!c.eat('x'))
                    throw SyntaxError("polynomial: expected x after '*' in '" +
                                      std::string(text) + "'");
                have_x = true;
            }
        } else if (c.eat('x')) {
            have_x = true;
        }
        if (!have_coeff && !have_x)
            throw SyntaxError("polynomial: expected a term in '" + std::string(text) + "'");
        std::uint64_t deg = 0;
        if (have_x) {
            deg = 1;
            if (c.eat('^')) deg = c.num();
        }
        add_term(coeff, deg);
        if (!c.eat('+')) break;
    }
    if (!c.done())
        throw SyntaxError("polynomial: trailing characters in '" + std::string(text) + "'");
    return poly_from_coeffs(std::move(acc));
}

std::string poly_render(const FqPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        Elem ce = f.c[i];
        if (ce == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(ce);
            continue;
        }
        if (ce != 1) out += std::to_string(ce) + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

bool Place::operator<(const Place& o) const {
    if (infinite != o.infinite) return !infinite;
    if (infinite) return false;
    return poly < o.poly;
}

Place place_parse(const FiniteRing& k, std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);
    if (!s.starts_with("place(") || !s.ends_with(")"))
        throw SyntaxError("place literal: expected place(...), got '" + std::string(text) + "'");
    std::string_view body = s.substr(6, s.size() - 7);
    {
        std::size_t bb = 0, be = body.size();
        while (bb < be && std::isspace(static_cast<unsigned char>(body[bb]))) ++bb;
        while (be > bb && std::isspace(static_cast<unsigned char>(body[be - 1]))) --be;
        body = body.substr(bb, be - bb);
    }
    if (body == "inf") return Place{true, {}};
    FqPoly f = poly_parse(k, body);
    if (f.is_zero() || f.degree() == 0 || f.c.back() != 1)
        throw Error("place polynomial must be monic of positive degree");
    if (!poly_irreducible(k, f))
        throw Error("place polynomial " + poly_render(f) + " is reducible over " +
                    k.spec().render());
    return Place{false, std::move(f)};
}

std::string place_render(const Place& pl) {
    if (pl.infinite) return "place(inf)";
    return "place(" + poly_render(pl.poly) + ")";
}

std::vector<Place> places_of_degree(const FiniteRing& k, std::uint32_t d) {
    std::vector<Place> out;
    for (FqPoly& f : monic_irreducibles(k, d)) out.push_back(Place{false, std::move(f)});
    if (d == 1) out.push_back(Place{true, {}});
    return out;
}

AbsField residue_field(const FiniteRing& k, const Place& pl) {
    require_field(k);
    return AbsField::finite(k.field_char(),
                            static_cast<std::uint64_t>(k.field_degree()) * pl.residue_degree());
}

SteinitzNumber SymbolicPlace::degree_steinitz() const {
    return SteinitzNumber::prime_power(prime, Exponent(power));
}

AbsField residue_field(const SymbolicPlace& pl) {
    return AbsField(pl.base.characteristic, mul(pl.base.st, pl.degree_steinitz()));
}

Discrimination discriminate_places(const FiniteRing& k, const Place& a, const Place& b) {
    return residue_field(k, a) == residue_field(k, b) ? Discrimination::Inconclusive
                                                      : Discrimination::NotIsomorphic;
}

Discrimination discriminate_places(const SymbolicPlace& a, const SymbolicPlace& b) {
    if (!(a.base == b.base)) throw Error("symbolic places must share a base field");
    return residue_field(a) == residue_field(b) ? Discrimination::Inconclusive
                                                : Discrimination::NotIsomorphic;
}

// ---------------------------------------------------------- witness stream

WitnessStream::WitnessStream(AbsField base) : base_(std::move(base)), prime_(0) {
    if (is_algebraically_closed(base_))
        throw AlgebraicallyClosedBaseError(
            base_.render() + " is algebraically closed: a single isomorphism class");
    for (std::uint64_t p = 2;; p = nt::next_prime(p)) {
        if (!base_.st.exponent_at(p).is_infinite()) {
            prime_ = p;
            break;
        }
    }
}

SymbolicPlace WitnessStream::next() {
    ++power_;
    return SymbolicPlace{base_, prime_, power_};
}

std::vector<SymbolicPlace> WitnessStream::take(std::size_t count) {
    std::vector<SymbolicPlace> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(next());
    return out;
}

// ------------------------------------------------------------- Mobius maps

MobiusMap mobius_normalize(const FiniteRing& k, std::array<Elem, 4> m) {
    require_field(k);
    Elem det = k.sub(k.mul(m[0], m[3]), k.mul(m[1], m[2]));
    if (det == 0) throw Error("Mobius map must have nonzero determinant");
    Elem lead = 0;
    for (Elem v : m) {
        if (v != 0) {
            lead = v;
            break;
        }
    }
    Elem inv = field_inv(k, lead);
    for (Elem& v : m) v = k.mul(v, inv);
    return MobiusMap{m};
}

std::vector<MobiusMap> all_mobius_maps(const FiniteRing& k) {
    require_field(k);
    if (k.order() > 16)
        throw CapExceededError("Mobius map enumeration needs a field of order <= 16");
    std::set<MobiusMap> seen;
    const std::uint32_t q = k.order();
    for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b)
            for (std::uint32_t c = 0; c < q; ++c)
                for (std::uint32_t d = 0; d < q; ++d) {
                    Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
                    Elem ec = static_cast<Elem>(c), ed = static_cast<Elem>(d);
                    if (k.sub(k.mul(ea, ed), k.mul(eb, ec)) == 0) continue;
                    seen.insert(mobius_normalize(k, {ea, eb, ec, ed}));
                }
    return std::vector<MobiusMap>(seen.begin(), seen.end());
}

MobiusMap mobius_compose(const FiniteRing& k, const MobiusMap& s, const MobiusMap& t) {
    // substitution composition acts like the 2x2 matrix product
    std::array<Elem, 4> r;
    r[0] = k.add(k.mul(s.m[0], t.m[0]), k.mul(s.m[1], t.m[2]));
    r[1] = k.add(k.mul(s.m[0], t.m[1]), k.mul(s.m[1], t.m[3]));
    r[2] = k.add(k.mul(s.m[2], t.m[0]), k.mul(s.m[3], t.m[2]));
    r[3] = k.add(k.mul(s.m[2], t.m[1]), k.mul(s.m[3], t.m[3]));
    return mobius_normalize(k, r);
}

namespace {

// minimal polynomial of t in K[x]/(f) over K: row-reduce the powers of t
FqPoly minimal_polynomial(const FiniteRing& k, const FqPoly& t, const FqPoly& f) {
    const std::uint32_t d = f.degree();
    std::vector<std::vector<Elem>> basis, combos;
    std::vector<std::uint32_t> pivot_of_row;
    FqPoly tp = poly_from_coeffs({1});
    for (std::uint32_t j = 0; j <= d; ++j) {
        std::vector<Elem> v(d, 0);
        for (std::size_t i = 0; i < tp.c.size(); ++i) v[i] = tp.c[i];
        std::vector<Elem> combo(j + 1, 0);
        combo[j] = 1;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            Elem lead = v[pivot_of_row[r]];
            if (lead == 0) continue;
            for (std::uint32_t col = 0; col < d; ++col)
                v[col] = k.sub(v[col], k.mul(lead, basis[r][col]));
            for (std::size_t col = 0; col < combos[r].size(); ++col)
                combo[col] = k.sub(combo[col], k.mul(lead, combos[r][col]));
        }
        std::uint32_t piv = d;
        for (std::uint32_t col = 0; col < d; ++col) {
            if (v[col] != 0) {
                piv = col;
                break;
            }
        }
        if (piv == d) return poly_from_coeffs(std::move(combo));  // monic relation found
        Elem inv = field_inv(k, v[piv]);
        for (std::uint32_t col = 0; col < d; ++col) v[col] = k.mul(v[col], inv);
        for (std::size_t col = 0; col < combo.size(); ++col) combo[col] = k.mul(combo[col], inv);
        basis.push_back(std::move(v));
        combos.push_back(std::move(combo));
        pivot_of_row.push_back(piv);
        tp = poly_rem(k, poly_mul(k, tp, t), f);
    }
    throw Error("no linear dependency among d+1 vectors");  // unreachable
}

}  // namespace

Place apply_mobius(const FiniteRing& k, const MobiusMap& s, const Place& pl) {
    const Elem a = s.m[0], b = s.m[1], c = s.m[2], d = s.m[3];
    if (pl.infinite) {
        if (c == 0) return Place{true, {}};
        Elem point = k.mul(a, field_inv(k, c));  // the image of the point at infinity
        return Place{false, poly_from_coeffs({k.neg(point), 1})};
    }
    const FqPoly& f = pl.poly;
    FqPoly num = poly_rem(k, poly_from_coeffs({b, a}), f);
    FqPoly den = poly_rem(k, poly_from_coeffs({d, c}), f);
    if (den.is_zero()) return Place{true, {}};
    FqPoly t = poly_rem(k, poly_mul(k, num, poly_inverse_mod(k, den, f)), f);
    return Place{false, minimal_polynomial(k, t, f)};
}

std::vector<Place> mobius_orbit(const FiniteRing& k, const Place& pl) {
    std::set<Place> orbit;
    for (const MobiusMap& s : all_mobius_maps(k)) orbit.insert(apply_mobius(k, s, pl));
    return std::vector<Place>(orbit.begin(), orbit.end());
}

OrbitReport check_orbit_vs_iso(const FiniteRing& k, std::uint32_t d) {
    require_field(k);
    if (k.field_degree() != 1)
        throw Error("orbit check needs a prime base field, got " + k.spec().render());
    OrbitReport rep;
    rep.degree = d;
    rep.places = places_of_degree(k, d);
    rep.orbits_preserve_degree = true;
    std::vector<char> visited(rep.places.size(), 0);
    for (std::size_t i = 0; i < rep.places.size(); ++i) {
        if (visited[i]) continue;
        std::vector<std::size_t> idx;
        for (const Place& img : mobius_orbit(k, rep.places[i])) {
            if (img.residue_degree() != d) {
                rep.orbits_preserve_degree = false;
                continue;
            }
            auto it = std::find(rep.places.begin(), rep.places.end(), img);
            if (it == rep.places.end()) {
                rep.orbits_preserve_degree = false;
                continue;
            }
            std::size_t pos = static_cast<std::size_t>(it - rep.places.begin());
            visited[pos] = 1;
            idx.push_back(pos);
        }
        std::sort(idx.begin(), idx.end());
        rep.orbits.push_back(std::move(idx));
    }
    rep.single_orbit = rep.orbits.size() == 1;
    return rep;
}

}  // namespace maxsub
