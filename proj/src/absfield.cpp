#include "maxsub/absfield.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "maxsub/errors.hpp"
#include "maxsub/nt.hpp"

namespace maxsub {

AbsField::AbsField(std::uint64_t q, SteinitzNumber n) : characteristic(q), st(std::move(n)) {
    if (!nt::is_prime(q))
        throw Error("field characteristic " + std::to_string(q) + " is not prime");
}

AbsField AbsField::finite(std::uint64_t p, std::uint64_t n) {
    if (n == 0) throw Error("finite field degree must be positive");
    return AbsField(p, SteinitzNumber::of_natural(n));
}

namespace {

// "digits" prefix of text, returning the value and advancing pos
std::uint64_t parse_u64(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw SyntaxError("field literal: expected a number in '" + std::string(text) + "'");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::uint64_t d = static_cast<std::uint64_t>(text[pos] - '0');
        if (v > (UINT64_MAX - d) / 10) throw SyntaxError("field literal: number too large");
        v = v * 10 + d;
        ++pos;
    }
    return v;
}

}  // namespace

AbsField AbsField::parse(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view s = text.substr(b, e - b);

    if (s.starts_with("GF(") && s.ends_with(")")) {
        std::string_view body = s.substr(3, s.size() - 4);
        std::size_t pos = 0;
        std::uint64_t q = parse_u64(body, pos);
        if (pos >= body.size() || body[pos] != '^')
            throw SyntaxError("field literal: expected '^' after characteristic in '" +
                              std::string(text) + "'");
        ++pos;
        if (!nt::is_prime(q))
            throw SyntaxError("field literal: characteristic " + std::to_string(q) +
                              " is not prime");
        return AbsField(q, SteinitzNumber::parse(body.substr(pos)));
    }
    if (s.starts_with("F_{") && s.ends_with("}")) {
        std::string_view body = s.substr(3, s.size() - 4);
        std::size_t pos = 0;
        std::uint64_t q = parse_u64(body, pos);
        std::uint64_t n = 1;
        if (pos < body.size()) {
            if (body[pos] != '^')
                throw SyntaxError("field literal: expected '^' in '" + std::string(text) + "'");
            ++pos;
            n = parse_u64(body, pos);
        }
        if (pos != body.size())
            throw SyntaxError("field literal: trailing characters in '" + std::string(text) + "'");
        if (!nt::is_prime(q))
            throw SyntaxError("field literal: characteristic " + std::to_string(q) +
                              " is not prime");
        if (n == 0) throw SyntaxError("field literal: degree must be positive");
        return finite(q, n);
    }
    throw SyntaxError("field literal: expected GF(q^...) or F_{q^n}, got '" + std::string(text) +
                      "'");
}

std::string AbsField::render() const {
    return "GF(" + std::to_string(characteristic) + "^" + st.render_compact() + ")";
}

bool is_subfield(const AbsField& sub, const AbsField& sup) {
    return sub.characteristic == sup.characteristic && divides(sub.st, sup.st);
}

std::optional<Natural> extension_degree(const AbsField& sub, const AbsField& sup) {
    if (!is_subfield(sub, sup))
        throw NotASubfieldError(sub.render() + " is not a subfield of " + sup.render());
    // Degree is finite iff every prime with a finite exponent downstairs also
    // has a finite exponent upstairs; primes with infinite exponent in both
    // contribute nothing.
    if (!sub.st.default_exponent().is_infinite() && sup.st.default_exponent().is_infinite())
        return std::nullopt;
    std::map<std::uint64_t, Exponent> diff;
    bool infinite = false;
    auto visit = [&](std::uint64_t p) {
        Exponent a = sub.st.exponent_at(p);
        Exponent b = sup.st.exponent_at(p);
        if (a.is_infinite()) return;  // matching infinite exponents contribute a factor 1
        if (b.is_infinite()) {
            infinite = true;
            return;
        }
        if (b.value() > a.value()) diff.emplace(p, Exponent(b.value() - a.value()));
    };
    for (const auto& [p, e] : sub.st.exceptional()) visit(p);
    for (const auto& [p, e] : sup.st.exceptional())
        if (!sub.st.exceptional().count(p)) visit(p);
    if (infinite) return std::nullopt;
    return SteinitzNumber::make(std::move(diff)).as_natural();
}

std::vector<MaximalSubringDescriptor> maximal_subrings(const AbsField& e) {
    std::vector<MaximalSubringDescriptor> out;
    for (std::uint64_t p : e.st.finite_support()) {
        SteinitzNumber down = quotient(e.st, SteinitzNumber::prime_power(p, 1));
        out.push_back({e, p, AbsField(e.characteristic, std::move(down))});
    }
    return out;
}

std::uint64_t Cardinal::value() const {
    if (!finite)
        throw InfinitelyManyMaximalSubringsError("count is aleph_0, not a natural number");
    return *finite;
}

Cardinal count_maximal_subrings_up_to_iso(const AbsField& e) {
    if (!has_finitely_many_maximal_subrings(e)) return Cardinal::aleph0();
    return Cardinal::of(e.st.finite_support().size());
}

bool has_finitely_many_maximal_subrings(const AbsField& e) {
    return e.st.finite_part().natural_valued();
}

AbsField no_maximal_subring_core(const AbsField& e) {
    return AbsField(e.characteristic, e.st.stable_part());
}

std::uint64_t chain_length(const AbsField& e) {
    std::uint64_t len = 0;
    for (const auto& [p, exp] : e.st.exceptional()) {
        if (exp.is_infinite()) continue;
        if (len > UINT64_MAX - exp.value()) throw OverflowError("chain length overflows");
        len += exp.value();
    }
    return len;
}

Natural chain_count(const AbsField& e) {
    // Multinomial coefficient of the finite exponent multiset, built as a
    // product of binomials so every intermediate value is integral.
    Natural count = 1;
    std::uint64_t placed = 0;
    for (const auto& [p, exp] : e.st.exceptional()) {
        if (exp.is_infinite()) continue;
        for (std::uint64_t i = 1; i <= exp.value(); ++i) {
            ++placed;
            count = count * placed / i;
        }
    }
    return count;
}

namespace {

void chains_rec(const AbsField& f, std::vector<AbsField>& path,
                std::vector<std::vector<AbsField>>& out) {
    path.push_back(f);
    auto steps = maximal_subrings(f);
    if (steps.empty()) {
        out.push_back(path);
    } else {
        for (const auto& d : steps) chains_rec(d.subfield, path, out);
    }
    path.pop_back();
}

}  // namespace

std::vector<std::vector<AbsField>> enumerate_chains(const AbsField& e, std::uint64_t limit) {
    Natural total = chain_count(e);
    if (total > Natural(limit))
        throw LimitExceededError("chain enumeration: " + total.str() + " chains exceed limit " +
                                 std::to_string(limit));
    std::vector<std::vector<AbsField>> out;
    std::vector<AbsField> path;
    chains_rec(e, path, out);
    return out;
}

bool irreducible_degree_exists(const AbsField& e, std::uint64_t m) {
    if (m == 0) throw Error("polynomial degree must be positive");
    for (const auto& [p, k] : nt::factorize(m))
        if (e.st.exponent_at(p).is_infinite()) return false;
    return true;
}

AbsField adjoin_degree(const AbsField& e, std::uint64_t m) {
    if (!irreducible_degree_exists(e, m))
        throw NoIrreducibleOfThatDegreeError("no irreducible polynomial of degree " +
                                             std::to_string(m) + " over " + e.render());
    return AbsField(e.characteristic, mul(e.st, SteinitzNumber::of_natural(m)));
}

bool is_algebraically_closed(const AbsField& e) {
    return e.st == SteinitzNumber::all_infinite();
}

}  // namespace maxsub
