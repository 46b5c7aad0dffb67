#include "maxsub/steinitz.hpp"

#include <bit>
#include <cctype>
#include <set>
#include <sstream>

#include "maxsub/nt.hpp"

namespace maxsub {

namespace {

// generous budget for as_natural(); anything bigger is a caller bug
constexpr std::uint64_t kMaxNaturalBits = 1u << 20;

std::set<std::uint64_t> key_union(const SteinitzNumber& a, const SteinitzNumber& b) {
    std::set<std::uint64_t> ps;
    for (const auto& [p, e] : a.exceptional()) ps.insert(p);
    for (const auto& [p, e] : b.exceptional()) ps.insert(p);
    return ps;
}

}  // namespace

SteinitzNumber SteinitzNumber::all_infinite() {
    SteinitzNumber n;
    n.default_ = Exponent::infinity();
    return n;
}

SteinitzNumber SteinitzNumber::make(std::map<std::uint64_t, Exponent> exceptional,
                                    Exponent default_exponent) {
    if (!default_exponent.is_infinite() && default_exponent != Exponent(0))
        throw Error("SteinitzNumber: default exponent must be 0 or inf");
    SteinitzNumber n;
    n.default_ = default_exponent;
    for (const auto& [p, e] : exceptional) {
        if (!nt::is_prime(p))
            throw SyntaxError("SteinitzNumber: base " + std::to_string(p) + " is not prime");
        if (e != default_exponent) n.exceptional_.emplace(p, e);
    }
    return n;
}

SteinitzNumber SteinitzNumber::prime_power(std::uint64_t p, Exponent e) {
    return make({{p, e}});
}

SteinitzNumber SteinitzNumber::of_natural(std::uint64_t n) {
    if (n == 0) throw Error("SteinitzNumber: zero is not a Steinitz number");
    std::map<std::uint64_t, Exponent> m;
    for (const auto& [p, e] : nt::factorize(n)) m.emplace(p, Exponent(e));
    return make(std::move(m));
}

Exponent SteinitzNumber::exponent_at(std::uint64_t prime) const {
    auto it = exceptional_.find(prime);
    return it == exceptional_.end() ? default_ : it->second;
}

SteinitzNumber mul(const SteinitzNumber& a, const SteinitzNumber& b) {
    std::map<std::uint64_t, Exponent> m;
    for (std::uint64_t p : key_union(a, b)) m.emplace(p, a.exponent_at(p) + b.exponent_at(p));
    return SteinitzNumber::make(std::move(m), a.default_ + b.default_);
}

bool divides(const SteinitzNumber& a, const SteinitzNumber& b) {
    if (a.default_ > b.default_) return false;
    for (std::uint64_t p : key_union(a, b))
        if (a.exponent_at(p) > b.exponent_at(p)) return false;
    return true;
}

SteinitzNumber quotient(const SteinitzNumber& a, const SteinitzNumber& b) {
    if (!divides(b, a)) throw NotDivisibleError("quotient: divisor does not divide dividend");
    std::map<std::uint64_t, Exponent> m;
    for (std::uint64_t p : key_union(a, b))
        m.emplace(p, checked_sub(a.exponent_at(p), b.exponent_at(p)));
    return SteinitzNumber::make(std::move(m), checked_sub(a.default_, b.default_));
}

SteinitzNumber meet(const SteinitzNumber& a, const SteinitzNumber& b) {
    std::map<std::uint64_t, Exponent> m;
    for (std::uint64_t p : key_union(a, b)) m.emplace(p, min(a.exponent_at(p), b.exponent_at(p)));
    return SteinitzNumber::make(std::move(m), min(a.default_, b.default_));
}

SteinitzNumber join(const SteinitzNumber& a, const SteinitzNumber& b) {
    std::map<std::uint64_t, Exponent> m;
    for (std::uint64_t p : key_union(a, b)) m.emplace(p, max(a.exponent_at(p), b.exponent_at(p)));
    return SteinitzNumber::make(std::move(m), max(a.default_, b.default_));
}

SteinitzNumber SteinitzNumber::stable_part() const {
    std::map<std::uint64_t, Exponent> m;
    for (const auto& [p, e] : exceptional_)
        m.emplace(p, e.is_infinite() ? Exponent::infinity() : Exponent(0));
    return make(std::move(m), default_);
}

SteinitzNumber SteinitzNumber::finite_part() const {
    std::map<std::uint64_t, Exponent> m;
    for (const auto& [p, e] : exceptional_)
        if (!e.is_infinite()) m.emplace(p, e);
    return make(std::move(m), Exponent(0));
}

bool SteinitzNumber::natural_valued() const {
    if (default_.is_infinite()) return false;
    for (const auto& [p, e] : exceptional_)
        if (e.is_infinite()) return false;
    return true;
}

std::optional<Natural> SteinitzNumber::as_natural() const {
    if (!natural_valued()) return std::nullopt;
    std::uint64_t bits = 0;
    for (const auto& [p, e] : exceptional_) {
        bits += e.value() * std::bit_width(p);
        if (bits > kMaxNaturalBits)
            throw OverflowError("as_natural: value exceeds the size budget");
    }
    Natural out = 1;
    for (const auto& [p, e] : exceptional_)
        out *= boost::multiprecision::pow(Natural(p), static_cast<unsigned>(e.value()));
    return out;
}

std::vector<std::uint64_t> SteinitzNumber::finite_support() const {
    std::vector<std::uint64_t> out;
    for (const auto& [p, e] : exceptional_)
        if (!e.is_infinite() && e != Exponent(0)) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// text grammar
//
//   stexpr   := "1" | term ( "*" term )* ( "*" "rest^" dexp )? | "all^inf"
//   term     := prime "^" exp | prime
//   exp      := natural | "inf"
//   dexp     := "0" | "inf"
//
// whitespace around "*" is ignored

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    bool eat(char c) {
        if (!done() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        if (s.substr(i, w.size()) == w) {
            i += w.size();
            return true;
        }
        return false;
    }
    std::uint64_t natural() {
        if (done() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw SyntaxError("Steinitz expression: expected a number at position " +
                              std::to_string(i));
        std::uint64_t v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
            if (v > (UINT64_MAX - d) / 10) throw SyntaxError("Steinitz expression: number too large");
            v = v * 10 + d;
            ++i;
        }
        return v;
    }
};

}  // namespace

SteinitzNumber SteinitzNumber::parse(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.eat_word("all^inf")) {
        c.skip_ws();
        if (!c.done()) throw SyntaxError("Steinitz expression: trailing input after all^inf");
        return all_infinite();
    }
    std::map<std::uint64_t, Exponent> entries;
    Exponent def(0);
    bool saw_rest = false;
    while (true) {
        if (c.eat_word("rest^")) {
            if (entries.empty())
                throw SyntaxError("Steinitz expression: rest^ needs a preceding term");
            if (c.eat_word("inf"))
                def = Exponent::infinity();
            else if (c.eat('0'))
                def = Exponent(0);
            else
                throw SyntaxError("Steinitz expression: rest^ takes 0 or inf");
            saw_rest = true;
            c.skip_ws();
            if (!c.done()) throw SyntaxError("Steinitz expression: rest^ must be the last term");
            break;
        }
        std::uint64_t p = c.natural();
        if (p == 1) {
            // "1" only stands alone
            c.skip_ws();
            if (entries.empty() && c.done()) return one();
            throw SyntaxError("Steinitz expression: '1' must stand alone");
        }
        if (!nt::is_prime(p))
            throw SyntaxError("Steinitz expression: base " + std::to_string(p) + " is not prime");
        if (entries.count(p))
            throw SyntaxError("Steinitz expression: duplicate prime " + std::to_string(p));
        Exponent e(1);
        if (c.eat('^')) {
            if (c.eat_word("inf"))
                e = Exponent::infinity();
            else
                e = Exponent(c.natural());
        }
        entries.emplace(p, e);
        c.skip_ws();
        if (c.done()) break;
        if (!c.eat('*'))
            throw SyntaxError("Steinitz expression: expected '*' at position " + std::to_string(c.i));
        c.skip_ws();
    }
    (void)saw_rest;
    return make(std::move(entries), def);
}

namespace {

std::string render_with(const SteinitzNumber& n, const char* sep) {
    if (n.exceptional().empty())
        return n.default_exponent().is_infinite() ? "all^inf" : "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : n.exceptional()) {
        if (!first) os << sep;
        first = false;
        os << p;
        if (e.is_infinite())
            os << "^inf";
        else if (e != Exponent(1))
            os << '^' << e.value();
    }
    if (n.default_exponent().is_infinite()) os << sep << "rest^inf";
    return os.str();
}

}  // namespace

std::string SteinitzNumber::render() const { return render_with(*this, " * "); }

std::string SteinitzNumber::render_compact() const { return render_with(*this, "*"); }

}  // namespace maxsub
