#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxsub/errors.hpp"

namespace maxsub {

using Natural = boost::multiprecision::cpp_int;

// An exponent in {0, 1, 2, ...} ∪ {∞}, totally ordered with ∞ on top.
// Addition is saturating at ∞; finite overflow raises OverflowError.
class Exponent {
public:
    constexpr Exponent() = default;
    Exponent(std::uint64_t v) : v_(v) {
        if (v == kInf) throw OverflowError("Exponent: finite value too large");
    }
    static constexpr Exponent infinity() {
        Exponent e;
        e.v_ = kInf;
        return e;
    }

    bool is_infinite() const { return v_ == kInf; }
    std::uint64_t value() const {
        if (is_infinite()) throw Error("Exponent: value() on infinity");
        return v_;
    }

    friend bool operator==(Exponent a, Exponent b) = default;
    friend auto operator<=>(Exponent a, Exponent b) { return a.v_ <=> b.v_; }

    friend Exponent operator+(Exponent a, Exponent b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        if (a.v_ > UINT64_MAX - 1 - b.v_) throw OverflowError("Exponent: sum overflow");
        return Exponent(a.v_ + b.v_);
    }

    // a - b, requiring b <= a. ∞ - finite = ∞; ∞ - ∞ is rejected.
    friend Exponent checked_sub(Exponent a, Exponent b) {
        if (b.is_infinite()) {
            if (a.is_infinite())
                throw AmbiguousInfiniteQuotientError("exponent ∞ - ∞ is not defined");
            throw NotDivisibleError("exponent subtraction would be negative");
        }
        if (a.is_infinite()) return infinity();
        if (b.v_ > a.v_) throw NotDivisibleError("exponent subtraction would be negative");
        return Exponent(a.v_ - b.v_);
    }

    friend Exponent min(Exponent a, Exponent b) { return a <= b ? a : b; }
    friend Exponent max(Exponent a, Exponent b) { return a <= b ? b : a; }

private:
    static constexpr std::uint64_t kInf = UINT64_MAX;
    std::uint64_t v_ = 0;
};

// A Steinitz (supernatural) number: a formal product over all primes with
// exponents in {0,1,2,...,∞}. Stored as a finite map of exceptional
// prime -> exponent entries over a default exponent that is either 0 or ∞,
// so only eventually-constant exponent sequences are representable. Values
// are canonical (no entry equals the default) and immutable, so structural
// equality is semantic equality.
class SteinitzNumber {
public:
    // the number 1 (all exponents 0)
    SteinitzNumber() = default;

    static SteinitzNumber one() { return SteinitzNumber(); }

    // all exponents ∞; the Steinitz number of an algebraic closure
    static SteinitzNumber all_infinite();

    // canonicalizes and validates: keys must be prime, default must be 0 or ∞
    static SteinitzNumber make(std::map<std::uint64_t, Exponent> exceptional,
                               Exponent default_exponent = Exponent(0));

    static SteinitzNumber prime_power(std::uint64_t p, Exponent e);

    // factorizes an ordinary natural number n >= 1
    static SteinitzNumber of_natural(std::uint64_t n);

    static SteinitzNumber parse(std::string_view text);
    std::string render() const;          // terms joined by " * "
    std::string render_compact() const;  // no spaces, for embedding in field literals

    Exponent exponent_at(std::uint64_t prime) const;
    const std::map<std::uint64_t, Exponent>& exceptional() const { return exceptional_; }
    Exponent default_exponent() const { return default_; }

    bool operator==(const SteinitzNumber&) const = default;

    friend SteinitzNumber mul(const SteinitzNumber& a, const SteinitzNumber& b);
    friend bool divides(const SteinitzNumber& a, const SteinitzNumber& b);
    // a / b; requires divides(b, a) and no prime with exponent ∞ in both
    friend SteinitzNumber quotient(const SteinitzNumber& a, const SteinitzNumber& b);
    friend SteinitzNumber meet(const SteinitzNumber& a, const SteinitzNumber& b);
    friend SteinitzNumber join(const SteinitzNumber& a, const SteinitzNumber& b);

    // exponent ∞ exactly where this has exponent ∞, else 0
    SteinitzNumber stable_part() const;
    // exponents kept where finite, ∞ dropped to 0; always natural-valued
    SteinitzNumber finite_part() const;

    // true iff default is 0 and every exponent is finite
    bool natural_valued() const;
    // the integer value when natural_valued(), else nullopt;
    // OverflowError if it would exceed the size budget
    std::optional<Natural> as_natural() const;

    // primes with exponent strictly between 0 and ∞ (always a finite set here)
    std::vector<std::uint64_t> finite_support() const;

private:
    std::map<std::uint64_t, Exponent> exceptional_;
    Exponent default_{0};
};

}  // namespace maxsub
