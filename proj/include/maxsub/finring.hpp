#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maxsub {

// Element of a finite ring, identified by its index in a fixed enumeration.
using Elem = std::uint16_t;

// Construction recipe for a finite commutative unital ring.
struct RingSpec {
    enum class Kind { Field, Zmod, Product, Dual };

    Kind kind = Kind::Field;
    std::uint32_t p = 2;  // Field: characteristic
    std::uint32_t n = 1;  // Field: extension degree; Zmod: modulus
    std::vector<RingSpec> args;  // Product: factors; Dual: single base

    static RingSpec field(std::uint32_t p, std::uint32_t n);
    static RingSpec zmod(std::uint32_t n);
    static RingSpec product(std::vector<RingSpec> factors);
    static RingSpec dual(RingSpec base);

    // "GF(p,n)" | "Z/nZ" | "product(spec,...)" | "dual(spec)"
    static RingSpec parse(std::string_view text);
    std::string render() const;

    bool operator==(const RingSpec&) const;
};

// A finite commutative ring with identity. Elements are indices 0..order-1
// with 0 the zero and 1 the one. Handles are cheap to copy and share the
// underlying representation.
class FiniteRing {
public:
    static constexpr std::uint32_t kBuildCap = 4096;  // largest constructible order
    static constexpr std::uint32_t kEnumCap = 256;    // largest order with full tables

    static FiniteRing build(const RingSpec& spec);
    static FiniteRing build(std::string_view spec_text);

    std::uint32_t order() const;
    std::uint32_t characteristic() const;
    const RingSpec& spec() const;

    Elem add(Elem a, Elem b) const;
    Elem mul(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    bool is_field() const;  // GF(p,n) or Z/pZ with p prime
    std::uint32_t field_char() const;
    std::uint32_t field_degree() const;

    // Product rings: index of the tuple with the given per-factor elements.
    Elem compose(std::span<const Elem> components) const;
    std::vector<Elem> split(Elem e) const;

    // Dual-number rings dual(B): the element a + b*alpha with alpha^2 = 0.
    Elem from_pair(Elem a, Elem b) const;
    std::pair<Elem, Elem> to_pair(Elem e) const;

    // Full operation tables, materialized only when order() <= kEnumCap.
    bool has_tables() const;
    const std::vector<Elem>& add_table() const;  // row-major order x order
    const std::vector<Elem>& mul_table() const;
    const std::vector<Elem>& neg_table() const;

    struct Impl;

private:
    explicit FiniteRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// Number of monic irreducible polynomials of degree m over F_q (q a prime
// power, q^m <= 65536).
std::uint64_t count_monic_irreducibles(std::uint64_t q, std::uint64_t m);

}  // namespace maxsub
