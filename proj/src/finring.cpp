#include "maxsub/finring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

#include "maxsub/errors.hpp"
#include "maxsub/nt.hpp"

namespace maxsub {

// ---------------------------------------------------------------- RingSpec

RingSpec RingSpec::field(std::uint32_t p, std::uint32_t n) {
    RingSpec s;
    s.kind = Kind::Field;
    s.p = p;
    s.n = n;
    return s;
}

RingSpec RingSpec::zmod(std::uint32_t n) {
    RingSpec s;
    s.kind = Kind::Zmod;
    s.n = n;
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    if (factors.size() < 2) throw BadSpecError("product needs at least two factors");
    RingSpec s;
    s.kind = Kind::Product;
    s.args = std::move(factors);
    return s;
}

RingSpec RingSpec::dual(RingSpec base) {
    RingSpec s;
    s.kind = Kind::Dual;
    s.args.push_back(std::move(base));
    return s;
}

bool RingSpec::operator==(const RingSpec& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Field: return p == o.p && n == o.n;
        case Kind::Zmod: return n == o.n;
        case Kind::Product:
        case Kind::Dual: return args == o.args;
    }
    return false;
}

namespace {

struct SpecCursor {
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
    void expect(char c) {
        if (!eat(c))
            throw SyntaxError(std::string("ring spec: expected '") + c + "' in '" +
                              std::string(s) + "'");
    }
    bool word(std::string_view w) {
        ws();
        if (s.substr(i).starts_with(w)) {
            i += w.size();
            return true;
        }
        return false;
    }
    std::uint32_t num() {
        ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw SyntaxError("ring spec: expected a number in '" + std::string(s) + "'");
        std::uint64_t v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (v > UINT32_MAX) throw SyntaxError("ring spec: number too large");
            ++i;
        }
        return static_cast<std::uint32_t>(v);
    }
    bool done() {
        ws();
        return i == s.size();
    }
};

RingSpec parse_spec(SpecCursor& c) {
    if (c.word("GF")) {
        c.expect('(');
        std::uint32_t p = c.num();
        c.expect(',');
        std::uint32_t n = c.num();
        c.expect(')');
        return RingSpec::field(p, n);
    }
    if (c.word("product")) {
        c.expect('(');
        std::vector<RingSpec> fs;
        fs.push_back(parse_spec(c));
        while (c.eat(',')) fs.push_back(parse_spec(c));
        c.expect(')');
        return RingSpec::product(std::move(fs));
    }
    if (c.word("dual")) {
        c.expect('(');
        RingSpec base = parse_spec(c);
        c.expect(')');
        return RingSpec::dual(std::move(base));
    }
    if (c.word("Z")) {
        c.expect('/');
        std::uint32_t n = c.num();
        if (!c.word("Z"))
            throw SyntaxError("ring spec: expected trailing 'Z' in '" + std::string(c.s) + "'");
        return RingSpec::zmod(n);
    }
    throw SyntaxError("ring spec: expected GF(p,n), Z/nZ, product(...) or dual(...), got '" +
                      std::string(c.s) + "'");
}

}  // namespace

RingSpec RingSpec::parse(std::string_view text) {
    SpecCursor c{text};
    RingSpec s = parse_spec(c);
    if (!c.done())
        throw SyntaxError("ring spec: trailing characters in '" + std::string(text) + "'");
    return s;
}

std::string RingSpec::render() const {
    switch (kind) {
        case Kind::Field:
            return "GF(" + std::to_string(p) + "," + std::to_string(n) + ")";
        case Kind::Zmod:
            return "Z/" + std::to_string(n) + "Z";
        case Kind::Product: {
            std::string out = "product(";
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) out += ",";
                out += args[i].render();
            }
            return out + ")";
        }
        case Kind::Dual:
            return "dual(" + args[0].render() + ")";
    }
    return {};
}

// ------------------------------------------------- polynomial search (F_p)

namespace {

using Digits = std::vector<std::uint32_t>;

// true iff monic g divides r over F_p (both little-endian, leading coeff 1)
bool monic_divides(const Digits& g, Digits r, std::uint32_t p) {
    std::size_t dg = g.size() - 1;
    for (std::size_t i = r.size(); i-- > dg;) {
        std::uint32_t c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < dg; ++j)
            r[i - dg + j] = (r[i - dg + j] + c * (p - g[j])) % p;
    }
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

// lexicographically smallest monic irreducible of degree n over F_p, ordered
// by the base-p encoding of the non-leading coefficients
Digits smallest_irreducible(std::uint32_t p, std::uint32_t n) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= p;
    for (std::uint64_t k = 0; k < total; ++k) {
        Digits f(n + 1, 0);
        f[n] = 1;
        std::uint64_t t = k;
        for (std::uint32_t i = 0; i < n; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        bool reducible = false;
        for (std::uint32_t d = 1; !reducible && 2 * d <= n; ++d) {
            std::uint64_t count = 1;
            for (std::uint32_t i = 0; i < d; ++i) count *= p;
            for (std::uint64_t j = 0; j < count; ++j) {
                Digits g(d + 1, 0);
                g[d] = 1;
                std::uint64_t u = j;
                for (std::uint32_t i = 0; i < d; ++i) {
                    g[i] = static_cast<std::uint32_t>(u % p);
                    u /= p;
                }
                if (monic_divides(g, f, p)) {
                    reducible = true;
                    break;
                }
            }
        }
        if (!reducible) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

// ------------------------------------------------------------------ impls

struct FiniteRing::Impl {
    RingSpec spec;
    std::uint32_t order = 0;
    std::uint32_t characteristic = 0;
    std::vector<Elem> add_tab, mul_tab, neg_tab;

    virtual ~Impl() = default;
    virtual Elem raw_add(Elem a, Elem b) const = 0;
    virtual Elem raw_mul(Elem a, Elem b) const = 0;
    virtual Elem raw_neg(Elem a) const = 0;
    virtual Elem to_raw(Elem e) const { return e; }
    virtual Elem to_pub(Elem e) const { return e; }

    Elem padd(Elem a, Elem b) const { return to_pub(raw_add(to_raw(a), to_raw(b))); }
    Elem pmul(Elem a, Elem b) const { return to_pub(raw_mul(to_raw(a), to_raw(b))); }
    Elem pneg(Elem a) const { return to_pub(raw_neg(to_raw(a))); }
};

namespace {

constexpr std::uint32_t kMaxDegree = 16;

std::uint64_t checked_order(std::uint64_t acc, std::uint64_t factor, const RingSpec& spec) {
    acc *= factor;
    if (acc > FiniteRing::kBuildCap)
        throw CapExceededError("ring order of " + spec.render() + " exceeds " +
                               std::to_string(FiniteRing::kBuildCap));
    return acc;
}

struct FieldImpl final : FiniteRing::Impl {
    std::uint32_t p = 2, n = 1;
    std::array<std::uint32_t, kMaxDegree> rc{};  // x^n = sum rc[i] x^i

    void decode(Elem e, std::uint32_t* d) const {
        std::uint32_t v = e;
        for (std::uint32_t i = 0; i < n; ++i) {
            d[i] = v % p;
            v /= p;
        }
    }
    Elem encode(const std::uint32_t* d) const {
        std::uint32_t v = 0;
        for (std::uint32_t i = n; i-- > 0;) v = v * p + d[i];
        return static_cast<Elem>(v);
    }
    Elem raw_add(Elem a, Elem b) const override {
        std::array<std::uint32_t, kMaxDegree> da, db;
        decode(a, da.data());
        decode(b, db.data());
        for (std::uint32_t i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
        return encode(da.data());
    }
    Elem raw_neg(Elem a) const override {
        std::array<std::uint32_t, kMaxDegree> da;
        decode(a, da.data());
        for (std::uint32_t i = 0; i < n; ++i) da[i] = (p - da[i]) % p;
        return encode(da.data());
    }
    Elem raw_mul(Elem a, Elem b) const override {
        std::array<std::uint32_t, kMaxDegree> da, db;
        std::array<std::uint32_t, 2 * kMaxDegree> prod{};
        decode(a, da.data());
        decode(b, db.data());
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!da[i]) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        for (std::uint32_t i = 2 * n - 2; i + 1 > n; --i) {
            std::uint32_t c = prod[i];
            if (!c) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < n; ++j) prod[i - n + j] = (prod[i - n + j] + c * rc[j]) % p;
        }
        return encode(prod.data());
    }
};

struct ZmodImpl final : FiniteRing::Impl {
    std::uint32_t m = 2;

    Elem raw_add(Elem a, Elem b) const override {
        return static_cast<Elem>((static_cast<std::uint32_t>(a) + b) % m);
    }
    Elem raw_mul(Elem a, Elem b) const override {
        return static_cast<Elem>((static_cast<std::uint32_t>(a) * b) % m);
    }
    Elem raw_neg(Elem a) const override { return static_cast<Elem>((m - a) % m); }
};

struct ProductImpl final : FiniteRing::Impl {
    std::vector<FiniteRing> factors;
    std::vector<std::uint32_t> orders;
    Elem one_raw = 0;

    // the public labeling swaps index 1 with the raw index of the identity so
    // that element 1 is the ring's one
    Elem to_raw(Elem e) const override {
        if (e == 1) return one_raw;
        if (e == one_raw) return 1;
        return e;
    }
    Elem to_pub(Elem e) const override { return to_raw(e); }

    void dec(Elem e, Elem* d) const {
        std::uint32_t v = e;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            d[i] = static_cast<Elem>(v % orders[i]);
            v /= orders[i];
        }
    }
    Elem enc(const Elem* d) const {
        std::uint32_t v = 0;
        for (std::size_t i = factors.size(); i-- > 0;) v = v * orders[i] + d[i];
        return static_cast<Elem>(v);
    }
    Elem raw_add(Elem a, Elem b) const override {
        std::array<Elem, kMaxDegree> da, db;
        dec(a, da.data());
        dec(b, db.data());
        for (std::size_t i = 0; i < factors.size(); ++i) da[i] = factors[i].add(da[i], db[i]);
        return enc(da.data());
    }
    Elem raw_mul(Elem a, Elem b) const override {
        std::array<Elem, kMaxDegree> da, db;
        dec(a, da.data());
        dec(b, db.data());
        for (std::size_t i = 0; i < factors.size(); ++i) da[i] = factors[i].mul(da[i], db[i]);
        return enc(da.data());
    }
    Elem raw_neg(Elem a) const override {
        std::array<Elem, kMaxDegree> da;
        dec(a, da.data());
        for (std::size_t i = 0; i < factors.size(); ++i) da[i] = factors[i].neg(da[i]);
        return enc(da.data());
    }
};

struct DualImpl final : FiniteRing::Impl {
    FiniteRing base;
    std::uint32_t bo = 0;  // base order

    explicit DualImpl(FiniteRing b) : base(std::move(b)), bo(base.order()) {}

    Elem raw_add(Elem a, Elem b) const override {
        return static_cast<Elem>(base.add(static_cast<Elem>(a % bo), static_cast<Elem>(b % bo)) +
                                 base.add(static_cast<Elem>(a / bo), static_cast<Elem>(b / bo)) * bo);
    }
    Elem raw_mul(Elem a, Elem b) const override {
        Elem x1 = static_cast<Elem>(a % bo), y1 = static_cast<Elem>(a / bo);
        Elem x2 = static_cast<Elem>(b % bo), y2 = static_cast<Elem>(b / bo);
        Elem lo = base.mul(x1, x2);
        Elem hi = base.add(base.mul(x1, y2), base.mul(y1, x2));
        return static_cast<Elem>(lo + hi * bo);
    }
    Elem raw_neg(Elem a) const override {
        return static_cast<Elem>(base.neg(static_cast<Elem>(a % bo)) +
                                 base.neg(static_cast<Elem>(a / bo)) * bo);
    }
};

std::shared_ptr<FiniteRing::Impl> make_impl(const RingSpec& spec) {
    switch (spec.kind) {
        case RingSpec::Kind::Field: {
            if (!nt::is_prime(spec.p))
                throw BadSpecError("GF characteristic " + std::to_string(spec.p) +
                                   " is not prime");
            if (spec.n == 0 || spec.n > kMaxDegree - 1)
                throw BadSpecError("GF degree out of range in " + spec.render());
            std::uint64_t order = 1;
            for (std::uint32_t i = 0; i < spec.n; ++i) order = checked_order(order, spec.p, spec);
            auto impl = std::make_shared<FieldImpl>();
            impl->p = spec.p;
            impl->n = spec.n;
            Digits f = smallest_irreducible(spec.p, spec.n);
            for (std::uint32_t i = 0; i < spec.n; ++i) impl->rc[i] = (spec.p - f[i]) % spec.p;
            impl->order = static_cast<std::uint32_t>(order);
            impl->characteristic = spec.p;
            return impl;
        }
        case RingSpec::Kind::Zmod: {
            if (spec.n < 2) throw BadSpecError("Z/nZ modulus must be at least 2");
            if (spec.n > FiniteRing::kBuildCap)
                throw CapExceededError("ring order of " + spec.render() + " exceeds " +
                                       std::to_string(FiniteRing::kBuildCap));
            auto impl = std::make_shared<ZmodImpl>();
            impl->m = spec.n;
            impl->order = spec.n;
            impl->characteristic = spec.n;
            return impl;
        }
        case RingSpec::Kind::Product: {
            auto impl = std::make_shared<ProductImpl>();
            std::uint64_t order = 1;
            std::uint64_t ch = 1;
            for (const auto& a : spec.args) {
                FiniteRing f = FiniteRing::build(a);
                order = checked_order(order, f.order(), spec);
                ch = std::lcm(ch, static_cast<std::uint64_t>(f.characteristic()));
                impl->orders.push_back(f.order());
                impl->factors.push_back(std::move(f));
            }
            if (impl->factors.size() > kMaxDegree)
                throw BadSpecError("product has too many factors");
            impl->order = static_cast<std::uint32_t>(order);
            impl->characteristic = static_cast<std::uint32_t>(ch);
            std::array<Elem, kMaxDegree> ones;
            ones.fill(1);
            impl->one_raw = impl->enc(ones.data());
            return impl;
        }
        case RingSpec::Kind::Dual: {
            FiniteRing base = FiniteRing::build(spec.args[0]);
            std::uint64_t order =
                checked_order(static_cast<std::uint64_t>(base.order()), base.order(), spec);
            auto impl = std::make_shared<DualImpl>(std::move(base));
            impl->order = static_cast<std::uint32_t>(order);
            impl->characteristic = impl->base.characteristic();
            return impl;
        }
    }
    throw BadSpecError("unknown ring spec kind");
}

}  // namespace

// ------------------------------------------------------------- FiniteRing

FiniteRing FiniteRing::build(const RingSpec& spec) {
    std::shared_ptr<Impl> impl = make_impl(spec);
    impl->spec = spec;
    if (impl->order <= kEnumCap) {
        const std::uint32_t n = impl->order;
        impl->neg_tab.resize(n);
        impl->add_tab.resize(static_cast<std::size_t>(n) * n);
        impl->mul_tab.resize(static_cast<std::size_t>(n) * n);
        for (std::uint32_t a = 0; a < n; ++a) {
            impl->neg_tab[a] = impl->pneg(static_cast<Elem>(a));
            for (std::uint32_t b = 0; b < n; ++b) {
                impl->add_tab[static_cast<std::size_t>(a) * n + b] =
                    impl->padd(static_cast<Elem>(a), static_cast<Elem>(b));
                impl->mul_tab[static_cast<std::size_t>(a) * n + b] =
                    impl->pmul(static_cast<Elem>(a), static_cast<Elem>(b));
            }
        }
    }
    return FiniteRing(std::move(impl));
}

FiniteRing FiniteRing::build(std::string_view spec_text) {
    return build(RingSpec::parse(spec_text));
}

std::uint32_t FiniteRing::order() const { return impl_->order; }
std::uint32_t FiniteRing::characteristic() const { return impl_->characteristic; }
const RingSpec& FiniteRing::spec() const { return impl_->spec; }

Elem FiniteRing::add(Elem a, Elem b) const {
    const Impl& im = *impl_;
    if (!im.add_tab.empty()) return im.add_tab[static_cast<std::size_t>(a) * im.order + b];
    return im.padd(a, b);
}

Elem FiniteRing::mul(Elem a, Elem b) const {
    const Impl& im = *impl_;
    if (!im.mul_tab.empty()) return im.mul_tab[static_cast<std::size_t>(a) * im.order + b];
    return im.pmul(a, b);
}

Elem FiniteRing::neg(Elem a) const {
    const Impl& im = *impl_;
    if (!im.neg_tab.empty()) return im.neg_tab[a];
    return im.pneg(a);
}

Elem FiniteRing::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    Elem base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

bool FiniteRing::is_field() const {
    const RingSpec& s = impl_->spec;
    if (s.kind == RingSpec::Kind::Field) return true;
    return s.kind == RingSpec::Kind::Zmod && nt::is_prime(s.n);
}

std::uint32_t FiniteRing::field_char() const {
    if (!is_field()) throw Error(impl_->spec.render() + " is not a field");
    return impl_->characteristic;
}

std::uint32_t FiniteRing::field_degree() const {
    if (!is_field()) throw Error(impl_->spec.render() + " is not a field");
    return impl_->spec.kind == RingSpec::Kind::Field ? impl_->spec.n : 1;
}

Elem FiniteRing::compose(std::span<const Elem> components) const {
    auto* prod = dynamic_cast<const ProductImpl*>(impl_.get());
    if (!prod) throw Error(impl_->spec.render() + " is not a product ring");
    if (components.size() != prod->factors.size())
        throw Error("component count does not match product arity");
    return prod->to_pub(prod->enc(components.data()));
}

std::vector<Elem> FiniteRing::split(Elem e) const {
    auto* prod = dynamic_cast<const ProductImpl*>(impl_.get());
    if (!prod) throw Error(impl_->spec.render() + " is not a product ring");
    std::array<Elem, kMaxDegree> d;
    prod->dec(prod->to_raw(e), d.data());
    return std::vector<Elem>(d.begin(), d.begin() + prod->factors.size());
}

Elem FiniteRing::from_pair(Elem a, Elem b) const {
    auto* dual = dynamic_cast<const DualImpl*>(impl_.get());
    if (!dual) throw Error(impl_->spec.render() + " is not a dual-number ring");
    return static_cast<Elem>(a + b * dual->bo);
}

std::pair<Elem, Elem> FiniteRing::to_pair(Elem e) const {
    auto* dual = dynamic_cast<const DualImpl*>(impl_.get());
    if (!dual) throw Error(impl_->spec.render() + " is not a dual-number ring");
    return {static_cast<Elem>(e % dual->bo), static_cast<Elem>(e / dual->bo)};
}

bool FiniteRing::has_tables() const { return !impl_->add_tab.empty(); }

const std::vector<Elem>& FiniteRing::add_table() const {
    if (!has_tables()) throw Error("ring order exceeds the table cap");
    return impl_->add_tab;
}

const std::vector<Elem>& FiniteRing::mul_table() const {
    if (!has_tables()) throw Error("ring order exceeds the table cap");
    return impl_->mul_tab;
}

const std::vector<Elem>& FiniteRing::neg_table() const {
    if (!has_tables()) throw Error("ring order exceeds the table cap");
    return impl_->neg_tab;
}

std::uint64_t count_monic_irreducibles(std::uint64_t q, std::uint64_t m) {
    if (m == 0) throw Error("polynomial degree must be positive");
    if (nt::factorize(q).size() != 1) throw Error(std::to_string(q) + " is not a prime power");
    std::uint64_t qm = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        qm *= q;
        if (qm > 65536) throw CapExceededError("q^m exceeds 65536");
    }
    std::int64_t sum = 0;
    for (std::uint64_t d : nt::divisors(m)) {
        int mu = nt::moebius(d);
        if (!mu) continue;
        std::uint64_t t = 1;
        for (std::uint64_t i = 0; i < m / d; ++i) t *= q;
        sum += mu * static_cast<std::int64_t>(t);
    }
    return static_cast<std::uint64_t>(sum / static_cast<std::int64_t>(m));
}

}  // namespace maxsub
