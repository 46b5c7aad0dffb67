#include "maxsub/isomorphism.hpp"

#include <algorithm>
#include <map>

#include "maxsub/errors.hpp"
#include "maxsub/nt.hpp"

namespace maxsub {

namespace {

constexpr Elem kUnset = 0xFFFF;

}  // namespace

RingView RingView::of_ring(const FiniteRing& r) {
    if (!r.has_tables())
        throw CapExceededError("ring view needs order <= " + std::to_string(FiniteRing::kEnumCap));
    RingView v;
    v.order = r.order();
    v.add = r.add_table();
    v.mul = r.mul_table();
    v.neg = r.neg_table();
    v.to_parent.resize(v.order);
    for (std::uint32_t i = 0; i < v.order; ++i) v.to_parent[i] = static_cast<Elem>(i);
    return v;
}

RingView RingView::of_subring(const FiniteRing& r, const ElemSet& members) {
    if (!r.has_tables())
        throw CapExceededError("ring view needs order <= " + std::to_string(FiniteRing::kEnumCap));
    if (!members.test(0) || !members.test(1)) throw Error("subring must contain 0 and 1");
    RingView v;
    v.to_parent = members.to_indices();  // ascending, so 0 -> 0 and 1 -> 1
    v.order = static_cast<std::uint32_t>(v.to_parent.size());
    std::vector<Elem> local(r.order(), kUnset);
    for (std::uint32_t i = 0; i < v.order; ++i) local[v.to_parent[i]] = static_cast<Elem>(i);
    v.add.resize(static_cast<std::size_t>(v.order) * v.order);
    v.mul.resize(static_cast<std::size_t>(v.order) * v.order);
    v.neg.resize(v.order);
    for (std::uint32_t i = 0; i < v.order; ++i) {
        Elem pi = v.to_parent[i];
        Elem ni = local[r.neg(pi)];
        if (ni == kUnset) throw Error("element set is not closed under negation");
        v.neg[i] = ni;
        for (std::uint32_t j = 0; j < v.order; ++j) {
            Elem pj = v.to_parent[j];
            Elem s = local[r.add(pi, pj)];
            Elem m = local[r.mul(pi, pj)];
            if (s == kUnset || m == kUnset) throw Error("element set is not closed under + or *");
            v.add[static_cast<std::size_t>(i) * v.order + j] = s;
            v.mul[static_cast<std::size_t>(i) * v.order + j] = m;
        }
    }
    return v;
}

namespace {

// smallest k >= 1 with k*x = 0
std::uint32_t additive_order(const RingView& v, Elem x) {
    Elem y = x;
    std::uint32_t k = 1;
    while (y != 0) {
        y = v.addf(y, x);
        ++k;
    }
    return k;
}

// multiplicative order for units, 0 otherwise
std::uint32_t mult_order(const RingView& v, Elem x) {
    Elem y = x;
    for (std::uint32_t k = 1; k <= v.order; ++k) {
        if (y == 1) return k;
        y = v.mulf(y, x);
    }
    return 0;
}

// 0 when not nilpotent, else the least k with x^k = 0
std::uint32_t nilpotency_index(const RingView& v, Elem x) {
    if (x == 0) return 1;
    Elem y = x;
    for (std::uint32_t k = 1; k <= v.order; ++k) {
        if (y == 0) return k;
        y = v.mulf(y, x);
    }
    return 0;
}

// p^k * x via double-and-add
Elem scalar_mul(const RingView& v, std::uint64_t k, Elem x) {
    Elem acc = 0;
    Elem base = x;
    while (k) {
        if (k & 1) acc = v.addf(acc, base);
        base = v.addf(base, base);
        k >>= 1;
    }
    return acc;
}

struct ElemProfile {
    std::uint32_t add_order = 0;
    std::uint32_t mult_order = 0;
    std::uint32_t nilpotency = 0;
    bool idempotent = false;

    bool operator==(const ElemProfile&) const = default;
};

std::vector<ElemProfile> element_profiles(const RingView& v) {
    std::vector<ElemProfile> out(v.order);
    for (std::uint32_t x = 0; x < v.order; ++x) {
        Elem e = static_cast<Elem>(x);
        out[x].add_order = additive_order(v, e);
        out[x].mult_order = mult_order(v, e);
        out[x].nilpotency = nilpotency_index(v, e);
        out[x].idempotent = v.mulf(e, e) == e;
    }
    return out;
}

}  // namespace

IsoFingerprint fingerprint(const RingView& v) {
    IsoFingerprint fp;
    fp.order = v.order;
    fp.characteristic = additive_order(v, 1);
    std::map<std::uint32_t, std::uint32_t> uo;
    for (std::uint32_t x = 0; x < v.order; ++x) {
        Elem e = static_cast<Elem>(x);
        std::uint32_t mo = mult_order(v, e);
        if (mo) {
            ++fp.units;
            ++uo[mo];
        }
        if (v.mulf(e, e) == e) ++fp.idempotents;
        if (nilpotency_index(v, e)) ++fp.nilpotents;
    }
    fp.unit_orders.assign(uo.begin(), uo.end());

    // additive group: recover the elementary divisors from the sizes of the
    // p^k-torsion subgroups
    for (const auto& kv : nt::factorize(v.order)) {
        const std::uint64_t p = kv.first;
        std::vector<std::uint32_t> torsion_log;  // log_p |{x : p^k x = 0}|
        torsion_log.push_back(0);
        std::uint64_t pk = 1;
        while (true) {
            pk *= p;
            std::uint32_t cnt = 0;
            for (std::uint32_t x = 0; x < v.order; ++x)
                if (scalar_mul(v, pk, static_cast<Elem>(x)) == 0) ++cnt;
            std::uint32_t lg = 0;
            for (std::uint32_t t = cnt; t > 1; t /= static_cast<std::uint32_t>(p)) ++lg;
            torsion_log.push_back(lg);
            if (torsion_log.size() >= 2 &&
                torsion_log.back() == torsion_log[torsion_log.size() - 2])
                break;
        }
        // factors with exponent >= k: torsion_log[k] - torsion_log[k-1]
        for (std::size_t k = 1; k + 1 < torsion_log.size(); ++k) {
            std::uint32_t at_least_k = torsion_log[k] - torsion_log[k - 1];
            std::uint32_t at_least_next = torsion_log[k + 1] - torsion_log[k];
            std::uint32_t exactly_k = at_least_k - at_least_next;
            std::uint64_t value = 1;
            for (std::size_t i = 0; i < k; ++i) value *= p;
            for (std::uint32_t c = 0; c < exactly_k; ++c) fp.elementary_divisors.push_back(value);
        }
    }
    std::sort(fp.elementary_divisors.begin(), fp.elementary_divisors.end());
    return fp;
}

namespace {

// closure of seed under +, *, - within a view
std::vector<Elem> view_closure(const RingView& v, const std::vector<Elem>& seed) {
    std::vector<char> in(v.order, 0);
    std::vector<Elem> elems, stack;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            stack.push_back(x);
        }
    };
    push(0);
    push(1);
    for (Elem e : seed) push(e);
    while (!stack.empty()) {
        Elem u = stack.back();
        stack.pop_back();
        elems.push_back(u);
        push(v.neg[u]);
        for (Elem w : elems) {
            push(v.addf(u, w));
            push(v.mulf(u, w));
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<Elem> generating_set(const RingView& v) {
    std::vector<Elem> gens;
    std::vector<Elem> closed = view_closure(v, gens);
    while (closed.size() < v.order) {
        // first element outside the closure
        Elem next = 0;
        std::vector<char> in(v.order, 0);
        for (Elem e : closed) in[e] = 1;
        while (in[next]) ++next;
        gens.push_back(next);
        closed = view_closure(v, gens);
    }
    return gens;
}

struct IsoSearch {
    const RingView& a;
    const RingView& b;
    std::vector<ElemProfile> pa, pb;
    std::vector<Elem> gens;
    std::vector<std::pair<Elem, Elem>> assigns;

    std::vector<Elem> amap;
    ElemSet bused;

    bool propagate() {
        amap.assign(a.order, kUnset);
        bused = ElemSet{};
        std::vector<Elem> mapped;
        auto bind = [&](Elem x, Elem y) -> bool {
            if (amap[x] != kUnset) return amap[x] == y;
            if (bused.test(y)) return false;
            amap[x] = y;
            bused.set(y);
            mapped.push_back(x);
            return true;
        };
        if (!bind(0, 0) || !bind(1, 1)) return false;
        for (const auto& [g, h] : assigns)
            if (!bind(g, h)) return false;
        for (std::size_t qi = 0; qi < mapped.size(); ++qi) {
            Elem x = mapped[qi];
            for (std::size_t j = 0; j <= qi; ++j) {
                Elem y = mapped[j];
                if (!bind(a.addf(x, y), b.addf(amap[x], amap[y]))) return false;
                if (!bind(a.mulf(x, y), b.mulf(amap[x], amap[y]))) return false;
            }
        }
        return true;
    }

    std::optional<IsoWitness> run() {
        if (!propagate()) return std::nullopt;
        Elem g = kUnset;
        for (Elem cand : gens) {
            if (amap[cand] == kUnset) {
                g = cand;
                break;
            }
        }
        if (g == kUnset) {
            // all generators mapped, so propagation covered the whole ring
            IsoWitness w = amap;
            if (!witness_checks(a, b, w)) return std::nullopt;
            return w;
        }
        ElemSet used_here = bused;
        for (std::uint32_t h = 0; h < b.order; ++h) {
            if (used_here.test(h)) continue;
            if (!(pa[g] == pb[h])) continue;
            assigns.emplace_back(g, static_cast<Elem>(h));
            if (auto w = run()) return w;
            assigns.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<IsoWitness> find_isomorphism(const RingView& a, const RingView& b) {
    if (a.order != b.order) return std::nullopt;
    if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
    IsoSearch s{a, b, element_profiles(a), element_profiles(b), generating_set(a), {}, {}, {}};
    return s.run();
}

bool are_isomorphic(const RingView& a, const RingView& b) {
    return find_isomorphism(a, b).has_value();
}

bool witness_checks(const RingView& a, const RingView& b, const IsoWitness& w) {
    if (a.order != b.order || w.size() != a.order) return false;
    std::vector<char> hit(b.order, 0);
    for (Elem y : w) {
        if (y >= b.order || hit[y]) return false;
        hit[y] = 1;
    }
    if (w[0] != 0 || w[1] != 1) return false;
    for (std::uint32_t x = 0; x < a.order; ++x) {
        for (std::uint32_t y = 0; y < a.order; ++y) {
            Elem xe = static_cast<Elem>(x), ye = static_cast<Elem>(y);
            if (w[a.addf(xe, ye)] != b.addf(w[x], w[y])) return false;
            if (w[a.mulf(xe, ye)] != b.mulf(w[x], w[y])) return false;
        }
    }
    return true;
}

std::vector<IsoClass> classify_up_to_iso(const std::vector<RingView>& items) {
    std::vector<IsoClass> classes;
    for (std::size_t i = 0; i < items.size(); ++i) {
        bool placed = false;
        for (IsoClass& cls : classes) {
            if (auto w = find_isomorphism(items[i], items[cls.representative])) {
                cls.members.push_back(i);
                cls.witnesses.push_back(std::move(*w));
                placed = true;
                break;
            }
        }
        if (!placed) {
            IsoClass cls;
            cls.representative = i;
            cls.members.push_back(i);
            cls.witnesses.emplace_back();
            classes.push_back(std::move(cls));
        }
    }
    return classes;
}

}  // namespace maxsub
