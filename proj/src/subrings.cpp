#include "maxsub/subrings.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "maxsub/errors.hpp"
#include "maxsub/nt.hpp"

namespace maxsub {

unsigned ElemSet::count() const {
    return static_cast<unsigned>(std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
                                 std::popcount(w[3]));
}

bool ElemSet::subset_of(const ElemSet& o) const {
    for (int i = 0; i < 4; ++i)
        if (w[i] & ~o.w[i]) return false;
    return true;
}

ElemSet operator&(ElemSet a, const ElemSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] &= b.w[i];
    return a;
}

ElemSet operator|(ElemSet a, const ElemSet& b) {
    for (int i = 0; i < 4; ++i) a.w[i] |= b.w[i];
    return a;
}

std::vector<Elem> ElemSet::to_indices() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (int i = 0; i < 4; ++i) {
        std::uint64_t word = w[i];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<Elem>(64 * i + b));
            word &= word - 1;
        }
    }
    return out;
}

ElemSet ElemSet::of_indices(const std::vector<Elem>& idx) {
    ElemSet s;
    for (Elem e : idx) s.set(e);
    return s;
}

std::size_t ElemSet::Hash::operator()(const ElemSet& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15u;
    for (std::uint64_t word : s.w) {
        h ^= word + 0x9e3779b97f4a7c15u + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

namespace {

void require_tables(const FiniteRing& r) {
    if (!r.has_tables())
        throw CapExceededError("subring enumeration needs order <= " +
                               std::to_string(FiniteRing::kEnumCap) + ", got " +
                               std::to_string(r.order()));
}

// closure kernel against raw tables; avoids FiniteRing calls in the hot loop
ElemSet closure_impl(const Elem* add, const Elem* mul, const Elem* neg, std::uint32_t order,
                     const ElemSet& seed) {
    ElemSet in;
    std::array<Elem, 256> stack;
    std::array<Elem, 256> elems;
    unsigned sp = 0, ne = 0;
    auto push = [&](Elem x) {
        if (!in.test(x)) {
            in.set(x);
            stack[sp++] = x;
        }
    };
    push(0);
    push(1);
    for (Elem e : seed.to_indices()) push(e);
    while (sp) {
        Elem u = stack[--sp];
        elems[ne++] = u;
        push(neg[u]);
        const Elem* arow = add + static_cast<std::size_t>(u) * order;
        const Elem* mrow = mul + static_cast<std::size_t>(u) * order;
        for (unsigned i = 0; i < ne; ++i) {
            push(arow[elems[i]]);
            push(mrow[elems[i]]);
        }
    }
    return in;
}

}  // namespace

ElemSet ring_closure(const FiniteRing& r, const ElemSet& seed) {
    require_tables(r);
    return closure_impl(r.add_table().data(), r.mul_table().data(), r.neg_table().data(),
                        r.order(), seed);
}

ElemSet prime_subring(const FiniteRing& r) { return ring_closure(r, ElemSet{}); }

std::vector<ElemSet> enumerate_subrings(const FiniteRing& r, Exec exec) {
    require_tables(r);
    const Elem* add = r.add_table().data();
    const Elem* mul = r.mul_table().data();
    const Elem* neg = r.neg_table().data();
    const std::uint32_t order = r.order();
    [[maybe_unused]] const bool parallel = exec == Exec::Parallel;

    ElemSet root = closure_impl(add, mul, neg, order, ElemSet{});
    std::unordered_set<ElemSet, ElemSet::Hash> seen{root};
    std::vector<ElemSet> found{root};
    std::vector<ElemSet> frontier{root};

    while (!frontier.empty()) {
        // one closure job per (known subring, element outside it)
        std::vector<std::pair<const ElemSet*, Elem>> jobs;
        for (const ElemSet& s : frontier)
            for (std::uint32_t x = 0; x < order; ++x)
                if (!s.test(x)) jobs.emplace_back(&s, static_cast<Elem>(x));

        std::vector<ElemSet> results(jobs.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i) {
            ElemSet seed = *jobs[i].first;
            seed.set(jobs[i].second);
            results[i] = closure_impl(add, mul, neg, order, seed);
        }

        std::vector<ElemSet> next;
        for (ElemSet& res : results) {
            if (seen.insert(res).second) {
                found.push_back(res);
                next.push_back(res);
            }
        }
        frontier = std::move(next);
    }

    std::sort(found.begin(), found.end(), [](const ElemSet& a, const ElemSet& b) {
        unsigned ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    return found;
}

std::vector<ElemSet> maximal_subring_sets(const FiniteRing& r, Exec exec) {
    std::vector<ElemSet> all = enumerate_subrings(r, exec);
    std::vector<ElemSet> proper;
    for (const ElemSet& s : all)
        if (s.count() < r.order()) proper.push_back(s);
    std::vector<ElemSet> maximal;
    for (const ElemSet& s : proper) {
        bool is_max = true;
        for (const ElemSet& t : proper) {
            if (&t != &s && s != t && s.subset_of(t)) {
                is_max = false;
                break;
            }
        }
        if (is_max) maximal.push_back(s);
    }
    return maximal;
}

std::vector<SubfieldInfo> enumerate_subfields(const FiniteRing& field) {
    if (!field.is_field()) throw Error(field.spec().render() + " is not a field");
    const std::uint32_t p = field.field_char();
    const std::uint32_t n = field.field_degree();
    const std::uint32_t order = field.order();

    // frob[x] = x^p, iterated d times to test x^(p^d) = x
    std::vector<Elem> frob(order);
    for (std::uint32_t x = 0; x < order; ++x)
        frob[x] = field.pow(static_cast<Elem>(x), p);

    std::vector<SubfieldInfo> out;
    for (std::uint64_t d : nt::divisors(n)) {
        SubfieldInfo info;
        info.degree = static_cast<std::uint32_t>(d);
        for (std::uint32_t x = 0; x < order; ++x) {
            Elem y = static_cast<Elem>(x);
            for (std::uint64_t i = 0; i < d; ++i) y = frob[y];
            if (y == x) info.elements.push_back(static_cast<Elem>(x));
        }
        std::uint64_t expect = 1;
        for (std::uint64_t i = 0; i < d; ++i) expect *= p;
        if (info.elements.size() != expect)
            throw Error("subfield of degree " + std::to_string(d) + " has wrong size");
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(),
              [](const SubfieldInfo& a, const SubfieldInfo& b) { return a.degree < b.degree; });
    return out;
}

}  // namespace maxsub
