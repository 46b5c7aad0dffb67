#include "maxsub/nt.hpp"

#include <algorithm>
#include <numeric>

#include "maxsub/errors.hpp"

namespace maxsub::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // these bases are a deterministic witness set for n < 2^64
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n < 2) return 2;
    std::uint64_t c = n + 1;
    if (c < n) throw OverflowError("next_prime: past 2^64");
    while (!is_prime(c)) {
        ++c;
        if (c == 0) throw OverflowError("next_prime: past 2^64");
    }
    return c;
}

std::vector<std::uint64_t> first_primes(std::size_t k) {
    std::vector<std::uint64_t> out;
    out.reserve(k);
    std::uint64_t p = 2;
    while (out.size() < k) {
        out.push_back(p);
        p = next_prime(p);
    }
    return out;
}

namespace {

std::uint64_t pollard_rho(std::uint64_t n) {
    // n composite, odd, not a prime power issue: returns a nontrivial factor
    if (n % 2 == 0) return 2;
    std::uint64_t x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;  // cycle degenerated; retry with another polynomial
    }
}

void factor_rec(std::uint64_t n, std::map<std::uint64_t, std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n) {
    if (n == 0) throw Error("factorize: zero has no factorization");
    std::map<std::uint64_t, std::uint64_t> out;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

int moebius(std::uint64_t n) {
    auto f = factorize(n);
    for (const auto& [p, e] : f) {
        (void)p;
        if (e > 1) return 0;
    }
    return f.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    auto f = factorize(n);
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : f) {
        std::size_t sz = out.size();
        std::uint64_t pk = 1;
        for (std::uint64_t i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) {
            if (base != 0 && r > UINT64_MAX / base) throw OverflowError("pow_u64 overflow");
            r *= base;
        }
        exp >>= 1;
        if (exp) {
            if (base > 1 && base > UINT64_MAX / base) throw OverflowError("pow_u64 overflow");
            base *= base;
        }
    }
    return r;
}

}  // namespace maxsub::nt
