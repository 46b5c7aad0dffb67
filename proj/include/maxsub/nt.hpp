#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace maxsub::nt {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n. Throws OverflowError past 2^64.
std::uint64_t next_prime(std::uint64_t n);

// First k primes, in order.
std::vector<std::uint64_t> first_primes(std::size_t k);

// Prime factorization of n >= 1 (Pollard rho + trial division), sorted by prime.
std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n);

// Moebius function of n >= 1.
int moebius(std::uint64_t n);

// All divisors of n >= 1, sorted ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp);  // throws on overflow

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace maxsub::nt
