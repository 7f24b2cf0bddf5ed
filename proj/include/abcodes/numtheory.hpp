#pragma once

// Small integer number theory used throughout: primality, factorization,
// modular powers, divisor counts.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace abcodes {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;
};

bool is_prime(u64 n);

// Prime factorization in increasing prime order. factorize(1) is empty.
std::vector<PrimePower> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

// All positive divisors, ascending.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

// Checked integer power; throws std::overflow_error past 2^64.
u64 ipow(u64 base, unsigned exp);

// Returns (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<PrimePower> as_prime_power(u64 q);

// p-adic valuation of n (n > 0).
unsigned valuation(u64 n, u64 p);

}  // namespace abcodes
