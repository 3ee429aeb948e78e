#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace sigma {

/// Prime factorization of n as (prime, exponent) pairs, ascending primes.
/// Group orders here are products of primes bounded by the permutation
/// degree, so plain trial division is always exact and fast.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Distinct primes dividing n, ascending. pi(1) is empty.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) return false;
  return true;
}

inline bool is_prime_power(std::uint64_t n) {
  return n > 1 && factorize(n).size() == 1;
}

/// Checked multiply; returns false on uint64 overflow.
inline bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return std::lcm(a, b);
}

}  // namespace sigma
