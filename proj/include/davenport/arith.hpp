#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace davenport {

bool is_prime(std::int64_t n);

// Prime factorization by trial division, as (prime, exponent) pairs in
// ascending prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime_power(std::int64_t n);

// Overflow-checked arithmetic; throws Error{Overflow}.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exp);

// Least non-negative residue.
inline std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace davenport
