#pragma once

#include <cstdint>

#include "hk/error.hpp"

namespace hk {

/// Trial-division primality test; enough for characteristics at desk scale.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// A validated prime characteristic p >= 2.
struct PrimeChar {
  std::uint32_t p;

  explicit PrimeChar(std::uint32_t value) : p(value) {
    if (!is_prime(value))
      throw precondition_error("characteristic must be prime, got " +
                               std::to_string(value));
  }

  friend bool operator==(const PrimeChar&, const PrimeChar&) = default;
};

// Arithmetic in Z/p. Values are kept reduced to [0, p).

inline std::uint32_t fp_reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t n, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  std::uint32_t base = a % p;
  while (n > 0) {
    if (n & 1) r = fp_mul(r, base, p);
    base = fp_mul(base, base, p);
    n >>= 1;
  }
  return r;
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw precondition_error("division by zero in Z/p");
  return fp_pow(a, p - 2, p);  // Fermat
}

/// Binomial coefficient C(n, k) mod p for n, k < p, by the falling-factorial
/// formula. Helper for binom_mod_p.
inline std::uint32_t binom_small_mod_p(std::uint32_t n, std::uint32_t k,
                                       std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t num = 1, den = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    num = fp_mul(num, (n - i) % p, p);
    den = fp_mul(den, (i + 1) % p, p);
  }
  return fp_mul(num, fp_inv(den, p), p);
}

/// C(n, k) mod p via Lucas' theorem on base-p digits. Exact for any n, k,
/// with no factorial overflow.
inline std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k,
                                 std::uint32_t p) {
  if (k > n) return 0;
  std::uint32_t result = 1;
  while (n > 0 || k > 0) {
    std::uint32_t nd = static_cast<std::uint32_t>(n % p);
    std::uint32_t kd = static_cast<std::uint32_t>(k % p);
    if (kd > nd) return 0;
    result = fp_mul(result, binom_small_mod_p(nd, kd, p), p);
    n /= p;
    k /= p;
  }
  return result;
}

/// True iff q = p^e for some e >= 0.
inline bool is_p_power(std::uint64_t q, std::uint32_t p) {
  if (q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

/// The exponent e with q = p^e; throws if q is not a power of p.
inline std::uint32_t p_power_exponent(std::uint64_t q, std::uint32_t p) {
  std::uint32_t e = 0;
  std::uint64_t v = q;
  while (v > 1 && v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1)
    throw precondition_error(std::to_string(q) + " is not a power of " +
                             std::to_string(p));
  return e;
}

}  // namespace hk
