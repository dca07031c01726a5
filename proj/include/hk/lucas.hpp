#pragma once

#include <cstdint>

#include "hk/ring.hpp"

namespace hk {

/// Classification of B_q as an element of the local ring R.
enum class BqClass { ZERO, UNIT, NONUNIT_NONZERO };

const char* to_string(BqClass c);

/// The pair (A_q, B_q) appearing in (r + it)^q = r^q + A_q i^q + (B_q i^q)t,
/// stored as normal forms modulo J. Both depend only on a, b and q.
struct LucasPair {
  Poly a_q;
  Poly b_q;
  std::uint64_t q = 1;
};

/// Fast path: the Lucas-type recurrence s_0 = 1, s_1 = -a,
/// s_n = -a s_{n-1} - b s_{n-2}; then B_q = s_{q-1} and A_q = -b s_{q-2}.
/// Validated against lucas_direct by the test suite before being trusted.
LucasPair lucas_pair(const Poly& a, const Poly& b, std::uint64_t q,
                     const RingPresentation& ring);

/// Literal evaluation of the defining double sums
///   A_q = sum_{u+2v=q-2} C(u+v,u) (-a)^u (-b)^{v+1}
///   B_q = sum_{u+2v=q-1} C(u+v,u) (-a)^u (-b)^v
/// with binomial coefficients mod p via Lucas' theorem. O(q) terms; this is
/// the oracle, capped to keep runs bounded.
LucasPair lucas_direct(const Poly& a, const Poly& b, std::uint64_t q,
                       const RingPresentation& ring,
                       std::uint64_t cap = 0 /* 0: default p^7 */);

/// ZERO / UNIT / NONUNIT_NONZERO from the normal form of B_q: zero normal
/// form, nonzero constant term (a unit of the local ring), or neither.
BqClass classify_bq(const LucasPair& pair, const RingPresentation& ring);

}  // namespace hk
