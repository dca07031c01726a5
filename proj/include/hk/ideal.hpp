#pragma once

#include <cstdint>
#include <vector>

#include "hk/length.hpp"
#include "hk/ring.hpp"

namespace hk {

/// An ideal of R = k[x]/J, represented by polynomial lifts of its
/// generators. The generators of J are implicitly part of every ideal-level
/// computation; use gens_with_j() for ambient-ring work.
class IdealHandle {
 public:
  IdealHandle(RingPresentation ring, std::vector<Poly> gens);

  /// The maximal ideal (x_1, ..., x_n).
  static IdealHandle maximal(const RingPresentation& ring);

  /// The unit ideal (1).
  static IdealHandle unit(const RingPresentation& ring);

  const RingPresentation& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  /// Generators together with the J-generators (lifted ideal in k[x]).
  std::vector<Poly> gens_with_j() const;

  /// True iff every generator lies in the maximal ideal modulo J.
  bool is_proper() const;

  /// True iff some generator is nonzero modulo J.
  bool is_nonzero() const;

 private:
  RingPresentation ring_;
  std::vector<Poly> gens_;
};

void check_same_ring(const IdealHandle& a, const IdealHandle& b);

/// A + B: concatenated generators.
IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);

/// A * B: pairwise products of generators.
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);

/// Frobenius bracket power A^[q]: q-th powers of the generators.
/// q must be a power of the characteristic (that is what makes the result
/// independent of the chosen generators).
IdealHandle frobenius_power(const IdealHandle& a, std::uint64_t q);

/// A intersect B, by elimination of a fresh tag variable.
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);

/// Colon ideal (A : h) = (1/h)(A intersect (h)); h must be nonzero mod J.
IdealHandle colon(const IdealHandle& a, const Poly& h);

/// (A : B) as the intersection of (A : g) over generators g of B.
IdealHandle colon_ideal(const IdealHandle& a, const IdealHandle& b);

/// Saturation (A : m^inf): iterate colon by the maximal ideal until stable.
IdealHandle saturate_m(const IdealHandle& a);

/// Membership of f in A (modulo J).
bool in_ideal(const Poly& f, const IdealHandle& a);

/// Equality of ideals in R, by mutual membership of generators.
bool ideal_equal(const IdealHandle& a, const IdealHandle& b);

/// Length of R_(x)/(A + J) as a k-vector space: the local length of the
/// quotient at the origin. Components of V(A + J) away from the origin do
/// not count; INFINITE when the origin is not an isolated point of V(A + J).
LengthValue local_length(const IdealHandle& a);

/// Dimension of (N + W)/W over k for a subquotient killed by `killer`:
/// requires killer * N contained in W + J, and a pure power of every variable
/// among killer's generators (so the quotient is finite and supported at the
/// origin). Computed as the rank of the normal forms of u*n over all
/// standard monomials u of the killer's pure-power box and generators n of N.
LengthValue subquotient_dim(const IdealHandle& N, const IdealHandle& W,
                            const IdealHandle& killer);

/// Exact division f / h in the ambient polynomial ring; h must divide f.
Poly poly_divexact(const Poly& f, const Poly& h);

}  // namespace hk
