#pragma once

#include <cstdint>
#include <vector>

#include "hk/ideal.hpp"
#include "hk/lucas.hpp"

namespace hk {

/// Presentation of R(I)_{a,b} = R[It]/(I^2(t^2 + at + b)): the base ring, a
/// proper nonzero ideal I, and the two parameters reduced modulo J.
/// As an R-module this is R (+) I, so elements are written r + it.
class RabSpec {
 public:
  RabSpec(RingPresentation ring, IdealHandle ideal, Poly a, Poly b);

  const RingPresentation& ring() const { return ring_; }
  const IdealHandle& ideal() const { return ideal_; }
  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }

  /// Reduced basis of I + J, for membership checks of t-coefficients.
  const GroebnerBasis& ideal_groebner() const { return igb_; }

 private:
  RingPresentation ring_;
  IdealHandle ideal_;
  Poly a_, b_;
  GroebnerBasis igb_;
};

/// An element r + it of R(I)_{a,b}. Both components are stored as normal
/// forms modulo J; the t-coefficient is certified to lie in I + J at
/// construction. Arithmetic closure keeps membership without per-operation
/// checks.
class RabElement {
 public:
  RabElement(const RabSpec& spec, Poly r, Poly i);

  /// Construction that skips the membership certificate, for results of
  /// arithmetic whose membership is guaranteed by closure.
  static RabElement unchecked(const RabSpec& spec, Poly r, Poly i);

  static RabElement one(const RabSpec& spec);
  static RabElement zero(const RabSpec& spec);

  const Poly& r() const { return r_; }
  const Poly& i() const { return i_; }

  friend bool operator==(const RabElement&, const RabElement&) = default;

 private:
  RabElement() = default;
  Poly r_, i_;
};

/// The defining multiplication rule:
/// (r + it)(s + jt) = rs - bij + (rj + si - aij)t.
RabElement rab_mul(const RabElement& x, const RabElement& y,
                   const RabSpec& spec);

RabElement rab_add(const RabElement& x, const RabElement& y,
                   const RabSpec& spec);

/// Closed form of (r + it)^n: the binomial double-sum formula, with
/// binomial coefficients mod p via Lucas' theorem.
RabElement rab_pow_closed(const RabElement& x, std::uint64_t n,
                          const RabSpec& spec);

/// (r + it)^n by repeated squaring with rab_mul — the independent check of
/// the closed form.
RabElement rab_pow_iter(const RabElement& x, std::uint64_t n,
                        const RabSpec& spec);

/// Generators of the Frobenius power n^[q] of the maximal ideal
/// n = (m-gens) + (I-gens)t: the q-th powers { m_g^q } and
/// { A_q i_g^q + B_q i_g^q t }.
std::vector<RabElement> rab_frobenius_gens(const RabSpec& spec,
                                           std::uint64_t q);

}  // namespace hk
