#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hk/length.hpp"
#include "hk/order.hpp"
#include "hk/poly.hpp"

namespace hk {

/// A monomial ideal given by its minimal generators (an antichain under
/// divisibility, sorted canonically).
class MonomialIdeal {
 public:
  MonomialIdeal(std::uint32_t nvars, std::vector<Monomial> gens);

  std::uint32_t nvars() const { return nvars_; }
  const std::vector<Monomial>& min_gens() const { return gens_; }

  bool contains(const Monomial& m) const;
  bool is_unit() const;  // 1 in the ideal

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::uint32_t nvars_;
  std::vector<Monomial> gens_;
};

/// A reduced Groebner basis: monic elements, pairwise fully reduced, with
/// leading monomials forming an antichain, sorted ascending by the order.
/// Unique for a given ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis(Ambient amb, MonomialOrder order, std::vector<Poly> elems);

  const Ambient& ambient() const { return amb_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Poly>& elements() const { return elems_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }
  bool is_zero_ideal() const { return elems_.empty(); }
  bool contains_unit() const;

 private:
  Ambient amb_;
  MonomialOrder order_;
  std::vector<Poly> elems_;
  std::vector<Monomial> lms_;
};

/// The unique reduced Groebner basis of the ideal generated by `gens`.
/// Buchberger with the coprime-lead and chain criteria, normal pair
/// selection (smallest lcm degree first), then full inter-reduction.
/// Zero generators are ignored; all-zero input yields the empty basis.
GroebnerBasis reduced_gb(const std::vector<Poly>& gens,
                         const MonomialOrder& order);

/// Canonical remainder of f modulo G: no term of the result is divisible by
/// any leading monomial of G, and f minus the result lies in the ideal.
/// A linear, idempotent map.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

/// Reusable normal-form engine: converts the basis to working form once.
/// Prefer this over repeated normal_form calls in inner loops.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& G);
  ~Reducer();
  Reducer(Reducer&&) noexcept;
  Reducer& operator=(Reducer&&) noexcept;
  Reducer(const Reducer&) = delete;

  Poly reduce(const Poly& f) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Leading monomials of a reduced basis, as a monomial ideal.
MonomialIdeal initial_ideal(const GroebnerBasis& G);

/// Number of standard monomials (monomials outside M) — the k-dimension of
/// the quotient by M — or INFINITE when some variable has no pure-power
/// bound in M.
LengthValue kdim_quotient(const MonomialIdeal& M);

/// Krull dimension of the quotient by M: the largest size of a variable
/// subset S such that no generator of M involves only variables from S.
std::uint32_t krull_dim(const MonomialIdeal& M);

/// True iff f lies in the ideal generated by `gens`.
bool ideal_membership(const Poly& f, const std::vector<Poly>& gens,
                      const MonomialOrder& order);

/// S-polynomial of two monic-or-not nonzero polynomials (exposed for tests).
Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order);

}  // namespace hk
