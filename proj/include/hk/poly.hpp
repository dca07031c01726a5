#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hk/fp.hpp"
#include "hk/monomial.hpp"
#include "hk/order.hpp"

namespace hk {

/// The ambient polynomial ring of a value: coefficients in Z/p, a fixed
/// number of variables. Binary operations require equal ambients.
struct Ambient {
  std::uint32_t p = 0;
  std::uint32_t nvars = 0;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Sparse multivariate polynomial over Z/p. Terms are kept in canonical form:
/// sorted ascending by the canonical monomial comparison, no zero
/// coefficients, each monomial at most once. All operations return canonical
/// values; instances are immutable in practice and safe to share across
/// threads.
class Poly {
 public:
  using Term = std::pair<Monomial, std::uint32_t>;

  Poly() = default;

  static Poly zero(const Ambient& amb) {
    Poly f;
    f.amb_ = amb;
    return f;
  }

  static Poly constant(const Ambient& amb, std::int64_t c) {
    Poly f = zero(amb);
    std::uint32_t r = fp_reduce(c, amb.p);
    if (r != 0) f.terms_.emplace_back(Monomial::one(amb.nvars), r);
    return f;
  }

  static Poly variable(const Ambient& amb, std::uint32_t idx) {
    Poly f = zero(amb);
    f.terms_.emplace_back(Monomial::var(amb.nvars, idx), 1 % amb.p);
    if (f.terms_.back().second == 0) f.terms_.clear();  // p = 1 never happens
    return f;
  }

  static Poly term(const Ambient& amb, Monomial m, std::int64_t c) {
    Poly f = zero(amb);
    std::uint32_t r = fp_reduce(c, amb.p);
    if (r != 0) f.terms_.emplace_back(std::move(m), r);
    return f;
  }

  static Poly from_terms(const Ambient& amb,
                         const std::vector<std::pair<Monomial, std::int64_t>>& ts) {
    std::map<Monomial, std::uint32_t> acc;
    for (const auto& [m, c] : ts) {
      std::uint32_t r = fp_reduce(c, amb.p);
      auto [it, fresh] = acc.emplace(m, r);
      if (!fresh) it->second = fp_add(it->second, r, amb.p);
    }
    return from_map(amb, acc);
  }

  const Ambient& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }

  /// Coefficient of the monomial 1.
  std::uint32_t constant_term() const {
    Monomial one = Monomial::one(amb_.nvars);
    for (const auto& [m, c] : terms_)
      if (m == one) return c;
    return 0;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
  }

  Poly operator+(const Poly& g) const {
    check_same_ambient(g);
    Poly r = zero(amb_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin(), b = g.terms_.begin();
    while (a != terms_.end() && b != g.terms_.end()) {
      if (a->first < b->first) {
        r.terms_.push_back(*a++);
      } else if (b->first < a->first) {
        r.terms_.push_back(*b++);
      } else {
        std::uint32_t c = fp_add(a->second, b->second, amb_.p);
        if (c != 0) r.terms_.emplace_back(a->first, c);
        ++a;
        ++b;
      }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, g.terms_.end());
    return r;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = fp_neg(c, amb_.p);
    return r;
  }

  Poly operator-(const Poly& g) const { return *this + (-g); }

  Poly operator*(const Poly& g) const {
    check_same_ambient(g);
    std::map<Monomial, std::uint32_t> acc;
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : g.terms_) {
        std::uint32_t c = fp_mul(ca, cb, amb_.p);
        if (c == 0) continue;
        Monomial m = ma * mb;
        auto [it, fresh] = acc.emplace(std::move(m), c);
        if (!fresh) it->second = fp_add(it->second, c, amb_.p);
      }
    }
    return from_map(amb_, acc);
  }

  Poly scaled(std::uint32_t c) const {
    c %= amb_.p;
    if (c == 0) return zero(amb_);
    Poly r = *this;
    for (auto& [m, coef] : r.terms_) coef = fp_mul(coef, c, amb_.p);
    return r;
  }

  /// f * c*x^u, a single-term product (ordering is preserved).
  Poly mul_term(const Monomial& u, std::uint32_t c) const {
    c %= amb_.p;
    if (c == 0) return zero(amb_);
    Poly r = zero(amb_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, coef] : terms_)
      r.terms_.emplace_back(m * u, fp_mul(coef, c, amb_.p));
    return r;
  }

  /// f^n by binary exponentiation; f^0 = 1 for every f.
  Poly pow(std::uint64_t n) const {
    Poly result = constant(amb_, 1);
    Poly base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      if (n > 1) base = base * base;
      n >>= 1;
    }
    return result;
  }

  /// f^q for q a power of the characteristic: exponents scale by q and
  /// coefficients are fixed (c^q = c in Z/p). Exact Frobenius, no expansion.
  Poly frobenius(std::uint64_t q) const {
    if (!is_p_power(q, amb_.p))
      throw precondition_error("frobenius exponent must be a power of p");
    Poly r = zero(amb_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m.pow(q), c);
    // Scaling exponents by q preserves the canonical (lexicographic) order.
    return r;
  }

  /// Leading term with respect to a term order (largest monomial).
  const Term& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw precondition_error("leading term of zero");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
      if (order.greater(t.first, best->first)) best = &t;
    return *best;
  }

  /// Re-embed into a larger ambient ring (new variables get exponent 0).
  Poly extended(std::uint32_t new_nvars) const {
    Poly r = zero({amb_.p, new_nvars});
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_)
      r.terms_.emplace_back(m.extended(new_nvars), c);
    return r;
  }

  /// Drop trailing variables; every term must have exponent 0 there.
  Poly restricted(std::uint32_t new_nvars) const {
    Poly r = zero({amb_.p, new_nvars});
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      for (std::uint32_t i = new_nvars; i < amb_.nvars; ++i)
        if (m[i] != 0)
          throw precondition_error("restriction drops a used variable");
      r.terms_.emplace_back(m.restricted(new_nvars), c);
    }
    std::sort(r.terms_.begin(), r.terms_.end());
    return r;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  static Poly from_map(const Ambient& amb,
                       const std::map<Monomial, std::uint32_t>& acc) {
    Poly r = zero(amb);
    r.terms_.reserve(acc.size());
    for (const auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace_back(m, c);
    return r;
  }

  void check_same_ambient(const Poly& g) const {
    if (!(amb_ == g.amb_))
      throw ambient_error("polynomials from different ambient rings");
  }

  Ambient amb_;
  std::vector<Term> terms_;
};

inline Poly poly_add(const Poly& f, const Poly& g) { return f + g; }
inline Poly poly_mul(const Poly& f, const Poly& g) { return f * g; }
inline Poly poly_pow(const Poly& f, std::uint64_t n) { return f.pow(n); }

}  // namespace hk
