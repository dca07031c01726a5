#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hk/groebner.hpp"
#include "hk/poly.hpp"

namespace hk {

/// Presentation of a local ring R = k[x_1..x_n]_(x)/J over k = Z/p.
/// The defining generators must lie in the maximal ideal (zero constant
/// term), so the origin is a point of Spec and the presented ring is local
/// there. A grevlex Groebner basis of J and the Krull dimension are computed
/// once at construction; instances are immutable.
class RingPresentation {
 public:
  RingPresentation(PrimeChar characteristic, std::vector<std::string> vars,
                   std::vector<Poly> jgens);

  std::uint32_t p() const { return char_.p; }
  const PrimeChar& characteristic() const { return char_; }
  const std::vector<std::string>& var_names() const { return vars_; }
  std::uint32_t nvars() const { return static_cast<std::uint32_t>(vars_.size()); }
  const std::vector<Poly>& jgens() const { return jgens_; }
  Ambient ambient() const { return {char_.p, nvars()}; }

  /// Reduced grevlex basis of J (empty basis when J = 0).
  const GroebnerBasis& j_groebner() const { return jgb_; }

  /// Canonical representative of f in R: normal form modulo J.
  Poly reduce(const Poly& f) const { return normal_form(f, jgb_); }

  /// Generators of the maximal ideal: the variables.
  std::vector<Poly> var_polys() const;

  /// Krull dimension of R (from the initial ideal of J).
  std::uint32_t dimension() const { return dim_; }

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.char_ == b.char_ && a.vars_ == b.vars_ && a.jgens_ == b.jgens_;
  }

 private:
  PrimeChar char_;
  std::vector<std::string> vars_;
  std::vector<Poly> jgens_;
  GroebnerBasis jgb_;
  std::uint32_t dim_;
};

}  // namespace hk
