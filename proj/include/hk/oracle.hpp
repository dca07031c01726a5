#pragma once

#include <cstdint>
#include <vector>

#include "hk/rab.hpp"

namespace hk {

/// An explicit finite-dimensional realization of R(I)_{a,b} over Z/p for an
/// Artinian base ring: a monomial basis of R, an echelon basis of I as a
/// subspace of R, and the full multiplication table of the combined basis of
/// R (+) I. Used only as an independent measurement device — the Frobenius
/// powers it consumes are computed by plain repeated squaring, never by the
/// closed power formula.
class FiniteModel {
 public:
  /// Requires J zero-dimensional with origin-only support; throws otherwise.
  static FiniteModel build(const RabSpec& spec);

  std::uint32_t dim_r() const { return static_cast<std::uint32_t>(basis_r_.size()); }
  std::uint32_t dim_i() const { return static_cast<std::uint32_t>(basis_i_.size()); }
  std::uint32_t dim() const { return dim_r() + dim_i(); }

  const std::vector<Monomial>& basis_r() const { return basis_r_; }

  /// Rows over basis_r coordinates spanning I inside R.
  const std::vector<std::vector<std::uint32_t>>& basis_i() const {
    return basis_i_;
  }

  /// Coordinates of an element over the combined basis (R part then I part).
  std::vector<std::uint32_t> coords_of(const RabElement& x) const;

  /// Product of two coordinate vectors through the structure constants.
  std::vector<std::uint32_t> mul_coords(
      const std::vector<std::uint32_t>& x,
      const std::vector<std::uint32_t>& y) const;

  /// The basis element at combined index k, as a ring element.
  RabElement basis_element(std::uint32_t k) const;

  const RabSpec& spec() const { return spec_; }

 private:
  explicit FiniteModel(RabSpec spec);

  RabSpec spec_;
  std::vector<Monomial> basis_r_;
  std::vector<std::vector<std::uint32_t>> basis_i_;
  // table_[a][b] = coordinates of (basis a) * (basis b)
  std::vector<std::vector<std::vector<std::uint32_t>>> table_;
};

/// l(R(I)_{a,b} / n^[q]) measured directly: n^[q] is the span of the
/// products of its generator q-th powers (by rab_pow_iter) with the model
/// basis; the length is dim(model) - rank of that span.
LengthValue oracle_hk_rab(const FiniteModel& model, const RabSpec& spec,
                          std::uint64_t q);

/// Rank of a list of dense vectors over Z/p (Gaussian elimination).
std::uint32_t gf_rank(std::vector<std::vector<std::uint32_t>> rows,
                      std::uint32_t p);

}  // namespace hk
