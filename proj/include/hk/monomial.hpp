#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hk/error.hpp"

namespace hk {

/// A monomial x^alpha in a fixed ambient polynomial ring, stored as one
/// exponent per variable. Comparison is plain lexicographic on the exponent
/// vector; that is the engine-wide canonical tie-breaker, independent of any
/// term order a computation happens to use.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial one(std::uint32_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }

  static Monomial var(std::uint32_t nvars, std::uint32_t idx,
                      std::uint32_t power = 1) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(idx) = power;
    return Monomial(std::move(e));
  }

  std::uint32_t nvars() const { return static_cast<std::uint32_t>(e_.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  std::uint64_t total_degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](auto v) { return v == 0; });
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    return r;
  }

  /// this / m; caller guarantees m.divides(*this).
  Monomial divide_by(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
    return r;
  }

  Monomial lcm_with(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
      r.e_[i] = std::max(r.e_[i], m.e_[i]);
    return r;
  }

  bool coprime_with(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != 0 && m.e_[i] != 0) return false;
    return true;
  }

  /// x^alpha -> x^(k*alpha); the monomial part of a Frobenius power.
  Monomial pow(std::uint64_t k) const {
    Monomial r = *this;
    for (auto& v : r.e_) {
      std::uint64_t scaled = static_cast<std::uint64_t>(v) * k;
      if (scaled > 0xffffffffull)
        throw precondition_error("monomial exponent overflow");
      v = static_cast<std::uint32_t>(scaled);
    }
    return r;
  }

  /// True iff the only variable with nonzero exponent is `idx`.
  bool is_pure_power_of(std::uint32_t idx) const {
    if (e_[idx] == 0) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (i != idx && e_[i] != 0) return false;
    return true;
  }

  /// Append extra zero-exponent variables (ambient extension).
  Monomial extended(std::uint32_t new_nvars) const {
    Monomial r = *this;
    r.e_.resize(new_nvars, 0);
    return r;
  }

  /// Drop trailing variables (ambient restriction); they must have exponent 0.
  Monomial restricted(std::uint32_t new_nvars) const {
    Monomial r = *this;
    r.e_.resize(new_nvars);
    return r;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

}  // namespace hk
