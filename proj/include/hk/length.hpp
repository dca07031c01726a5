#pragma once

#include <cstdint>
#include <string>

#include "hk/error.hpp"

namespace hk {

/// A module length or vector-space dimension: a natural number or INFINITE.
class LengthValue {
 public:
  LengthValue(std::uint64_t v) : v_(v), finite_(true) {}  // NOLINT(implicit)

  static LengthValue infinite() {
    LengthValue l(0);
    l.finite_ = false;
    return l;
  }

  bool is_finite() const { return finite_; }

  std::uint64_t value() const {
    if (!finite_) throw precondition_error("length is infinite");
    return v_;
  }

  std::string str() const { return finite_ ? std::to_string(v_) : "INFINITE"; }

  friend bool operator==(const LengthValue&, const LengthValue&) = default;

 private:
  std::uint64_t v_;
  bool finite_;
};

}  // namespace hk
