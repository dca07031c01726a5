#pragma once

#include <cstdint>
#include <string>

#include "hk/error.hpp"

namespace hk {

/// Exact signed rational with 128-bit internals; enough headroom for
/// f_e = length / q^d at desk scale. Always stored reduced with den > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(__int128 num, __int128 den);
  Rational(std::int64_t n) : Rational(n, 1) {}  // NOLINT(implicit)

  static Rational of(std::uint64_t num, std::uint64_t den) {
    return Rational(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Rational&, const Rational&) = default;

  /// "num/den", or just "num" when den = 1.
  std::string str() const;

  /// Always "num/den", even for integers.
  std::string fraction_str() const;

 private:
  __int128 num_;
  __int128 den_;
};

}  // namespace hk
