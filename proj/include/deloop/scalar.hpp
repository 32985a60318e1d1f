#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace deloop {

/// Exact rational number in canonical form (positive denominator, reduced).
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by intent
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value);

  /// Parses "p" or "p/q"; rejects every non-canonical spelling ("2/4", "1/-2", "+1", "-0", "3/1").
  static Scalar parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  Scalar inverse() const;
  Scalar abs() const;

  const mpq_class& raw() const { return value_; }
  mpq_class& raw() { return value_; }

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  mpq_class value_;
};

}  // namespace deloop
