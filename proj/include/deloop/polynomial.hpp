#pragma once

#include "deloop/matrix.hpp"

#include <vector>

namespace deloop {

/// Univariate polynomial over ℚ, coefficients lowest degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& leading() const { return coeffs_.back(); }

  Scalar operator()(const Scalar& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Remainder of a divided by b.
  static Polynomial remainder(Polynomial a, const Polynomial& b);
  static Polynomial quotient(Polynomial a, const Polynomial& b);
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// det(tI − m), monic of degree m.rows().
Polynomial characteristic_polynomial(const Matrix& m);

/// All distinct rational roots in increasing order (exact: Sturm isolation plus an exact check).
std::vector<Scalar> rational_roots(const Polynomial& p);

/// Number of distinct complex roots.
int distinct_root_count(const Polynomial& p);

}  // namespace deloop
