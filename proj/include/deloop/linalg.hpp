#pragma once

#include "deloop/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace deloop {

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row echelon form with its pivot columns.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with a·x = b, or nullopt when inconsistent. Throws UsageError when a.rows() != b.rows().
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Basis of {x : a·x = 0}: one vector per free column, 1 there and 0 on the other free columns.
std::vector<Vector> kernel_basis(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Canonical basis of span(vectors) in the free-variable convention that
/// kernel_basis produces: the basis is the unique one that restricts to the
/// identity on the lexicographically last independent coordinate set.
std::vector<Vector> canonical_span_basis(const std::vector<Vector>& vectors, std::size_t ambient);

/// Incrementally maintained, fully reduced row basis of a subspace of k^n.
/// Coordinates of a member v are read off at the pivots.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Adds v to the span; returns false if it was already there.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  /// Remainder of v after reduction against the basis (zero iff v is in the span).
  Vector reduce(Vector v) const;
  /// Coordinates of a member of the span in basis() order.
  Vector coordinates(const Vector& v) const;

  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis vectors as the columns of an ambient × dim matrix.
  Matrix as_columns() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced basis of the column space of m.
EchelonBasis column_space(const Matrix& m);

/// A splitting k^n = W ⊕ C with the projection onto k^n / W in coordinates.
struct QuotientSpace {
  Matrix complement;  ///< n × c, standard basis vectors off the pivots of W
  Matrix projection;  ///< c × n, kernel exactly W, projection·complement = I
};
QuotientSpace quotient_space(const EchelonBasis& sub);

}  // namespace deloop

namespace deloop {

/// Coordinates with respect to a fixed (not necessarily reduced) basis of a subspace.
class BasisCoordinates {
 public:
  BasisCoordinates() = default;
  /// Throws UsageError if the vectors are dependent.
  BasisCoordinates(std::vector<Vector> basis, std::size_t ambient);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vector>& basis() const { return basis_; }

  /// Coordinates of v, assuming v lies in the span.
  Vector operator()(const Vector& v) const;
  /// Coordinates of v, or nullopt when v is outside the span.
  std::optional<Vector> try_coordinates(const Vector& v) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> rows_;  // coordinate rows where the basis is invertible
  Matrix inverse_;                  // inverse of the basis restricted to rows_
};

}  // namespace deloop
