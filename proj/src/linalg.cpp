#include "deloop/linalg.hpp"

#include "deloop/errors.hpp"
#include "deloop/kernels.hpp"

#include <algorithm>

namespace deloop {

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  out.pivots = kernels::rref_in_place(out.reduced);
  return out;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return kernels::rref_in_place(copy).size();
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw UsageError("solve_linear: a has " + std::to_string(a.rows()) + " rows but b has " +
                     std::to_string(b.rows()));
  }
  const std::size_t n = a.cols();
  Matrix aug = Matrix::hstack({a, b}, a.rows());
  const auto pivots = kernels::rref_in_place(aug);
  Matrix x(n, b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] >= n) return std::nullopt;  // pivot in the b-block: inconsistent
    for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[k], c) = aug(k, n + c);
  }
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(unit_vector(n, i));
    return all;
  }
  auto [red, pivots] = rref(a);
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix();
  Matrix aug = Matrix::hstack({m, Matrix::identity(n)}, n);
  const auto pivots = kernels::rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::vector<Vector> canonical_span_basis(const std::vector<Vector>& vectors, std::size_t ambient) {
  if (vectors.empty()) return {};
  // Reverse the coordinates, take the RREF, reverse back: pivots land on the
  // rightmost independent coordinates, which are the free columns of any
  // constraint system whose kernel is this span.
  Matrix m(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) throw UsageError("canonical_span_basis: length mismatch");
    for (std::size_t c = 0; c < ambient; ++c) m(r, ambient - 1 - c) = vectors[r][c];
  }
  const auto pivots = kernels::rref_in_place(m);
  std::vector<Vector> out;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    Vector v(ambient);
    for (std::size_t c = 0; c < ambient; ++c) v[c] = m(k, ambient - 1 - c);
    out.push_back(std::move(v));
  }
  return out;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ambient_) throw UsageError("EchelonBasis: vector length mismatch");
  mpq_class tmp;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    const mpq_class factor = v[p].raw();
    const auto& row = rows_[k];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (row[j].is_zero()) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), row[j].raw().get_mpq_t());
      v[j].raw() -= tmp;
    }
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
  Vector rem = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && rem[p].is_zero()) ++p;
  if (p == ambient_) return false;
  const Scalar inv = rem[p].inverse();
  for (std::size_t j = p; j < ambient_; ++j)
    if (!rem[j].is_zero()) rem[j] *= inv;
  // keep existing rows reduced at the new pivot
  mpq_class tmp;
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const mpq_class factor = row[p].raw();
    for (std::size_t j = p; j < ambient_; ++j) {
      if (rem[j].is_zero()) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), rem[j].raw().get_mpq_t());
      row[j].raw() -= tmp;
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(rem));
  return true;
}

Vector EchelonBasis::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw UsageError("EchelonBasis: vector length mismatch");
  Vector c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Matrix EchelonBasis::as_columns() const { return Matrix::from_columns(ambient_, rows_); }

EchelonBasis column_space(const Matrix& m) {
  Matrix t = m.transpose();
  const auto pivots = kernels::rref_in_place(t);
  EchelonBasis out(m.rows());
  for (std::size_t k = 0; k < pivots.size(); ++k) out.insert(t.row(k));
  return out;
}

QuotientSpace quotient_space(const EchelonBasis& sub) {
  const std::size_t n = sub.ambient();
  std::vector<char> is_pivot(n, 0);
  for (auto p : sub.pivots()) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) free.push_back(i);
  QuotientSpace q{Matrix(n, free.size()), Matrix(free.size(), n)};
  for (std::size_t k = 0; k < free.size(); ++k) q.complement(free[k], k) = 1;
  // v = Σ_k v[p_k] w_k + Σ (remainder on free coords); remainder = v - W·coords(v restricted)
  // projection(v)[k] = v[free_k] - Σ_j v[p_j] w_j[free_k]
  for (std::size_t k = 0; k < free.size(); ++k) {
    q.projection(k, free[k]) = 1;
    for (std::size_t j = 0; j < sub.dim(); ++j) {
      const auto& w = sub.basis()[j][free[k]];
      if (!w.is_zero()) q.projection(k, sub.pivots()[j]) = -w;
    }
  }
  return q;
}

}  // namespace deloop

namespace deloop {

BasisCoordinates::BasisCoordinates(std::vector<Vector> basis, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(basis)) {
  if (basis_.empty()) return;
  Matrix cols = Matrix::from_columns(ambient_, basis_);
  // Independent rows of the column matrix give an invertible square restriction.
  Matrix t = cols.transpose();
  auto pivots = kernels::rref_in_place(t);
  if (pivots.size() != basis_.size()) throw UsageError("BasisCoordinates: basis vectors are dependent");
  rows_ = pivots;
  auto inv = inverse(cols.select_rows(rows_));
  inverse_ = std::move(*inv);
}

Vector BasisCoordinates::operator()(const Vector& v) const {
  if (v.size() != ambient_) throw UsageError("BasisCoordinates: vector length mismatch");
  Vector restricted(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) restricted[k] = v[rows_[k]];
  return inverse_ * restricted;
}

std::optional<Vector> BasisCoordinates::try_coordinates(const Vector& v) const {
  Vector c = (*this)(v);
  Vector back(ambient_);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (c[k].is_zero()) continue;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!basis_[k][i].is_zero()) back[i] += c[k] * basis_[k][i];
  }
  if (back != v) return std::nullopt;
  return c;
}

}  // namespace deloop
