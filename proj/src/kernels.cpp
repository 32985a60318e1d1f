#include "deloop/kernels.hpp"

#include "deloop/errors.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace deloop::kernels {

namespace {

void check_product_shape(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw UsageError("matrix product shape mismatch: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

// out.row(i) = a.row(i) * b, skipping zeros on both sides.
void multiply_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i, mpq_class& tmp) {
  auto arow = a.row_span(i);
  auto orow = out.row_span(i);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const auto& x = arow[k];
    if (x.is_zero()) continue;
    auto brow = b.row_span(k);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (brow[j].is_zero()) continue;
      mpq_mul(tmp.get_mpq_t(), x.raw().get_mpq_t(), brow[j].raw().get_mpq_t());
      orow[j].raw() += tmp;
    }
  }
}

// Normalises the pivot row and returns the columns where it is nonzero.
std::vector<std::size_t> prepare_pivot_row(Matrix& m, std::size_t r, std::size_t c) {
  auto row = m.row_span(r);
  const Scalar inv = row[c].inverse();
  std::vector<std::size_t> nz;
  for (std::size_t j = c; j < m.cols(); ++j) {
    if (row[j].is_zero()) continue;
    row[j] *= inv;
    nz.push_back(j);
  }
  return nz;
}

void eliminate_row(Matrix& m, std::size_t i, std::size_t r, std::size_t c,
                   const std::vector<std::size_t>& nz, mpq_class& tmp) {
  auto row = m.row_span(i);
  if (row[c].is_zero()) return;
  const mpq_class factor = row[c].raw();
  auto prow = m.row_span(r);
  for (std::size_t j : nz) {
    mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), prow[j].raw().get_mpq_t());
    row[j].raw() -= tmp;
  }
}

std::size_t find_pivot(const Matrix& m, std::size_t from, std::size_t c) {
  for (std::size_t p = from; p < m.rows(); ++p)
    if (!m(p, c).is_zero()) return p;
  return m.rows();
}

void fill_intertwining_block(const Matrix& ax, const Matrix& ay, Matrix& sys, std::size_t g) {
  const std::size_t nx = ax.rows();
  const std::size_t ny = ay.rows();
  const std::size_t base = g * ny * nx;
  for (std::size_t r = 0; r < ny; ++r) {
    for (std::size_t c = 0; c < nx; ++c) {
      const std::size_t eq = base + r * nx + c;
      // (X·Ax)[r][c] = sum_k X[r][k] Ax[k][c]
      for (std::size_t k = 0; k < nx; ++k)
        if (!ax(k, c).is_zero()) sys(eq, r * nx + k) += ax(k, c);
      // (Ay·X)[r][c] = sum_k Ay[r][k] X[k][c]
      for (std::size_t k = 0; k < ny; ++k)
        if (!ay(r, k).is_zero()) sys(eq, k * nx + c) -= ay(r, k);
    }
  }
}

void check_actions(const std::vector<Matrix>& sx, const std::vector<Matrix>& sy) {
  if (sx.size() != sy.size()) throw UsageError("intertwining system: action count mismatch");
  for (std::size_t g = 1; g < sx.size(); ++g) {
    if (sx[g].rows() != sx[0].rows() || sy[g].rows() != sy[0].rows())
      throw UsageError("intertwining system: inconsistent action sizes");
  }
}

std::size_t work_of(const Matrix& m) { return m.rows() * m.cols(); }

}  // namespace

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product_shape(a, b);
  Matrix out(a.rows(), b.cols());
  mpq_class tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, out, i, tmp);
  return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpq_class tmp;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = find_pivot(m, r, c);
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const auto nz = prepare_pivot_row(m, r, c);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r) eliminate_row(m, i, r, c, nz, tmp);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix intertwining_system(const std::vector<Matrix>& sx, const std::vector<Matrix>& sy) {
  check_actions(sx, sy);
  if (sx.empty()) return Matrix();
  const std::size_t nx = sx[0].rows(), ny = sy[0].rows();
  Matrix sys(sx.size() * nx * ny, nx * ny);
  for (std::size_t g = 0; g < sx.size(); ++g) fill_intertwining_block(sx[g], sy[g], sys, g);
  return sys;
}

}  // namespace serial

namespace parallel {

Matrix multiply(const Matrix& a, const Matrix& b) {
  check_product_shape(a, b);
  Matrix out(a.rows(), b.cols());
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel
  {
    mpq_class tmp;
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i), tmp);
  }
  return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const auto rows = static_cast<long>(m.rows());
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t p = find_pivot(m, r, c);
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    const auto nz = prepare_pivot_row(m, r, c);
#pragma omp parallel
    {
      mpq_class tmp;
#pragma omp for schedule(dynamic, 16)
      for (long i = 0; i < rows; ++i) {
        if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c, nz, tmp);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Matrix intertwining_system(const std::vector<Matrix>& sx, const std::vector<Matrix>& sy) {
  check_actions(sx, sy);
  if (sx.empty()) return Matrix();
  const std::size_t nx = sx[0].rows(), ny = sy[0].rows();
  Matrix sys(sx.size() * nx * ny, nx * ny);
  const auto blocks = static_cast<long>(sx.size());
#pragma omp parallel for schedule(static)
  for (long g = 0; g < blocks; ++g)
    fill_intertwining_block(sx[static_cast<std::size_t>(g)], sy[static_cast<std::size_t>(g)], sys,
                            static_cast<std::size_t>(g));
  return sys;
}

}  // namespace parallel

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.rows() * a.cols() * b.cols() >= kParallelThreshold) return parallel::multiply(a, b);
  return serial::multiply(a, b);
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  if (work_of(m) * std::min(m.rows(), m.cols()) >= kParallelThreshold) return parallel::rref_in_place(m);
  return serial::rref_in_place(m);
}

Matrix intertwining_system(const std::vector<Matrix>& sx, const std::vector<Matrix>& sy) {
  if (!sx.empty() && sx.size() * work_of(sx[0]) * work_of(sy[0]) >= kParallelThreshold)
    return parallel::intertwining_system(sx, sy);
  return serial::intertwining_system(sx, sy);
}

}  // namespace deloop::kernels
