#pragma once

#include "deloop/matrix.hpp"

#include <cstddef>
#include <vector>

// Dense exact kernels. Every kernel exists twice: a serial reference and an
// OpenMP version that must produce bit-identical results. Callers go through
// the dispatching functions at the bottom, which pick the parallel path above
// a work threshold.
namespace deloop::kernels {

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
/// Gauss-Jordan to reduced row echelon form in place; first-nonzero pivoting.
std::vector<std::size_t> rref_in_place(Matrix& m);
/// Rows of the intertwining system X·A_x(g) = A_y(g)·X, one block per action pair.
Matrix intertwining_system(const std::vector<Matrix>& source_actions,
                           const std::vector<Matrix>& target_actions);
}  // namespace serial

namespace parallel {
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<std::size_t> rref_in_place(Matrix& m);
Matrix intertwining_system(const std::vector<Matrix>& source_actions,
                           const std::vector<Matrix>& target_actions);
}  // namespace parallel

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<std::size_t> rref_in_place(Matrix& m);
Matrix intertwining_system(const std::vector<Matrix>& source_actions,
                           const std::vector<Matrix>& target_actions);

/// Work (multiply-adds) above which the dispatchers use the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

}  // namespace deloop::kernels
