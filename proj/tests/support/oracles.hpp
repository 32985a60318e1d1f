#pragma once

#include "deloop/algebra.hpp"
#include "deloop/module.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace deloop::testing {

using Rng = std::mt19937_64;

/// Coordinates in (1, x, y, z, yx, zx) of a word in x, y, z, reduced with the defining relations
/// x², y², z², yz, xy + q·yx, xz − zx, zy − zx by string rewriting.
Vector lambda_rewrite(const Scalar& q, const std::string& word);
/// Word spelling of the basis element with the given index ("" for 1).
std::string lambda_word(std::size_t i);

/// A split basic algebra realised as block upper-triangular matrices, with the data used to build it.
struct RandomAlgebra {
  AlgebraPtr algebra;
  std::size_t vertices = 0;
  std::vector<std::size_t> vertex_of_position;
  /// dim E_v·A·E_w counted in the matrix realisation.
  std::vector<std::vector<std::size_t>> corner_dims;
  Representation natural;
};

/// dim A ≤ max_dim. With mix_basis the algebra basis is a random invertible recombination of the closure
/// basis; without it the basis is the closure basis itself and arrow entries are ±1.
RandomAlgebra random_basic_algebra(Rng& rng, std::size_t max_dim = 8, bool mix_basis = true);

Scalar random_scalar(Rng& rng, int lo, int hi);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3);
Matrix random_invertible(Rng& rng, std::size_t n);

/// Simples, projectives, the natural module and sub/quotients of these, all with dim ≤ max_dim.
Representation random_module(Rng& rng, const RandomAlgebra& ra, const IdempotentFrame& frame, std::size_t max_dim);

/// M embeds in a free module iff the homs M → A jointly have zero kernel.
/// Natural module, its sub/quotients generated by unit vectors, simples and sums of these, all in
/// vertex-adapted coordinates of an unmixed algebra.
Representation adapted_module(Rng& rng, const RandomAlgebra& ra, const IdempotentFrame& frame, std::size_t max_dim);

bool torsionless_oracle(const Representation& m);
/// Σ_i (top multiplicity of S_i in M) · dim P_i, with the top read off e_i·M / e_i·J·M.
std::size_t cover_dim_oracle(const Representation& m, const IdempotentFrame& frame);
/// Span of J·M inside M.
std::vector<Vector> radical_span_oracle(const Representation& m);

/// Number of summands found by refining 1 with idempotents of End(m) whose coordinates in the row-reduced
/// basis of End lie in {0, ±1, ±2, ±1/2}. Returns nullopt when dim End exceeds max_end_dim.
std::optional<std::size_t> brute_force_summand_count(const Representation& m, std::size_t max_end_dim = 5);

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t ambient);

}  // namespace deloop::testing
