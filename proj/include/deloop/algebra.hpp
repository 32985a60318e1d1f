#pragma once

#include "deloop/linalg.hpp"
#include "deloop/matrix.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace deloop {

class FinDimAlgebra;
using AlgebraPtr = std::shared_ptr<const FinDimAlgebra>;

/// Associative unital algebra over ℚ given by its structure constants:
/// product(i, j) holds the coordinates of b_i·b_j.
class FinDimAlgebra {
 public:
  FinDimAlgebra(std::string name, std::vector<std::string> basis_labels, Vector unit,
                std::vector<Vector> table);
  FinDimAlgebra(const FinDimAlgebra&) = delete;
  FinDimAlgebra& operator=(const FinDimAlgebra&) = delete;

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// Index of the basis element with this label; throws UsageError if absent.
  std::size_t index_of(const std::string& label) const;
  Vector element(const std::string& label) const { return unit_vector(dim(), index_of(label)); }
  Vector basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of v ↦ a·v.
  Matrix left_mult(const Vector& a) const;
  /// Matrix of v ↦ v·a.
  Matrix right_mult(const Vector& a) const;
  /// left_mult of every basis element: the left regular representation.
  const std::vector<Matrix>& regular_action() const;

  /// A small set of basis indices generating the algebra (with the unit).
  const std::vector<std::size_t>& generators() const;
  /// Reduced basis of the Jacobson radical (trace-form criterion, characteristic 0).
  const std::vector<Vector>& radical() const;

  /// Sizes of the diagonal/off-diagonal blocks when built by triangular_algebra, else empty.
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  void set_block_sizes(std::vector<std::size_t> sizes) { block_sizes_ = std::move(sizes); }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Vector unit_;
  std::vector<Vector> table_;
  std::vector<std::size_t> block_sizes_;

  mutable std::once_flag regular_once_, generators_once_, radical_once_;
  mutable std::vector<Matrix> regular_;
  mutable std::vector<std::size_t> generators_;
  mutable std::vector<Vector> radical_;
};

AlgebraPtr make_algebra(std::string name, std::vector<std::string> basis_labels, Vector unit,
                        std::vector<Vector> table);

/// Same dimension, unit and structure constants (names and labels ignored).
bool same_structure(const FinDimAlgebra& a, const FinDimAlgebra& b);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct AlgebraValidation {
  std::vector<std::array<std::size_t, 3>> associativity_failures;  ///< (i, j, k) with (b_i b_j) b_k ≠ b_i (b_j b_k)
  std::vector<std::size_t> unit_failures;                          ///< i with 1·b_i ≠ b_i or b_i·1 ≠ b_i
  bool ok() const { return associativity_failures.empty() && unit_failures.empty(); }
};
AlgebraValidation validate_algebra(const FinDimAlgebra& a);

/// A bimodule _L N _R. Right actions use the column convention v·b = right_action[b]·v,
/// so right_action is an anti-homomorphism: R(b_i b_j) = R(b_j)·R(b_i).
struct Bimodule {
  AlgebraPtr left;
  AlgebraPtr right;
  std::size_t dim = 0;
  std::vector<Matrix> left_action;
  std::vector<Matrix> right_action;
  std::vector<std::string> labels;  ///< optional basis names, used for triangular algebra labels
};

struct BimoduleValidation {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
BimoduleValidation validate_bimodule(const Bimodule& n);

/// D(N) = Hom_k(N, k) as an (R, L)-bimodule; the actions are transposes.
Bimodule dual_bimodule(const Bimodule& n);

struct IdempotentFrame {
  AlgebraPtr algebra;
  std::vector<Vector> idempotents;
  std::size_t size() const { return idempotents.size(); }
};

struct FrameValidation {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// Idempotent, pairwise orthogonal, summing to 1, each primitive (e·A·e local).
FrameValidation validate_frame(const IdempotentFrame& frame);

/// Complete orthogonal primitive idempotents of a basic split algebra, lifted from A/J.
/// Ordered by the position of their first nonzero coordinate.
/// Throws UnsupportedError("unsupported: non-split algebra") when A/J is not a product of copies of ℚ.
IdempotentFrame primitive_idempotents(const AlgebraPtr& a);

/// Frame (unit of the first diagonal block, unit of the last) of an algebra built by triangular_algebra.
IdempotentFrame triangular_frame(const AlgebraPtr& a);

AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr ground_field();
/// Product algebra with componentwise multiplication.
AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// dim J, dim J², …, ending with 0. Throws if the radical is not nilpotent.
std::vector<std::size_t> radical_power_dims(const FinDimAlgebra& a);
/// Reduced basis of the span of all products x·y with x ∈ first, y ∈ second.
std::vector<Vector> product_span(const FinDimAlgebra& a, const std::vector<Vector>& first,
                                 const std::vector<Vector>& second);
std::size_t center_dimension(const FinDimAlgebra& a);
bool is_commutative(const FinDimAlgebra& a);
bool is_local(const FinDimAlgebra& a);

/// A / I for a two-sided ideal I (given by a spanning set); basis labels are inherited.
struct QuotientAlgebra {
  AlgebraPtr algebra;
  QuotientSpace space;  ///< complement embeds A/I back into A; projection maps A onto A/I
};
QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const std::vector<Vector>& ideal);

/// e·A·e with unit e.
AlgebraPtr corner_algebra(const AlgebraPtr& a, const Vector& e);

/// Unital subalgebra of square matrices spanned by `basis` (must contain the identity in its span).
AlgebraPtr algebra_from_matrices(std::string name, std::vector<std::string> labels,
                                 const std::vector<Matrix>& basis);

enum class Orientation { upper, lower };

/// Triangular matrix algebra with diagonal blocks R and S and an (S, R)-bimodule N:
///   lower = [[R, 0], [N, S]] with basis order (R, N, S),
///   upper = [[S, N], [0, R]] with basis order (S, N, R).
/// Labels are prefixed with the block position ("11:", "21:", "22:" / "11:", "12:", "22:").
AlgebraPtr triangular_algebra(const AlgebraPtr& r, const AlgebraPtr& s, const Bimodule& n,
                              Orientation orientation, std::string name);

/// An explicit algebra isomorphism given by the images of basis vectors (columns of map).
struct AlgebraIso {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix map;
  std::size_t pairs_checked = 0;
  bool verified = false;
};

struct IsoCheck {
  bool ok = false;
  std::size_t pairs_checked = 0;
  std::string failure;
};
/// Checks bijectivity, φ(1) = 1 and φ(b_i b_j) = φ(b_i) φ(b_j) on all basis pairs.
IsoCheck verify_explicit_iso(const FinDimAlgebra& source, const FinDimAlgebra& target, const Matrix& map);

/// [[S, N], [0, R]] ≅ [[R, 0], [N, S]] by exchanging the two diagonal corners.
AlgebraIso swap_iso(const AlgebraPtr& r, const AlgebraPtr& s, const Bimodule& n,
                    std::string upper_name = "upper", std::string lower_name = "lower");

/// Entry (i, j) = dim e_i·A·e_j.
std::vector<std::vector<std::size_t>> block_dims(const IdempotentFrame& frame);

}  // namespace deloop
