#pragma once

#include "deloop/algebra.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace deloop {

/// A finite-dimensional left module: one action matrix per algebra basis element.
/// Copies share the action storage.
class Representation {
 public:
  Representation() = default;
  /// Checks shapes only; use validate_representation for the module axioms.
  Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  const Matrix& action(std::size_t i) const { return (*action_)[i]; }
  const std::vector<Matrix>& actions() const { return *action_; }
  /// Action matrix of an arbitrary algebra element.
  Matrix act(const Vector& a) const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Matrix>> action_ = std::make_shared<const std::vector<Matrix>>();
};

struct RepresentationValidation {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
RepresentationValidation validate_representation(const Representation& m);

struct ModuleMap {
  Representation source;
  Representation target;
  Matrix matrix;  ///< target.dim() × source.dim()
};

/// matrix·action_source(b) = action_target(b)·matrix for every basis element b.
bool is_module_map(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  ///< g ∘ f
ModuleMap identity_map(const Representation& m);

Representation zero_module(const AlgebraPtr& a);
Representation regular_module(const AlgebraPtr& a);
/// Left module underlying a bimodule (forgetting the right action).
Representation left_module(const Bimodule& n);
/// M(α) over Λ on v, v′, v″; throws UsageError when the algebra is not a Λ.
Representation make_M_alpha(const AlgebraPtr& lambda, const Scalar& alpha);

Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts);
/// The module transported along the basis change q (new basis = columns of q).
Representation change_basis(const Representation& m, const Matrix& q);

/// P_i = A·e_i with its basis written as algebra elements.
struct Projective {
  std::size_t vertex = 0;
  Representation module;
  Matrix elements;  ///< dim A × dim P_i, column k is the algebra element of basis vector k
  Vector generator; ///< coordinates of e_i in P_i
};
std::vector<Projective> projective_modules(const IdempotentFrame& frame);
/// P_1, …, P_r as representations.
std::vector<Representation> regular_and_projectives(const IdempotentFrame& frame);
/// S_i = top(P_i).
std::vector<Representation> simple_modules(const IdempotentFrame& frame);

/// Submodule generated by some vectors together with the quotient.
struct SubQuotient {
  Representation sub;
  ModuleMap inclusion;
  Representation quot;
  ModuleMap projection;
};
SubQuotient submodule_and_quotient(const Representation& m, const std::vector<Vector>& generators);
SubQuotient radical_of_module(const Representation& m);
Representation kernel_module(const ModuleMap& f, ModuleMap* inclusion = nullptr);
Representation cokernel_module(const ModuleMap& f, ModuleMap* projection = nullptr);

/// Intertwining maps, one per free column of the linear system (generator equations only).
std::vector<ModuleMap> hom_basis(const Representation& x, const Representation& y);
/// Same basis, solved through a projective presentation of x.
std::vector<ModuleMap> hom_basis(const Representation& x, const Representation& y, const IdempotentFrame& frame);

/// Minimal projective cover P = ⊕ P_{vertex[s]} ↠ M; generator s of P maps to tops[s] ∈ e_{vertex[s]}·M.
struct ProjectiveCover {
  ModuleMap map;
  std::vector<std::size_t> vertices;
  std::vector<Vector> tops;
  Matrix elements;  ///< dim A × dim P, the algebra element behind each basis vector of P
};
ProjectiveCover projective_cover_data(const Representation& m, const IdempotentFrame& frame);
ModuleMap projective_cover(const Representation& m, const IdempotentFrame& frame);
/// Ω^n(m) computed from minimal covers.
Representation syzygy(const Representation& m, std::size_t n, const IdempotentFrame& frame);
bool is_projective(const Representation& m, const IdempotentFrame& frame);

/// D(m) over the opposite algebra; the frame moves along unchanged.
Representation dual_module(const Representation& m, const AlgebraPtr& opposite_algebra);
Representation dual_module(const Representation& m);
IdempotentFrame opposite_frame(const IdempotentFrame& frame, const AlgebraPtr& opposite_algebra);
/// m ↪ D(P(D m)).
ModuleMap injective_envelope(const Representation& m, const IdempotentFrame& frame);

/// dim End(m)/rad End(m), via the trace form on m.
std::size_t endomorphism_top_dim(const Representation& m, const IdempotentFrame& frame);
bool is_indecomposable(const Representation& m, const IdempotentFrame& frame);

struct Decomposition {
  std::vector<Representation> summands;
  std::vector<Matrix> inclusions;  ///< m.dim() × summand dim, jointly a basis of m
  std::vector<std::size_t> iso_class;  ///< summands with equal class are isomorphic
  std::size_t class_count() const;
  std::vector<std::size_t> multiplicities() const;
};
/// Krull–Schmidt decomposition by Fitting splitting along endomorphisms with rational eigenvalues.
/// Throws UnsupportedError("unsupported: non-split End") when no splitting endomorphism is found.
Decomposition decompose(const Representation& m, const IdempotentFrame& frame);

/// An isomorphism u → v between indecomposables, if one exists.
std::optional<ModuleMap> indecomposable_iso(const Representation& u, const Representation& v,
                                            const IdempotentFrame& frame);
std::optional<ModuleMap> is_isomorphic(const Representation& u, const Representation& v,
                                       const IdempotentFrame& frame);
std::optional<ModuleMap> match_decompositions(const Decomposition& du, const Representation& u,
                                              const Decomposition& dv, const Representation& v,
                                              const IdempotentFrame& frame);

/// A split pair for summand `summand` of x: retraction ∘ section = id.
struct SplitPair {
  std::size_t summand = 0;
  ModuleMap section;     ///< x_s → y
  ModuleMap retraction;  ///< y → x_s
};

struct StableSummand {
  bool holds = false;
  Decomposition x_parts;
  /// One pair per non-projective summand of x; jointly retraction_s ∘ section_t = δ_st.
  std::vector<SplitPair> pairs;
};
/// Is x a direct summand of y ⊕ P for some projective P? Non-projective summands of x are split off y
/// one at a time by a pair of basis homs whose composite is invertible; y is never decomposed.
StableSummand stable_summand(const Representation& x, const Representation& y, const IdempotentFrame& frame);
StableSummand stable_summand(const Decomposition& dx, const Representation& y, const IdempotentFrame& frame);

/// f: x → y and g: y → x with g ∘ f = id_x, for indecomposable x, if x is a summand of y.
std::optional<std::pair<ModuleMap, ModuleMap>> split_summand(const Representation& x, const Representation& y,
                                                             const IdempotentFrame& frame);

struct Torsionless {
  bool holds = false;
  /// When holds: injective m → ⊕ P_{vertices[j]}.
  std::optional<ModuleMap> embedding;
  std::vector<std::size_t> vertices;
  std::size_t kernel_dim = 0;  ///< dim of ∩ ker f over all f: m → A
};
Torsionless torsionless(const Representation& m, const IdempotentFrame& frame);

}  // namespace deloop
