#pragma once

#include "deloop/module.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace deloop {

/// Coordinate ranges [begin, end) per degree of one direct summand of a complex.
struct SummandBlock {
  std::string label;
  std::map<int, std::pair<std::size_t, std::size_t>> ranges;
};

/// Bounded complex of projective modules; differentials[i] : terms[i] → terms[i + 1].
struct ProjComplex {
  AlgebraPtr algebra;
  std::map<int, Representation> terms;
  std::map<int, Matrix> differentials;
  std::vector<SummandBlock> summands;  ///< known direct-sum structure, may be empty

  /// Zero module for degrees without a term.
  Representation term(int degree) const;
  /// Zero matrix of the right shape for degrees without a differential.
  Matrix differential(int degree) const;
  /// Degrees with a nonzero term, ascending.
  std::vector<int> support() const;
};

/// Checks shapes, that every differential is a module map and that d ∘ d = 0. Throws UsageError.
ProjComplex make_complex(AlgebraPtr algebra, std::map<int, Representation> terms, std::map<int, Matrix> differentials,
                         std::vector<SummandBlock> summands = {});
/// Additionally checks that every term is projective. Throws UsageError.
void require_projective_terms(const ProjComplex& t, const IdempotentFrame& frame);

ProjComplex stalk_complex(const Representation& p, int degree = 0, std::string label = "stalk");
/// Direct sum; each argument becomes one summand block unless it already lists its own.
ProjComplex direct_sum(const std::vector<ProjComplex>& parts);
/// t[j]: degree i holds t^{i+j}; differentials keep their sign (see hom_homotopy).
ProjComplex shift(const ProjComplex& t, int j);

/// f^i : source^i → target^{i + shift}.
struct ChainMap {
  ProjComplex source;
  ProjComplex target;
  int shift = 0;
  std::map<int, Matrix> components;
};
bool is_chain_map(const ChainMap& f);
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Hom in the homotopy category, Hom(t1, t2[shift]), with unsigned differentials:
/// chain maps satisfy d2 f^i = f^{i+1} d1, homotopies give f^i = d2 h^i + h^{i+1} d1.
class HomotopyHom {
 public:
  HomotopyHom(const ProjComplex& t1, const ProjComplex& t2, int shift);

  std::size_t dim() const { return representatives_.size(); }
  std::size_t chain_map_dim() const { return cycles_dim_; }
  std::size_t null_homotopic_dim() const { return boundaries_dim_; }
  const std::vector<ChainMap>& basis() const { return representatives_; }
  /// Coordinates of a chain map t1 → t2[shift] in basis() modulo null-homotopic maps.
  Vector coordinates(const ChainMap& f) const;
  ChainMap from_coordinates(const Vector& c) const;

 private:
  Vector flatten_chain_map(const ChainMap& f) const;
  ChainMap unflatten_chain_map(const Vector& v) const;

  ProjComplex t1_, t2_;
  int shift_;
  std::vector<int> degrees_;                    // degrees i with a nonzero hom space t1^i → t2^{i+shift}
  std::vector<std::vector<ModuleMap>> homs_;    // per entry of degrees_
  std::vector<BasisCoordinates> hom_coords_;
  std::vector<std::size_t> offsets_;
  std::size_t unknowns_ = 0;
  std::size_t cycles_dim_ = 0, boundaries_dim_ = 0;
  std::vector<Vector> rep_vectors_;
  std::vector<ChainMap> representatives_;
  BasisCoordinates cycle_coords_;  // over representatives followed by a basis of the boundaries
};

HomotopyHom hom_homotopy(const ProjComplex& t1, const ProjComplex& t2, int shift);

struct EndoAlgebra {
  AlgebraPtr algebra;  ///< End(T)^op: product a·b is the composite b ∘ a
  IdempotentFrame frame;
  std::vector<ChainMap> basis;
};
/// End(T)^op with its basis of chain maps; the frame comes from the summand blocks when they are known.
EndoAlgebra endo_algebra(const ProjComplex& t, std::string name = "End(T)^op");

struct TiltingReport {
  std::size_t hom_minus_one = 0;
  std::size_t hom_plus_one = 0;
  bool higher_shifts_vanish = false;  ///< structural: support spans at most two degrees
  std::size_t summand_classes = 0;
  std::size_t simples = 0;
  std::vector<std::string> summands;
  bool self_orthogonal() const { return hom_minus_one == 0 && hom_plus_one == 0 && higher_shifts_vanish; }
  bool ok() const { return self_orthogonal() && summand_classes == simples; }
};
/// Throws UsageError unless t lives in at most two adjacent degrees.
TiltingReport is_tilting_two_term(const ProjComplex& t, const IdempotentFrame& frame);

struct FlipResult {
  ProjComplex complex;
  std::string recipe;
  std::size_t candidates_tried = 0;
  TiltingReport tilting;
};
/// Two-term tilting complex over a triangular algebra with a one-dimensional corner at `corner`
/// (found automatically when nullopt): T = P_s ⊕ (P_s^d → P_r) with the universal differential,
/// falling back to a deterministic search over small multiplicity patterns.
/// Throws UnsupportedError("unsupported shape") when the algebra is not of that form.
FlipResult ladkani_flip(const AlgebraPtr& c, const IdempotentFrame& frame, std::optional<std::size_t> corner = {});

struct InvariantRow {
  std::string name;
  std::string left;
  std::string right;
  bool match = false;
};
/// Necessary conditions for isomorphism only; never a proof of one.
struct InvariantComparison {
  std::vector<InvariantRow> rows;
  bool all_match() const;
};
InvariantComparison compare_invariants(const AlgebraPtr& a1, const AlgebraPtr& a2);

}  // namespace deloop
