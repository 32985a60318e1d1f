#pragma once

#include "deloop/module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace deloop {

struct NamedModule {
  std::string name;
  Representation module;
};
using ModulePool = std::vector<NamedModule>;

enum class LevelStatus { certified_yes, certified_no, inconclusive };
std::string to_string(LevelStatus s);

struct LevelResult {
  std::size_t level = 0;
  LevelStatus status = LevelStatus::inconclusive;
  std::string reason;
  std::optional<NamedModule> witness;  ///< N with Ω^level(M) a stable summand of Ω^{level+1}(N)
};

/// Bracket lower_bound ≤ del(M) ≤ upper_bound, with per-level evidence.
struct DelReport {
  std::string module_name;
  std::vector<LevelResult> levels;
  std::size_t lower_bound = 0;
  std::optional<std::size_t> upper_bound;
  bool exact() const { return upper_bound && *upper_bound == lower_bound; }
};

/// Simples, P_i, rad P_i and injective envelopes of the simples.
ModulePool default_test_pool(const IdempotentFrame& frame);
/// Pool modules (and their syzygies) above this dimension are skipped.
inline constexpr std::size_t kDefaultMaxPoolDim = 64;

/// Cosyzygies Σ^j Ω^n M for n ≤ n_max, 1 ≤ j ≤ n + 1, up to dimension max_dim.
ModulePool cosyzygy_pool(const Representation& m, std::size_t n_max, const IdempotentFrame& frame,
                         std::size_t max_dim = kDefaultMaxPoolDim);

/// Σ(M) = coker(M ↪ I(M)).
Representation cosyzygy(const Representation& m, const IdempotentFrame& frame);

/// Level 0 is decided exactly (torsionlessness); level n ≥ 1 is certified-yes by a pool witness,
/// certified-no when Ω^n M is not torsionless, inconclusive otherwise.
/// The pool extends default_test_pool and the cosyzygies of M. Levels stop at the first certified-yes.
DelReport del_bounded(const Representation& m, std::size_t n_max, const IdempotentFrame& frame,
                      const ModulePool& pool = {}, std::string name = "M",
                      std::size_t max_pool_dim = kDefaultMaxPoolDim);

struct DelAlgebraReport {
  std::vector<DelReport> simples;
  std::size_t lower_bound = 0;
  std::optional<std::size_t> upper_bound;
  bool exact() const { return upper_bound && *upper_bound == lower_bound; }
};
/// del over all simples; the algebra bracket is the componentwise supremum.
DelAlgebraReport del_algebra(std::size_t n_max, const IdempotentFrame& frame, const ModulePool& extra_pool = {},
                             std::size_t max_pool_dim = kDefaultMaxPoolDim);

struct EmbeddingSearch {
  std::optional<ModuleMap> embedding;
  std::size_t tried = 0;
  bool used_random = false;
};
/// Looks for an injective map m → n: a 0/±1/±2 grid over hom_basis, then seeded random combinations.
EmbeddingSearch find_embedding(const Representation& m, const Representation& n, const IdempotentFrame& frame,
                               std::uint64_t seed);

struct OvermoduleResult {
  std::string name;
  bool embedding_found = false;
  std::optional<ModuleMap> embedding;
  std::optional<DelReport> del;  ///< absent when the bound could no longer improve
};

/// Upper bound for sddel(M) = inf{del(N) : M ↪ N}; no lower bound is attempted.
struct SddelReport {
  std::string module_name;
  std::vector<OvermoduleResult> overmodules;
  std::optional<std::size_t> upper_bound;
  std::optional<std::string> bound_from;
  std::uint64_t seed = 0;
};

/// M itself, its injective envelope and M ⊕ P_i.
ModulePool default_overmodule_pool(const Representation& m, const IdempotentFrame& frame);
/// Both pools extend the defaults.
SddelReport sddel_bounded(const Representation& m, std::size_t n_max, const IdempotentFrame& frame,
                          const ModulePool& overmodules = {}, const ModulePool& test_pool = {},
                          std::uint64_t seed = 0, std::string name = "M",
                          std::size_t max_pool_dim = kDefaultMaxPoolDim);

/// Machine form of "U is the syzygy of P/U" for a proper submodule U of an indecomposable projective P.
struct SyzygyCertificate {
  Representation u;
  ModuleMap u_inclusion;
  Representation quotient;
  Representation omega;
  ModuleMap iso;  ///< Ω(P/U) → U
  bool u_in_radical = false;
};
/// Throws UsageError "not proper" when U = P, "cover not minimal" when U ⊄ rad P.
SyzygyCertificate syzygy_certificate(const Representation& p, const std::vector<Vector>& generators,
                                     const IdempotentFrame& frame);

}  // namespace deloop
