#pragma once

#include "deloop/algebra.hpp"

namespace deloop {

/// Λ = k⟨x,y,z⟩ / (x², y², z², yz, xy + q·yx, xz − zx, zy − zx) on the basis 1, x, y, z, yx, zx.
/// Throws UsageError unless q has infinite multiplicative order (q ∉ {0, 1, −1}).
AlgebraPtr make_lambda(const Scalar& q);

/// M(α) as a (Λ, k)-bimodule on v, v', v'': x·v = α·v', y·v = v', z·v = v'', all else zero.
Bimodule make_m_bimodule(const AlgebraPtr& lambda, const Scalar& alpha);

/// The four algebras of the swap, plus the ingredients.
struct SwapPair {
  AlgebraPtr lambda;
  Bimodule m;    ///< M(q), a (Λ, k)-bimodule
  Bimodule dm;   ///< D(M(q)), a (k, Λ)-bimodule
  AlgebraPtr b;  ///< [[k, 0], [M(q), Λ]]
  AlgebraPtr c;  ///< [[Λ, 0], [D(M(q)), k]]
};
SwapPair make_swap_pair(const Scalar& q);

AlgebraPtr make_B(const Scalar& q);
AlgebraPtr make_C(const Scalar& q);

/// T₁ = [[k, D(M(q))], [0, Λ]] → C.
AlgebraIso t1_iso(const Scalar& q);
/// T₂ = [[Λ, M(q)], [0, k]] → B.
AlgebraIso t2_iso(const Scalar& q);

/// Resolves "k", "Lambda[q=…]", "B[q=…]", "C[q=…]"; nullptr for any other name.
AlgebraPtr builtin_algebra(const std::string& ref);

}  // namespace deloop
