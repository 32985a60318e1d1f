#include "deloop/constructions.hpp"
#include "deloop/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace deloop {
namespace {

using testing::Rng;

bool equal_up_to_permutation(const std::vector<std::vector<std::size_t>>& a,
                             const std::vector<std::vector<std::size_t>>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i)
      for (std::size_t j = 0; j < a.size() && same; ++j) same = a[i][j] == b[perm[i]][perm[j]];
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

AlgebraPtr k_times_k() {
  return product_algebra(ground_field(), ground_field());
}

class LambdaAtQ : public ::testing::TestWithParam<int> {
 protected:
  Scalar q() const { return GetParam(); }
};

TEST_P(LambdaAtQ, TableMatchesRewritingOracle) {
  const auto lambda = make_lambda(q());
  ASSERT_EQ(lambda->dim(), 6u);
  EXPECT_EQ(lambda->basis_labels(), (std::vector<std::string>{"1", "x", "y", "z", "yx", "zx"}));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      EXPECT_EQ(lambda->product(i, j), testing::lambda_rewrite(q(), testing::lambda_word(i) + testing::lambda_word(j)))
          << i << "," << j;
}

TEST_P(LambdaAtQ, DefiningProducts) {
  const auto l = make_lambda(q());
  auto prod = [&](const char* a, const char* b) { return l->multiply(l->element(a), l->element(b)); };
  EXPECT_EQ(prod("x", "y"), scale(l->element("yx"), -q()));
  EXPECT_EQ(prod("z", "y"), l->element("zx"));
  EXPECT_EQ(prod("x", "z"), l->element("zx"));
  for (const char* a : {"x", "y", "z", "yx", "zx"}) EXPECT_TRUE(is_zero(prod(a, "yx"))) << a;
  EXPECT_TRUE(is_zero(prod("y", "z")));
}

TEST_P(LambdaAtQ, ValidRadicalAndSocle) {
  const auto l = make_lambda(q());
  EXPECT_TRUE(validate_algebra(*l).ok());
  std::vector<Vector> expected;
  for (const char* s : {"x", "y", "z", "yx", "zx"}) expected.push_back(l->element(s));
  EXPECT_TRUE(testing::same_span(l->radical(), expected, 6));
  EXPECT_EQ(radical_power_dims(*l), (std::vector<std::size_t>{5, 2, 0}));
  EXPECT_EQ(product_span(*l, l->radical(), l->radical()).size(), 2u);
  // Λ·yx is one-dimensional
  std::vector<Vector> left_ideal;
  for (std::size_t i = 0; i < 6; ++i) left_ideal.push_back(l->multiply(l->basis_vector(i), l->element("yx")));
  EXPECT_TRUE(testing::same_span(left_ideal, {l->element("yx")}, 6));
  EXPECT_TRUE(is_local(*l));
  EXPECT_FALSE(is_commutative(*l));
}

TEST_P(LambdaAtQ, SwapIsomorphisms) {
  for (const auto& iso : {t1_iso(q()), t2_iso(q())}) {
    EXPECT_TRUE(iso.verified);
    EXPECT_EQ(iso.pairs_checked, 100u);
    EXPECT_TRUE(verify_explicit_iso(*iso.source, *iso.target, iso.map).ok);
  }
  EXPECT_TRUE(same_structure(*t1_iso(q()).target, *make_C(q())));
  EXPECT_TRUE(same_structure(*t2_iso(q()).target, *make_B(q())));
}

TEST_P(LambdaAtQ, Annihilation) {
  const auto pair = make_swap_pair(q());
  const std::size_t yx = pair.lambda->index_of("yx");
  EXPECT_TRUE(pair.m.left_action[yx].is_zero());
  EXPECT_TRUE(pair.dm.right_action[yx].is_zero());
  EXPECT_EQ(pair.dm.dim, 3u);
}

INSTANTIATE_TEST_SUITE_P(Q, LambdaAtQ, ::testing::Values(2, 3));

TEST(Lambda, RejectsRootsOfUnity) {
  for (int q : {0, 1, -1}) EXPECT_THROW(make_lambda(q), UsageError) << q;
  EXPECT_NO_THROW(make_lambda(Scalar(1, 2)));
  EXPECT_NO_THROW(make_lambda(-2));
}

TEST(Validate, GroundField) {
  const auto k = make_algebra("k", {"1"}, {1}, {{1}});
  EXPECT_TRUE(validate_algebra(*k).ok());
}

TEST(Validate, DetectsAssociativityViolation) {
  // b1·b1 = b2 with b2·b1 = b1 and b1·b2 = 0 forces (b1 b1) b1 = b1 ≠ 0 = b1 (b1 b1)
  const auto a = make_algebra("bad", {"1", "b1", "b2"}, {1, 0, 0},
                              {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                               {0, 1, 0}, {0, 0, 1}, {0, 0, 0},
                               {0, 0, 1}, {0, 1, 0}, {0, 0, 0}});
  const auto report = validate_algebra(*a);
  EXPECT_FALSE(report.ok());
  const std::array<std::size_t, 3> triple{1, 1, 1};
  EXPECT_NE(std::find(report.associativity_failures.begin(), report.associativity_failures.end(), triple),
            report.associativity_failures.end());
}

TEST(Validate, DetectsUnitFailure) {
  const auto a = make_algebra("bad", {"1", "b"}, {1, 0}, {{1, 0}, {0, 0}, {0, 1}, {0, 0}});
  EXPECT_FALSE(validate_algebra(*a).unit_failures.empty());
}

TEST(Opposite, Involution) {
  for (const auto& a : {make_lambda(2), make_B(2), make_C(3), ground_field()}) {
    EXPECT_TRUE(same_structure(*opposite(opposite(a)), *a));
    EXPECT_TRUE(validate_algebra(*opposite(a)).ok());
  }
  EXPECT_TRUE(same_structure(*opposite(ground_field()), *ground_field()));
}

TEST(Opposite, TransposedTable) {
  const auto l = make_lambda(2);
  const auto op = opposite(l);
  EXPECT_EQ(op->multiply(op->element("x"), op->element("y")), l->element("yx"));
  for (std::size_t i = 0; i < l->dim(); ++i)
    for (std::size_t j = 0; j < l->dim(); ++j) EXPECT_EQ(op->product(i, j), l->product(j, i));
}

TEST(Radical, Examples) {
  EXPECT_TRUE(ground_field()->radical().empty());
  EXPECT_TRUE(k_times_k()->radical().empty());
  const auto c = make_C(2);
  EXPECT_EQ(c->radical().size(), 8u);
  EXPECT_EQ(radical_power_dims(*c), (std::vector<std::size_t>{8, 3, 0}));
  EXPECT_EQ(radical_power_dims(*make_B(2)), (std::vector<std::size_t>{8, 4, 0}));
  // radical of C: the Λ-radical and the bimodule block
  std::vector<Vector> expected;
  for (const char* s : {"11:x", "11:y", "11:z", "11:yx", "11:zx", "21:v*", "21:v'*", "21:v''*"})
    expected.push_back(c->element(s));
  EXPECT_TRUE(testing::same_span(c->radical(), expected, 10));
}

TEST(Idempotents, Examples) {
  const auto c = make_C(2);
  const auto fc = primitive_idempotents(c);
  ASSERT_EQ(fc.size(), 2u);
  EXPECT_TRUE(validate_frame(fc).ok());
  EXPECT_EQ(fc.idempotents[0], c->element("11:1"));
  EXPECT_EQ(fc.idempotents[1], c->element("22:1"));

  const auto fl = primitive_idempotents(make_lambda(2));
  ASSERT_EQ(fl.size(), 1u);
  EXPECT_EQ(fl.idempotents[0], make_lambda(2)->unit());

  const auto kk = primitive_idempotents(k_times_k());
  ASSERT_EQ(kk.size(), 2u);
  EXPECT_EQ(kk.idempotents[0], (Vector{1, 0}));
  EXPECT_EQ(kk.idempotents[1], (Vector{0, 1}));
}

TEST(Idempotents, LiftsFromMixedBasis) {
  // C in a scrambled basis still yields a valid primitive frame
  Rng rng(3);
  const auto c = make_C(2);
  const Matrix p = testing::random_invertible(rng, c->dim());
  const Matrix pi = *inverse(p);
  std::vector<Vector> table;
  for (std::size_t i = 0; i < c->dim(); ++i)
    for (std::size_t j = 0; j < c->dim(); ++j) table.push_back(pi * c->multiply(p.col(i), p.col(j)));
  const auto mixed = make_algebra("mixed", c->basis_labels(), pi * c->unit(), table);
  ASSERT_TRUE(validate_algebra(*mixed).ok());
  const auto frame = primitive_idempotents(mixed);
  EXPECT_TRUE(validate_frame(frame).ok());
  EXPECT_TRUE(equal_up_to_permutation(block_dims(frame), {{6, 0}, {3, 1}}));
}

TEST(Idempotents, RejectsNonSplit) {
  // ℚ(i) = ℚ[t]/(t² + 1)
  const auto qi = make_algebra("Q(i)", {"1", "t"}, {1, 0}, {{1, 0}, {0, 1}, {0, 1}, {-1, 0}});
  ASSERT_TRUE(validate_algebra(*qi).ok());
  EXPECT_THROW(primitive_idempotents(qi), UnsupportedError);
}

TEST(Triangular, DimensionsAndBlocks) {
  const auto b = make_B(2), c = make_C(2);
  EXPECT_EQ(b->dim(), 10u);
  EXPECT_EQ(c->dim(), 10u);
  EXPECT_TRUE(validate_algebra(*b).ok());
  EXPECT_TRUE(validate_algebra(*c).ok());
  EXPECT_EQ(block_dims(primitive_idempotents(b)), (std::vector<std::vector<std::size_t>>{{1, 0}, {3, 6}}));
  EXPECT_EQ(block_dims(primitive_idempotents(c)), (std::vector<std::vector<std::size_t>>{{6, 0}, {3, 1}}));
  EXPECT_EQ(block_dims(triangular_frame(b)), block_dims(primitive_idempotents(b)));
  EXPECT_EQ(block_dims(primitive_idempotents(ground_field())), (std::vector<std::vector<std::size_t>>{{1}}));
}

TEST(Triangular, RejectsMismatchedBimodule) {
  const auto pair = make_swap_pair(2);
  EXPECT_THROW(triangular_algebra(pair.lambda, ground_field(), pair.m, Orientation::lower, "bad"), UsageError);
}

TEST(SwapIso, ZeroBimoduleIsCoordinateSwap) {
  const auto l = make_lambda(2), k = ground_field();
  Bimodule zero{k, l, 0, {}, {}, {}};
  zero.left_action.assign(k->dim(), Matrix());
  zero.right_action.assign(l->dim(), Matrix());
  const auto iso = swap_iso(l, k, zero);
  EXPECT_TRUE(iso.verified);
  EXPECT_EQ(iso.pairs_checked, 49u);
  EXPECT_TRUE(same_structure(*iso.target, *product_algebra(l, k)));
}

TEST(Bimodule, DualIsInvolution) {
  const auto pair = make_swap_pair(2);
  EXPECT_TRUE(validate_bimodule(pair.m).ok());
  EXPECT_TRUE(validate_bimodule(pair.dm).ok());
  const Bimodule dd = dual_bimodule(pair.dm);
  EXPECT_EQ(dd.dim, 3u);
  // the canonical double-dual identification is the identity in dual bases
  EXPECT_EQ(dd.left_action, pair.m.left_action);
  EXPECT_EQ(dd.right_action, pair.m.right_action);
  for (std::size_t i = 0; i < pair.lambda->dim(); ++i)
    EXPECT_EQ(pair.dm.right_action[i], pair.m.left_action[i].transpose());
}

TEST(Bimodule, ValidationCatchesBadAction) {
  auto m = make_swap_pair(2).m;
  m.left_action[m.left->index_of("x")](0, 1) = 1;
  EXPECT_FALSE(validate_bimodule(m).ok());
}

TEST(Center, Dimensions) {
  EXPECT_EQ(center_dimension(*ground_field()), 1u);
  EXPECT_EQ(center_dimension(*k_times_k()), 2u);
  EXPECT_EQ(center_dimension(*make_lambda(2)), 3u);
}

TEST(QuotientAndCorner, Examples) {
  const auto l = make_lambda(2);
  const auto q = quotient_algebra(l, l->radical());
  EXPECT_EQ(q.algebra->dim(), 1u);
  EXPECT_TRUE(validate_algebra(*q.algebra).ok());
  const auto c = make_C(2);
  const auto corner = corner_algebra(c, c->element("11:1"));
  EXPECT_EQ(corner->dim(), 6u);
  EXPECT_TRUE(same_structure(*corner, *l) || radical_power_dims(*corner) == radical_power_dims(*l));
}

TEST(Builtins, Resolve) {
  EXPECT_TRUE(same_structure(*builtin_algebra("C[q=2]"), *make_C(2)));
  EXPECT_TRUE(same_structure(*builtin_algebra("Lambda[q=3]"), *make_lambda(3)));
  EXPECT_TRUE(same_structure(*builtin_algebra("B[q=1/2]"), *make_B(Scalar(1, 2))));
  EXPECT_EQ(builtin_algebra("k")->dim(), 1u);
  EXPECT_EQ(builtin_algebra("D[q=2]"), nullptr);
}

class RandomAlgebraProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomAlgebraProperty, StructureInvariants) {
  Rng rng(GetParam());
  for (int i = 0; i < 50; ++i) {
    const auto ra = testing::random_basic_algebra(rng);
    const auto& a = *ra.algebra;
    ASSERT_LE(a.dim(), 8u);
    EXPECT_TRUE(validate_algebra(a).ok());
    const auto powers = radical_power_dims(a);
    EXPECT_EQ(powers.back(), 0u);
    EXPECT_EQ(a.dim(), a.radical().size() + ra.vertices);
    const auto frame = primitive_idempotents(ra.algebra);
    EXPECT_TRUE(validate_frame(frame).ok());
    EXPECT_EQ(frame.size(), ra.vertices);
    EXPECT_TRUE(equal_up_to_permutation(block_dims(frame), ra.corner_dims));
    EXPECT_TRUE(same_structure(*opposite(opposite(ra.algebra)), a));
    EXPECT_TRUE(validate_representation(ra.natural).ok());
  }
}

TEST_P(RandomAlgebraProperty, SwapOnRandomTriangular) {
  Rng rng(GetParam() + 100);
  std::size_t checked = 0;
  for (int attempt = 0; attempt < 400 && checked < 10; ++attempt) {
    const auto r = testing::random_basic_algebra(rng, 4).algebra;
    if (primitive_idempotents(r).size() != 1) continue;
    const auto s = testing::random_basic_algebra(rng, 5);
    // N = natural S-module, R local acting through its augmentation character
    const auto quotient = quotient_algebra(r, r->radical());
    const Scalar unit_image = (quotient.space.projection * r->unit())[0];
    Bimodule n{s.algebra, r, s.natural.dim(), s.natural.actions(), {}, {}};
    for (std::size_t b = 0; b < r->dim(); ++b) {
      const Scalar chi = (quotient.space.projection * r->basis_vector(b))[0] / unit_image;
      n.right_action.push_back(Matrix::identity(n.dim) * chi);
    }
    ASSERT_TRUE(validate_bimodule(n).ok());
    const auto iso = swap_iso(r, s.algebra, n);
    EXPECT_TRUE(iso.verified);
    const std::size_t d = r->dim() + s.algebra->dim() + n.dim;
    EXPECT_EQ(iso.pairs_checked, d * d);
    EXPECT_TRUE(validate_algebra(*iso.target).ok());
    ++checked;
  }
  EXPECT_EQ(checked, 10u);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomAlgebraProperty, ::testing::Values(1u, 2u));

}  // namespace
}  // namespace deloop
