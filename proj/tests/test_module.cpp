#include "deloop/constructions.hpp"
#include "deloop/errors.hpp"
#include "deloop/module.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace deloop {
namespace {

using testing::Rng;

struct CSetup {
  AlgebraPtr c = make_C(2);
  IdempotentFrame frame = primitive_idempotents(c);
  std::vector<Projective> projectives = projective_modules(frame);
  std::vector<Representation> simples = simple_modules(frame);
  Vector yx_generator() const {
    const BasisCoordinates coords(projectives[0].elements.columns(), c->dim());
    return *coords.try_coordinates(c->element("11:yx"));
  }
  SubQuotient u_and_quotient() const { return submodule_and_quotient(projectives[0].module, {yx_generator()}); }
};

struct BSetup {
  AlgebraPtr b = make_B(2);
  IdempotentFrame frame = primitive_idempotents(b);
  std::vector<Representation> simples = simple_modules(frame);
  std::vector<Representation> projectives = regular_and_projectives(frame);
};

struct LambdaSetup {
  AlgebraPtr lambda = make_lambda(2);
  IdempotentFrame frame = primitive_idempotents(lambda);
  Representation m = make_M_alpha(lambda, 2);
};

std::size_t hom_dim(const Representation& x, const Representation& y) { return hom_basis(x, y).size(); }

TEST(MAlpha, Actions) {
  LambdaSetup s;
  for (const Scalar& alpha : {Scalar(2), Scalar(0), Scalar(-5, 3)}) {
    const auto m = make_M_alpha(s.lambda, alpha);
    EXPECT_EQ(m.dim(), 3u);
    EXPECT_TRUE(validate_representation(m).ok());
    Matrix x(3, 3);
    x(1, 0) = alpha;
    EXPECT_EQ(m.action(s.lambda->index_of("x")), x);
    EXPECT_TRUE(m.action(s.lambda->index_of("yx")).is_zero());
    EXPECT_EQ(m.act(s.lambda->element("z")) * unit_vector(3, 0), unit_vector(3, 2));
  }
  EXPECT_THROW(make_M_alpha(make_C(2), 2), UsageError);
}

TEST(Representation, ValidationCatchesBadAction) {
  LambdaSetup s;
  auto actions = s.m.actions();
  actions[s.lambda->index_of("y")](2, 1) = 1;
  EXPECT_FALSE(validate_representation(Representation(s.lambda, 3, actions)).ok());
  EXPECT_THROW(Representation(s.lambda, 2, s.m.actions()), UsageError);
}

TEST(Projectives, DimensionsOverCAndB) {
  CSetup c;
  ASSERT_EQ(c.projectives.size(), 2u);
  EXPECT_EQ(c.projectives[0].module.dim(), 9u);
  EXPECT_EQ(c.projectives[1].module.dim(), 1u);
  EXPECT_TRUE(radical_of_module(c.projectives[1].module).sub.is_zero());
  EXPECT_TRUE(is_isomorphic(c.projectives[1].module, c.simples[1], c.frame));
  BSetup b;
  EXPECT_EQ(b.projectives[0].dim(), 4u);
  EXPECT_EQ(b.projectives[1].dim(), 6u);
  EXPECT_TRUE(is_isomorphic(direct_sum(b.projectives), regular_module(b.b), b.frame));
  for (const auto& p : b.projectives) EXPECT_TRUE(is_indecomposable(p, b.frame));
}

TEST(HomBasis, Examples) {
  CSetup c;
  EXPECT_EQ(hom_dim(c.simples[1], c.simples[1]), 1u);
  EXPECT_EQ(hom_dim(c.projectives[1].module, c.projectives[0].module), 3u);
  EXPECT_EQ(hom_dim(c.projectives[0].module, c.projectives[1].module), 0u);
  for (const auto& f : hom_basis(c.projectives[1].module, c.projectives[0].module)) EXPECT_TRUE(is_module_map(f));
  EXPECT_THROW(hom_basis(c.simples[0], LambdaSetup().m), UsageError);
}

TEST(HomBasis, MIntoRegularLambdaByBothRoutes) {
  LambdaSetup s;
  const auto reg = regular_module(s.lambda);
  const auto direct = hom_basis(s.m, reg);
  const auto framed = hom_basis(s.m, reg, s.frame);
  EXPECT_EQ(direct.size(), 3u);
  ASSERT_EQ(framed.size(), direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_EQ(direct[i].matrix, framed[i].matrix);
  // oracle: M = Λ·v, so Hom(M, Λ) ≅ {w : ann(v)·w = 0}
  Matrix eval(3, 6);
  for (std::size_t b = 0; b < 6; ++b) eval.set_block(0, b, Matrix::column(s.m.action(b) * unit_vector(3, 0)));
  std::vector<Matrix> blocks;
  for (const auto& a : kernel_basis(eval)) blocks.push_back(s.lambda->left_mult(a));
  EXPECT_EQ(kernel_basis(Matrix::vstack(blocks, 6)).size(), 3u);
}

TEST(Radical, Examples) {
  CSetup c;
  EXPECT_EQ(radical_of_module(c.projectives[0].module).sub.dim(), 8u);
  LambdaSetup s;
  const auto rad = radical_of_module(s.m);
  EXPECT_EQ(rad.sub.dim(), 2u);
  EXPECT_TRUE(testing::same_span(rad.inclusion.matrix.columns(), {unit_vector(3, 1), unit_vector(3, 2)}, 3));
  const auto kk = product_algebra(ground_field(), ground_field());
  EXPECT_TRUE(radical_of_module(regular_module(kk)).sub.is_zero());
}

TEST(ProjectiveCover, Examples) {
  CSetup c;
  const auto p1_cover = projective_cover(c.projectives[0].module, c.frame);
  EXPECT_EQ(p1_cover.source.dim(), 9u);
  EXPECT_TRUE(is_invertible(p1_cover.matrix));

  const auto sq = c.u_and_quotient();
  const auto q_cover = projective_cover(sq.quot, c.frame);
  EXPECT_EQ(q_cover.source.dim(), 9u);
  EXPECT_EQ(kernel_module(q_cover).dim(), 1u);
  EXPECT_TRUE(is_isomorphic(kernel_module(q_cover), sq.sub, c.frame));

  LambdaSetup s;
  const auto m_cover = projective_cover(s.m, s.frame);
  EXPECT_EQ(m_cover.source.dim(), 6u);
  EXPECT_TRUE(is_module_map(m_cover));
  EXPECT_EQ(rank(m_cover.matrix), 3u);
  EXPECT_EQ(kernel_module(m_cover).dim(), 3u);

  const auto zero = projective_cover(zero_module(s.lambda), s.frame);
  EXPECT_EQ(zero.source.dim(), 0u);
}

TEST(Syzygy, Examples) {
  CSetup c;
  EXPECT_TRUE(syzygy(c.projectives[0].module, 1, c.frame).is_zero());
  EXPECT_EQ(syzygy(c.simples[0], 0, c.frame).dim(), 1u);
  const auto sq = c.u_and_quotient();
  EXPECT_EQ(sq.quot.dim(), 8u);
  EXPECT_TRUE(is_isomorphic(syzygy(sq.quot, 1, c.frame), sq.sub, c.frame));

  BSetup b;
  const auto omega = syzygy(b.simples[0], 1, b.frame);
  EXPECT_EQ(omega.dim(), 3u);
  EXPECT_TRUE(omega.act(b.frame.idempotents[0]).is_zero());
  EXPECT_EQ(omega.act(b.frame.idempotents[1]), Matrix::identity(3));
}

TEST(Duality, Examples) {
  LambdaSetup s;
  const auto op = opposite(s.lambda);
  const auto dm = dual_module(s.m, op);
  EXPECT_EQ(dm.dim(), 3u);
  EXPECT_TRUE(validate_representation(dm).ok());
  const auto ddm = dual_module(dm, s.lambda);
  const auto iso = is_isomorphic(ddm, s.m, s.frame);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_module_map(*iso));
  for (std::size_t i = 0; i < s.lambda->dim(); ++i) EXPECT_EQ(ddm.action(i), s.m.action(i));

  CSetup c;
  const auto cop = opposite(c.c);
  const auto op_frame = opposite_frame(c.frame, cop);
  for (const auto& simple : c.simples) {
    const auto d = dual_module(simple, cop);
    EXPECT_EQ(d.dim(), 1u);
    EXPECT_TRUE(is_indecomposable(d, op_frame));
  }
}

TEST(InjectiveEnvelope, Examples) {
  CSetup c;
  const auto dims = block_dims(c.frame);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto env = injective_envelope(c.simples[i], c.frame);
    EXPECT_TRUE(is_module_map(env));
    EXPECT_EQ(rank(env.matrix), 1u);
    // dim I(S_i) = dim e_i·A
    EXPECT_EQ(env.target.dim(), dims[i][0] + dims[i][1]);
    const auto again = injective_envelope(env.target, c.frame);
    EXPECT_TRUE(is_invertible(again.matrix));
  }
  const auto sq = c.u_and_quotient();
  for (const auto& m : {sq.sub, sq.quot, c.projectives[0].module}) {
    const auto env = injective_envelope(m, c.frame);
    EXPECT_EQ(rank(env.matrix), m.dim());
  }
}

TEST(Decompose, Examples) {
  CSetup c;
  const auto p12 = direct_sum({c.projectives[0].module, c.projectives[1].module});
  const auto d = decompose(p12, c.frame);
  ASSERT_EQ(d.summands.size(), 2u);
  EXPECT_EQ(d.class_count(), 2u);
  std::vector<std::size_t> dims{d.summands[0].dim(), d.summands[1].dim()};
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 9}));

  const auto s1s1 = decompose(direct_sum({c.simples[0], c.simples[0]}), c.frame);
  EXPECT_EQ(s1s1.summands.size(), 2u);
  EXPECT_EQ(s1s1.multiplicities(), (std::vector<std::size_t>{2}));

  const auto reg = decompose(regular_module(c.c), c.frame);
  EXPECT_EQ(reg.summands.size(), 2u);
  EXPECT_EQ(reg.class_count(), 2u);
  for (const auto& s : reg.summands) EXPECT_TRUE(is_projective(s, c.frame));
  // inclusions jointly form a basis
  EXPECT_TRUE(is_invertible(Matrix::hstack(reg.inclusions, 10)));
}

TEST(Decompose, NonSplitEndRejected) {
  // Kronecker module for the field ℚ(i): End is ℚ(i), which does not split over ℚ
  const auto kron = algebra_from_matrices(
      "Kronecker", {"e1", "e2", "a", "b"},
      {Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}},
       Matrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}, Matrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}});
  const auto frame = primitive_idempotents(kron);
  // both vertices carry k², a acts as the identity and b as a quarter turn
  const Matrix e1 = Matrix::block_diagonal({Matrix::identity(2), Matrix(2, 2)});
  const Matrix e2 = Matrix::block_diagonal({Matrix(2, 2), Matrix::identity(2)});
  Matrix a(4, 4), b(4, 4);
  a.set_block(2, 0, Matrix::identity(2));
  b.set_block(2, 0, Matrix{{0, -1}, {1, 0}});
  const Representation m(kron, 4, {e1, e2, a, b});
  ASSERT_TRUE(validate_representation(m).ok());
  EXPECT_EQ(frame.size(), 2u);
  EXPECT_THROW(decompose(m, frame), UnsupportedError);
}

TEST(Iso, Examples) {
  CSetup c;
  const auto sq = c.u_and_quotient();
  const auto iso = is_isomorphic(sq.sub, c.simples[0], c.frame);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_module_map(*iso));
  EXPECT_TRUE(is_invertible(iso->matrix));
  EXPECT_FALSE(is_isomorphic(c.simples[0], c.simples[1], c.frame));
  EXPECT_FALSE(is_isomorphic(sq.quot, sq.sub, c.frame));
  for (const auto& m : {sq.sub, sq.quot, c.projectives[0].module, regular_module(c.c)})
    EXPECT_TRUE(is_isomorphic(m, m, c.frame));
}

TEST(StableSummand, Examples) {
  CSetup c;
  const auto sq = c.u_and_quotient();
  EXPECT_TRUE(stable_summand(c.projectives[0].module, c.simples[1], c.frame).holds);
  EXPECT_TRUE(stable_summand(c.projectives[1].module, zero_module(c.c), c.frame).holds);
  const auto omega = syzygy(sq.quot, 1, c.frame);
  const auto st = stable_summand(sq.sub, omega, c.frame);
  ASSERT_TRUE(st.holds);
  ASSERT_EQ(st.pairs.size(), 1u);
  EXPECT_TRUE(is_invertible(compose(st.pairs[0].retraction, st.pairs[0].section).matrix));
  EXPECT_FALSE(stable_summand(c.simples[0], zero_module(c.c), c.frame).holds);
  EXPECT_FALSE(stable_summand(sq.quot, omega, c.frame).holds);

  BSetup b;
  std::vector<Representation> pool{b.simples[0], b.simples[1], b.projectives[0], b.projectives[1],
                                   radical_of_module(b.projectives[0]).sub, radical_of_module(b.projectives[1]).sub};
  for (const auto& s : b.simples) pool.push_back(injective_envelope(s, b.frame).target);
  for (const auto& n : pool)
    EXPECT_FALSE(stable_summand(b.simples[0], syzygy(n, 1, b.frame), b.frame).holds);
}

TEST(Torsionless, Examples) {
  CSetup c;
  const auto t = torsionless(c.simples[0], c.frame);
  ASSERT_TRUE(t.holds);
  ASSERT_TRUE(t.embedding);
  EXPECT_EQ(t.vertices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(rank(t.embedding->matrix), 1u);
  // the image is U = k·yx inside P1
  EXPECT_TRUE(testing::same_span(t.embedding->matrix.columns(), {c.yx_generator()}, 9));

  BSetup b;
  const auto tb = torsionless(b.simples[0], b.frame);
  EXPECT_FALSE(tb.holds);
  EXPECT_EQ(tb.kernel_dim, 1u);
  EXPECT_FALSE(testing::torsionless_oracle(b.simples[0]));
  for (const auto& p : b.projectives) EXPECT_TRUE(torsionless(p, b.frame).holds);
  for (const auto& p : c.projectives) EXPECT_TRUE(torsionless(p.module, c.frame).holds);
}

TEST(Submodule, Examples) {
  CSetup c;
  const auto& p1 = c.projectives[0].module;
  std::vector<Vector> all;
  for (std::size_t i = 0; i < p1.dim(); ++i) all.push_back(unit_vector(p1.dim(), i));
  const auto whole = submodule_and_quotient(p1, all);
  EXPECT_EQ(whole.sub.dim(), 9u);
  EXPECT_TRUE(whole.quot.is_zero());
  const auto sq = c.u_and_quotient();
  EXPECT_EQ(sq.sub.dim(), 1u);
  EXPECT_EQ(sq.quot.dim(), 8u);
  EXPECT_TRUE(is_module_map(sq.inclusion));
  EXPECT_TRUE(is_module_map(sq.projection));
  EXPECT_TRUE((sq.projection.matrix * sq.inclusion.matrix).is_zero());
}

// Modules with known names over C, B and Λ, used for the all-pairs checks.
std::vector<std::pair<IdempotentFrame, std::vector<Representation>>> golden_families() {
  CSetup c;
  const auto sq = c.u_and_quotient();
  std::vector<Representation> cm{c.simples[0], c.simples[1], c.projectives[0].module, c.projectives[1].module,
                                 sq.sub, sq.quot};
  for (const auto& s : c.simples) cm.push_back(injective_envelope(s, c.frame).target);
  BSetup b;
  std::vector<Representation> bm{b.simples[0], b.simples[1], b.projectives[0], b.projectives[1],
                                 syzygy(b.simples[0], 1, b.frame)};
  LambdaSetup l;
  std::vector<Representation> lm{l.m, regular_module(l.lambda), simple_modules(l.frame)[0],
                                 make_M_alpha(l.lambda, 0)};
  return {{c.frame, cm}, {b.frame, bm}, {l.frame, lm}};
}

TEST(Duality, HomSymmetryOnGoldenPairs) {
  for (const auto& [frame, modules] : golden_families()) {
    const auto op = opposite(frame.algebra);
    std::vector<Representation> duals;
    for (const auto& m : modules) duals.push_back(dual_module(m, op));
    for (std::size_t i = 0; i < modules.size(); ++i)
      for (std::size_t j = 0; j < modules.size(); ++j)
        EXPECT_EQ(hom_dim(modules[i], modules[j]), hom_dim(duals[j], duals[i])) << frame.algebra->name() << i << j;
  }
}

TEST(HomBasis, RoutesAgreeOnGoldenPairs) {
  for (const auto& [frame, modules] : golden_families())
    for (const auto& x : modules)
      for (const auto& y : modules) {
        const auto direct = hom_basis(x, y);
        const auto framed = hom_basis(x, y, frame);
        ASSERT_EQ(direct.size(), framed.size());
        for (std::size_t k = 0; k < direct.size(); ++k) EXPECT_EQ(direct[k].matrix, framed[k].matrix);
      }
}

TEST(Iso, ReflexiveOnGoldenModules) {
  for (const auto& [frame, modules] : golden_families())
    for (const auto& m : modules) {
      EXPECT_TRUE(is_isomorphic(m, m, frame));
      EXPECT_EQ(rank(injective_envelope(m, frame).matrix), m.dim());
    }
}

class ModuleProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ModuleProperty, SyzygyLiesInRadicalAndIsTorsionless) {
  Rng rng(GetParam());
  for (int i = 0; i < 50; ++i) {
    const auto ra = testing::random_basic_algebra(rng);
    const auto frame = primitive_idempotents(ra.algebra);
    const auto m = testing::random_module(rng, ra, frame, 10);
    const auto cover = projective_cover(m, frame);
    ModuleMap inc;
    const auto omega = kernel_module(cover, &inc);
    const auto rad = radical_of_module(cover.source);
    EchelonBasis rad_span(cover.source.dim());
    for (const auto& v : rad.inclusion.matrix.columns()) rad_span.insert(v);
    for (const auto& v : inc.matrix.columns()) EXPECT_TRUE(rad_span.contains(v));
    const auto t = torsionless(omega, frame);
    EXPECT_TRUE(t.holds);
    if (t.embedding) {
      EXPECT_EQ(rank(t.embedding->matrix), omega.dim());
    }
    EXPECT_EQ(t.holds, testing::torsionless_oracle(omega));
  }
}

TEST_P(ModuleProperty, DualityHomSymmetry) {
  Rng rng(GetParam() + 50);
  for (int i = 0; i < 50; ++i) {
    const auto ra = testing::random_basic_algebra(rng);
    const auto frame = primitive_idempotents(ra.algebra);
    const auto x = testing::random_module(rng, ra, frame, 8);
    const auto y = testing::random_module(rng, ra, frame, 8);
    const auto op = opposite(ra.algebra);
    EXPECT_EQ(hom_dim(x, y), hom_dim(dual_module(y, op), dual_module(x, op)));
    const auto direct = hom_basis(x, y);
    const auto framed = hom_basis(x, y, frame);
    ASSERT_EQ(direct.size(), framed.size());
    for (std::size_t k = 0; k < direct.size(); ++k) EXPECT_EQ(direct[k].matrix, framed[k].matrix);
  }
}

TEST_P(ModuleProperty, RadicalMatchesOracle) {
  Rng rng(GetParam() + 90);
  for (int i = 0; i < 50; ++i) {
    const auto ra = testing::random_basic_algebra(rng);
    const auto frame = primitive_idempotents(ra.algebra);
    const auto m = testing::random_module(rng, ra, frame, 10);
    const auto rad = radical_of_module(m);
    EXPECT_TRUE(testing::same_span(rad.inclusion.matrix.columns(), testing::radical_span_oracle(m), m.dim()));
    EXPECT_EQ(projective_cover(m, frame).source.dim(), testing::cover_dim_oracle(m, frame));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ModuleProperty, ::testing::Values(1u, 2u));

}  // namespace
}  // namespace deloop
