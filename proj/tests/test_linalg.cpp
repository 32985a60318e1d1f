#include "deloop/errors.hpp"
#include "deloop/linalg.hpp"
#include "deloop/polynomial.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

namespace deloop {
namespace {

using testing::Rng;

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(Scalar(2, 4).str(), "1/2");
  EXPECT_EQ(Scalar(3, -6).str(), "-1/2");
  EXPECT_EQ(Scalar(6, 3).str(), "2");
  EXPECT_EQ(Scalar(0, 5).str(), "0");
}

TEST(Scalar, ParseAcceptsCanonical) {
  for (const char* s : {"0", "7", "-7", "1/2", "-3/4", "123456789012345678901234567890"})
    EXPECT_EQ(Scalar::parse(s).str(), s);
}

TEST(Scalar, ParseRejectsNonCanonical) {
  for (const char* s : {"2/4", "1/-2", "+1", "-0", "3/1", "0/5", "01", "1/0", "", "1.5", "1/", "/2", " 1"})
    EXPECT_THROW(Scalar::parse(s), ParseError) << s;
}

TEST(Scalar, ExactArithmetic) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar a(testing::random_scalar(rng, -50, 50).raw().get_num().get_si(), 1 + static_cast<long>(rng() % 17));
    const Scalar b(testing::random_scalar(rng, -50, 50).raw().get_num().get_si(), 1 + static_cast<long>(rng() % 17));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
  EXPECT_THROW(Scalar(0).inverse(), UsageError);
}

TEST(Rref, Identity) {
  auto [red, pivots] = rref(Matrix::identity(2));
  EXPECT_EQ(red, Matrix::identity(2));
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, Zero) {
  auto [red, pivots] = rref(Matrix(3, 3));
  EXPECT_EQ(red, Matrix(3, 3));
  EXPECT_TRUE(pivots.empty());
}

TEST(Rref, HandElimination) {
  auto [red, pivots] = rref(Matrix{{2, 4}, {1, 2}});
  EXPECT_EQ(red, (Matrix{{1, 2}, {0, 0}}));
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, Fractions) {
  auto [red, pivots] = rref(Matrix{{3, 1, 2}, {1, 2, 0}});
  EXPECT_EQ(red, (Matrix{{1, 0, Scalar(4, 5)}, {0, 1, Scalar(-2, 5)}}));
  EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(SolveLinear, Identity) {
  const Matrix b{{1, Scalar(2, 3)}, {-4, 5}};
  auto x = solve_linear(Matrix::identity(2), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(SolveLinear, Inconsistent) { EXPECT_FALSE(solve_linear(Matrix{{1, 1}, {1, 1}}, Matrix{{0}, {1}})); }

TEST(SolveLinear, ScalarDivision) {
  auto x = solve_linear(Matrix{{2}}, Matrix{{3}});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (Matrix{{Scalar(3, 2)}}));
}

TEST(SolveLinear, DimensionMismatch) { EXPECT_THROW(solve_linear(Matrix(2, 2), Matrix(3, 1)), UsageError); }

TEST(KernelBasis, Identity) { EXPECT_TRUE(kernel_basis(Matrix::identity(4)).empty()); }

TEST(KernelBasis, Zero) {
  const auto k = kernel_basis(Matrix(2, 3));
  ASSERT_EQ(k.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(k[i], unit_vector(3, i));
}

TEST(KernelBasis, Substitution) {
  const auto k = kernel_basis(Matrix{{1, 2}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vector{-2, 1}));
}

TEST(Inverse, SmallCases) {
  EXPECT_EQ(*inverse(Matrix{{2, 1}, {1, 1}}), (Matrix{{1, -1}, {-1, 2}}));
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  EXPECT_FALSE(inverse(Matrix(2, 3)));
  EXPECT_EQ(*inverse(Matrix()), Matrix());
}

TEST(CanonicalSpan, MatchesKernelConvention) {
  const Matrix a{{1, 1, 0, 2}, {0, 1, 1, 1}};
  const auto k = kernel_basis(a);
  EXPECT_EQ(canonical_span_basis(k, 4), k);
  std::vector<Vector> mixed{add(k[0], k[1]), scale(k[1], 3)};
  EXPECT_EQ(canonical_span_basis(mixed, 4), k);
}

TEST(EchelonBasis, InsertReduceCoordinates) {
  EchelonBasis e(3);
  EXPECT_TRUE(e.insert({1, 2, 0}));
  EXPECT_TRUE(e.insert({0, 1, 1}));
  EXPECT_FALSE(e.insert({1, 3, 1}));
  EXPECT_TRUE(e.contains({2, 5, 1}));
  EXPECT_FALSE(e.contains({0, 0, 1}));
  const auto q = quotient_space(e);
  EXPECT_EQ(q.projection.rows(), 1u);
  EXPECT_TRUE(is_zero(q.projection * Vector{2, 5, 1}));
  EXPECT_EQ(q.projection * q.complement, Matrix::identity(1));
}

TEST(BasisCoordinates, RoundTrip) {
  BasisCoordinates bc({{1, 1, 0}, {0, 1, 1}}, 3);
  EXPECT_EQ(bc({2, 5, 3}), (Vector{2, 3}));
  EXPECT_FALSE(bc.try_coordinates({1, 0, 0}));
  EXPECT_THROW(BasisCoordinates({{1, 1}, {2, 2}}, 2), UsageError);
}

TEST(Polynomial, CharacteristicAndRoots) {
  const Matrix m{{2, 1, 0}, {0, 2, 0}, {0, 0, -1}};
  const Polynomial p = characteristic_polynomial(m);
  EXPECT_EQ(p, Polynomial({4, 0, -3, 1}));  // (t-2)^2 (t+1)
  EXPECT_EQ(rational_roots(p), (std::vector<Scalar>{-1, 2}));
  EXPECT_EQ(distinct_root_count(p), 2);
  EXPECT_TRUE(rational_roots(Polynomial({-2, 0, 1})).empty());
  EXPECT_EQ(distinct_root_count(Polynomial({-2, 0, 1})), 2);
}

class LinalgProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LinalgProperty, RankNullity) {
  Rng rng(GetParam());
  for (int i = 0; i < 50; ++i) {
    const Matrix m = testing::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, -2, 2);
    const auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), m.cols());
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST_P(LinalgProperty, RrefIdempotentAndRowSpace) {
  Rng rng(GetParam());
  for (int i = 0; i < 50; ++i) {
    const Matrix m = testing::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
    const auto once = rref(m);
    EXPECT_EQ(rref(once.reduced).reduced, once.reduced);
    std::vector<Vector> rows, reduced_rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    for (std::size_t r = 0; r < once.pivots.size(); ++r) reduced_rows.push_back(once.reduced.row(r));
    EXPECT_TRUE(testing::same_span(rows, reduced_rows, m.cols()));
  }
}

TEST_P(LinalgProperty, SolveIsExact) {
  Rng rng(GetParam());
  for (int i = 0; i < 50; ++i) {
    const Matrix a = testing::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, -2, 2);
    const Matrix x0 = testing::random_matrix(rng, a.cols(), 2);
    const Matrix b = a * x0;
    auto x = solve_linear(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x, b);
    const Matrix c = testing::random_matrix(rng, a.rows(), 1);
    if (auto y = solve_linear(a, c)) {
      EXPECT_EQ(a * *y, c);
    } else {
      EXPECT_LT(rank(a), rank(Matrix::hstack({a, c}, a.rows())));
    }
  }
}

TEST_P(LinalgProperty, MatrixRingAxioms) {
  Rng rng(GetParam());
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const Matrix a = testing::random_matrix(rng, n, n), b = testing::random_matrix(rng, n, n),
                 c = testing::random_matrix(rng, n, n);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(trace_of_product(a, b), (a * b).trace());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinalgProperty, ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace deloop
