#include "deloop/constructions.hpp"

#include "deloop/errors.hpp"

#include <array>

namespace deloop {

namespace {

std::string with_q(const std::string& base, const Scalar& q) { return base + "[q=" + q.str() + "]"; }

void check_q(const Scalar& q) {
  if (q.is_zero() || q == Scalar(1) || q == Scalar(-1))
    throw UsageError("q must have infinite multiplicative order (got " + q.str() + ")");
}

}  // namespace

AlgebraPtr make_lambda(const Scalar& q) {
  check_q(q);
  enum { one, x, y, z, yx, zx, n };
  std::vector<Vector> table(n * n, zero_vector(n));
  auto set = [&](int i, int j, int k, const Scalar& c) { table[i * n + j][k] = c; };
  for (int b = 0; b < n; ++b) {
    set(one, b, b, 1);
    set(b, one, b, 1);
  }
  set(x, y, yx, -q);
  set(x, z, zx, 1);
  set(y, x, yx, 1);
  set(z, x, zx, 1);
  set(z, y, zx, 1);
  return make_algebra(with_q("Lambda", q), {"1", "x", "y", "z", "yx", "zx"}, unit_vector(n, one), std::move(table));
}

Bimodule make_m_bimodule(const AlgebraPtr& lambda, const Scalar& alpha) {
  Bimodule m;
  m.left = lambda;
  m.right = ground_field();
  m.dim = 3;
  m.labels = {"v", "v'", "v''"};
  for (std::size_t i = 0; i < lambda->dim(); ++i) m.left_action.emplace_back(3, 3);
  m.left_action[lambda->index_of("1")] = Matrix::identity(3);
  m.left_action[lambda->index_of("x")](1, 0) = alpha;
  m.left_action[lambda->index_of("y")](1, 0) = 1;
  m.left_action[lambda->index_of("z")](2, 0) = 1;
  m.right_action = {Matrix::identity(3)};
  return m;
}

SwapPair make_swap_pair(const Scalar& q) {
  SwapPair p;
  p.lambda = make_lambda(q);
  p.m = make_m_bimodule(p.lambda, q);
  p.dm = dual_bimodule(p.m);
  p.b = triangular_algebra(ground_field(), p.lambda, p.m, Orientation::lower, with_q("B", q));
  p.c = triangular_algebra(p.lambda, ground_field(), p.dm, Orientation::lower, with_q("C", q));
  return p;
}

AlgebraPtr make_B(const Scalar& q) { return make_swap_pair(q).b; }
AlgebraPtr make_C(const Scalar& q) { return make_swap_pair(q).c; }

AlgebraIso t1_iso(const Scalar& q) {
  auto p = make_swap_pair(q);
  return swap_iso(p.lambda, ground_field(), p.dm, with_q("T1", q), with_q("C", q));
}

AlgebraIso t2_iso(const Scalar& q) {
  auto p = make_swap_pair(q);
  return swap_iso(ground_field(), p.lambda, p.m, with_q("T2", q), with_q("B", q));
}

AlgebraPtr builtin_algebra(const std::string& ref) {
  if (ref == "k") return ground_field();
  for (const char* base : {"Lambda", "B", "C"}) {
    const std::string prefix = std::string(base) + "[q=";
    if (!ref.starts_with(prefix) || !ref.ends_with("]")) continue;
    Scalar q = Scalar::parse(std::string_view(ref).substr(prefix.size(), ref.size() - prefix.size() - 1));
    if (prefix[0] == 'L') return make_lambda(q);
    return prefix[0] == 'B' ? make_B(q) : make_C(q);
  }
  return nullptr;
}

}  // namespace deloop
