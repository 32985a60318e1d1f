#include "deloop/polynomial.hpp"

#include "deloop/errors.hpp"

#include <algorithm>

namespace deloop {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Scalar inv = leading().inverse();
  std::vector<Scalar> c = coeffs_;
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

namespace {

// a = q·b + r
void divide(Polynomial& a, const Polynomial& b, std::vector<Scalar>* quot) {
  if (b.is_zero()) throw UsageError("polynomial division by zero");
  auto c = a.coeffs();
  const int db = b.degree();
  const Scalar inv = b.leading().inverse();
  if (quot) quot->assign(c.size() >= b.coeffs().size() ? c.size() - b.coeffs().size() + 1 : 0, Scalar());
  for (int d = static_cast<int>(c.size()) - 1; d >= db; --d) {
    if (c[d].is_zero()) continue;
    const Scalar f = c[d] * inv;
    if (quot) (*quot)[d - db] = f;
    for (int k = 0; k <= db; ++k) c[d - db + k] -= f * b.coeffs()[k];
  }
  a = Polynomial(std::move(c));
}

}  // namespace

Polynomial Polynomial::remainder(Polynomial a, const Polynomial& b) {
  divide(a, b, nullptr);
  return a;
}

Polynomial Polynomial::quotient(Polynomial a, const Polynomial& b) {
  std::vector<Scalar> q;
  divide(a, b, &q);
  return Polynomial(std::move(q));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw UsageError("characteristic polynomial of non-square matrix");
  // Faddeev–LeVerrier: M_k = A·M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A·M_k)/k.
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    c[n - k] = -trace_of_product(m, mk) / Scalar(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

int sign_changes(const std::vector<Polynomial>& chain, const Scalar& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Polynomial squarefree_part(const Polynomial& p) {
  const Polynomial g = Polynomial::gcd(p, p.derivative());
  return Polynomial::quotient(p, g).monic();
}

}  // namespace

int distinct_root_count(const Polynomial& p) {
  if (p.degree() <= 0) return 0;
  return squarefree_part(p).degree();
}

std::vector<Scalar> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("rational_roots of the zero polynomial");
  if (p.degree() == 0) return {};
  const Polynomial g = squarefree_part(p);

  // Scale g to a primitive integer polynomial; any rational root r then has
  // r·lead an integer, so an isolating interval narrower than 1/|lead|
  // leaves at most two candidates to test exactly.
  mpz_class den_lcm = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : g.coeffs()) ints.push_back(c.raw().get_num() * (den_lcm / c.raw().get_den()));
  mpz_class content = 0;
  for (const auto& z : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  std::vector<Scalar> prim;
  for (auto& z : ints) prim.emplace_back(mpq_class(z / content));
  const Polynomial h(std::move(prim));
  const Scalar lead = h.leading().abs();

  std::vector<Polynomial> chain{h, h.derivative()};
  while (chain.back().degree() > 0) {
    Polynomial r = Polynomial::remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(Polynomial(std::vector<Scalar>{}) - r);
  }

  // Cauchy bound: every root lies strictly inside (-bound, bound).
  Scalar bound = 0;
  for (int i = 0; i < h.degree(); ++i) bound = std::max(bound, (h.coeffs()[i] / h.leading()).abs());
  bound += 1;

  std::vector<Scalar> roots;
  const Scalar width_target = Scalar(1) / (lead * Scalar(2));
  struct Interval {
    Scalar lo, hi;
    int vlo, vhi;
  };
  std::vector<Interval> stack{{-bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound)}};
  while (!stack.empty()) {
    Interval iv = std::move(stack.back());
    stack.pop_back();
    const int count = iv.vlo - iv.vhi;  // roots in (lo, hi]
    if (count == 0) continue;
    if (count == 1 && iv.hi - iv.lo < width_target) {
      const mpq_class scaled = iv.lo.raw() * lead.raw();
      mpz_class base;
      mpz_fdiv_q(base.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      for (int k = 0; k <= 2; ++k) {
        const Scalar cand(mpq_class(base + k, lead.raw().get_num()));
        if (cand > iv.lo && cand <= iv.hi && h(cand).is_zero()) {
          roots.push_back(cand);
          break;
        }
      }
      continue;
    }
    const Scalar mid = (iv.lo + iv.hi) / Scalar(2);
    const int vmid = sign_changes(chain, mid);
    stack.push_back({mid, iv.hi, vmid, iv.vhi});
    stack.push_back({iv.lo, mid, iv.vlo, vmid});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace deloop
