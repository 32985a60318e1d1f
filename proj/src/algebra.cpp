#include "deloop/algebra.hpp"

#include "deloop/errors.hpp"
#include "deloop/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace deloop {

namespace {

void accumulate(Vector& out, const Scalar& c, const Vector& v) {
  if (c.is_zero()) return;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] += c * v[k];
}

std::string label_or_index(const std::vector<std::string>& labels, std::size_t i, const std::string& fallback) {
  if (i < labels.size()) return labels[i];
  return fallback + std::to_string(i);
}

}  // namespace

FinDimAlgebra::FinDimAlgebra(std::string name, std::vector<std::string> basis_labels, Vector unit,
                             std::vector<Vector> table)
    : name_(std::move(name)), labels_(std::move(basis_labels)), unit_(std::move(unit)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (unit_.size() != n) throw UsageError("algebra '" + name_ + "': unit has wrong length");
  if (table_.size() != n * n) throw UsageError("algebra '" + name_ + "': table has wrong size");
  for (const auto& v : table_)
    if (v.size() != n) throw UsageError("algebra '" + name_ + "': table entry has wrong length");
}

std::size_t FinDimAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw UsageError("algebra '" + name_ + "' has no basis element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Vector FinDimAlgebra::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      accumulate(out, a[i] * b[j], product(i, j));
    }
  }
  return out;
}

Matrix FinDimAlgebra::left_mult(const Vector& a) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) m(k, j) += a[i] * p[k];
    }
  }
  return m;
}

Matrix FinDimAlgebra::right_mult(const Vector& a) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& p = product(j, i);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) m(k, j) += a[i] * p[k];
    }
  }
  return m;
}

const std::vector<Matrix>& FinDimAlgebra::regular_action() const {
  std::call_once(regular_once_, [this] {
    regular_.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) regular_.push_back(left_mult(basis_vector(i)));
  });
  return regular_;
}

const std::vector<std::size_t>& FinDimAlgebra::generators() const {
  std::call_once(generators_once_, [this] {
    const auto& reg = regular_action();
    EchelonBasis span(dim());
    span.insert(unit_);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (span.contains(basis_vector(i))) continue;
      generators_.push_back(i);
      // close the span under left multiplication by the chosen generators
      std::vector<Vector> frontier = span.basis();
      while (!frontier.empty()) {
        std::vector<Vector> next;
        for (const auto& v : frontier)
          for (std::size_t g : generators_) {
            Vector w = reg[g] * v;
            if (span.insert(w)) next.push_back(std::move(w));
          }
        frontier = std::move(next);
      }
    }
  });
  return generators_;
}

const std::vector<Vector>& FinDimAlgebra::radical() const {
  std::call_once(radical_once_, [this] {
    const std::size_t n = dim();
    const auto& reg = regular_action();
    Vector tau(n);
    for (std::size_t l = 0; l < n; ++l) tau[l] = reg[l].trace();
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector& p = product(i, j);
        Scalar t;
        for (std::size_t l = 0; l < n; ++l)
          if (!p[l].is_zero() && !tau[l].is_zero()) t += p[l] * tau[l];
        gram(i, j) = t;
      }
    EchelonBasis j(n);
    for (auto& v : kernel_basis(gram)) j.insert(v);
    radical_ = j.basis();
  });
  return radical_;
}

AlgebraPtr make_algebra(std::string name, std::vector<std::string> basis_labels, Vector unit,
                        std::vector<Vector> table) {
  return std::make_shared<const FinDimAlgebra>(std::move(name), std::move(basis_labels), std::move(unit),
                                               std::move(table));
}

bool same_structure(const FinDimAlgebra& a, const FinDimAlgebra& b) {
  if (a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.product(i, j) != b.product(i, j)) return false;
  return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_structure(*a, *b);
}

AlgebraValidation validate_algebra(const FinDimAlgebra& a) {
  AlgebraValidation report;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = zero_vector(n);
        for (std::size_t l = 0; l < n; ++l) accumulate(left, ij[l], a.product(l, k));
        Vector right = zero_vector(n);
        const Vector& jk = a.product(j, k);
        for (std::size_t l = 0; l < n; ++l) accumulate(right, jk[l], a.product(i, l));
        if (left != right) report.associativity_failures.push_back({i, j, k});
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector b = a.basis_vector(i);
    if (a.multiply(a.unit(), b) != b || a.multiply(b, a.unit()) != b) report.unit_failures.push_back(i);
  }
  return report;
}

BimoduleValidation validate_bimodule(const Bimodule& n) {
  BimoduleValidation report;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };
  if (!n.left || !n.right) {
    fail("bimodule is missing an algebra");
    return report;
  }
  const auto& l = *n.left;
  const auto& r = *n.right;
  if (n.left_action.size() != l.dim()) fail("left action has " + std::to_string(n.left_action.size()) + " matrices, expected " + std::to_string(l.dim()));
  if (n.right_action.size() != r.dim()) fail("right action has " + std::to_string(n.right_action.size()) + " matrices, expected " + std::to_string(r.dim()));
  if (!report.ok()) return report;
  for (const auto* acts : {&n.left_action, &n.right_action})
    for (const auto& m : *acts)
      if (m.rows() != n.dim || m.cols() != n.dim) {
        fail("action matrix is not " + std::to_string(n.dim) + "x" + std::to_string(n.dim));
        return report;
      }

  auto combine = [&](const std::vector<Matrix>& acts, const Vector& c) {
    Matrix m(n.dim, n.dim);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) m += acts[i] * c[i];
    return m;
  };
  if (combine(n.left_action, l.unit()) != Matrix::identity(n.dim)) fail("left action is not unital");
  if (combine(n.right_action, r.unit()) != Matrix::identity(n.dim)) fail("right action is not unital");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (n.left_action[i] * n.left_action[j] != combine(n.left_action, l.product(i, j)))
        fail("left action fails on (" + l.basis_labels()[i] + ", " + l.basis_labels()[j] + ")");
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (n.right_action[j] * n.right_action[i] != combine(n.right_action, r.product(i, j)))
        fail("right action fails on (" + r.basis_labels()[i] + ", " + r.basis_labels()[j] + ")");
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < r.dim(); ++j)
      if (n.left_action[i] * n.right_action[j] != n.right_action[j] * n.left_action[i])
        fail("actions of " + l.basis_labels()[i] + " and " + r.basis_labels()[j] + " do not commute");
  return report;
}

Bimodule dual_bimodule(const Bimodule& n) {
  Bimodule d;
  d.left = n.right;
  d.right = n.left;
  d.dim = n.dim;
  for (const auto& m : n.right_action) d.left_action.push_back(m.transpose());
  for (const auto& m : n.left_action) d.right_action.push_back(m.transpose());
  for (std::size_t i = 0; i < n.labels.size(); ++i) d.labels.push_back(n.labels[i] + "*");
  return d;
}

AlgebraPtr corner_algebra(const AlgebraPtr& a, const Vector& e) {
  const std::size_t n = a->dim();
  EchelonBasis span(n);
  for (std::size_t i = 0; i < n; ++i) span.insert(a->multiply(a->multiply(e, a->basis_vector(i)), e));
  const auto& basis = span.basis();
  BasisCoordinates coords(basis, n);
  std::vector<std::string> labels;
  for (std::size_t p : span.pivots()) labels.push_back(a->basis_labels()[p]);
  std::vector<Vector> table;
  for (const auto& u : basis)
    for (const auto& v : basis) table.push_back(coords(a->multiply(u, v)));
  auto unit = coords.try_coordinates(e);
  if (!unit) throw UsageError("corner algebra: e is not in eAe");
  return make_algebra(a->name() + "[corner]", std::move(labels), std::move(*unit), std::move(table));
}

FrameValidation validate_frame(const IdempotentFrame& frame) {
  FrameValidation report;
  const auto& a = *frame.algebra;
  const auto& es = frame.idempotents;
  Vector sum = zero_vector(a.dim());
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].size() != a.dim()) {
      report.failures.push_back("idempotent " + std::to_string(i) + " has wrong length");
      return report;
    }
    sum = add(sum, es[i]);
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (is_zero(es[i])) report.failures.push_back("e" + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < es.size(); ++j) {
      Vector p = a.multiply(es[i], es[j]);
      if (i == j && p != es[i]) report.failures.push_back("e" + std::to_string(i + 1) + " is not idempotent");
      if (i != j && !is_zero(p))
        report.failures.push_back("e" + std::to_string(i + 1) + "·e" + std::to_string(j + 1) + " is not zero");
    }
  }
  if (sum != a.unit()) report.failures.push_back("idempotents do not sum to the unit");
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (!is_local(*corner_algebra(frame.algebra, es[i])))
      report.failures.push_back("e" + std::to_string(i + 1) + " is not primitive");
  return report;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  std::vector<Vector> table;
  table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(a->product(j, i));
  std::string name = a->name();
  if (name.size() > 3 && name.ends_with("^op"))
    name.resize(name.size() - 3);
  else if (name != "k")
    name += "^op";
  return make_algebra(std::move(name), a->basis_labels(), a->unit(), std::move(table));
}

AlgebraPtr ground_field() {
  static const AlgebraPtr k = make_algebra("k", {"1"}, {Scalar(1)}, {{Scalar(1)}});
  return k;
}

AlgebraPtr product_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t na = a->dim(), nb = b->dim(), n = na + nb;
  std::vector<std::string> labels;
  for (const auto& l : a->basis_labels()) labels.push_back("1:" + l);
  for (const auto& l : b->basis_labels()) labels.push_back("2:" + l);
  Vector unit = a->unit();
  unit.insert(unit.end(), b->unit().begin(), b->unit().end());
  std::vector<Vector> table(n * n, zero_vector(n));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) std::copy(a->product(i, j).begin(), a->product(i, j).end(), table[i * n + j].begin());
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      std::copy(b->product(i, j).begin(), b->product(i, j).end(), table[(na + i) * n + na + j].begin() + na);
  return make_algebra(a->name() + "x" + b->name(), std::move(labels), std::move(unit), std::move(table));
}

std::vector<Vector> product_span(const FinDimAlgebra& a, const std::vector<Vector>& first,
                                 const std::vector<Vector>& second) {
  EchelonBasis span(a.dim());
  for (const auto& x : first)
    for (const auto& y : second) span.insert(a.multiply(x, y));
  return span.basis();
}

std::vector<std::size_t> radical_power_dims(const FinDimAlgebra& a) {
  std::vector<std::size_t> dims;
  std::vector<Vector> power = a.radical();
  dims.push_back(power.size());
  while (!power.empty()) {
    auto next = product_span(a, power, a.radical());
    if (next.size() == power.size()) throw UsageError("radical of '" + a.name() + "' is not nilpotent");
    power = std::move(next);
    dims.push_back(power.size());
  }
  return dims;
}

std::size_t center_dimension(const FinDimAlgebra& a) {
  const std::size_t n = a.dim();
  const auto& gens = a.generators();
  if (gens.empty()) return n;
  std::vector<Matrix> blocks;
  for (std::size_t g : gens) blocks.push_back(a.right_mult(a.basis_vector(g)) - a.left_mult(a.basis_vector(g)));
  return n - rank(Matrix::vstack(blocks, n));
}

bool is_commutative(const FinDimAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

bool is_local(const FinDimAlgebra& a) { return a.dim() == a.radical().size() + 1; }

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const std::vector<Vector>& ideal) {
  const std::size_t n = a->dim();
  EchelonBasis sub(n);
  for (const auto& v : ideal) sub.insert(v);
  QuotientSpace space = quotient_space(sub);
  const std::size_t c = space.complement.cols();
  std::vector<std::string> labels;
  std::vector<Vector> lifts = space.complement.columns();
  for (const auto& v : lifts)
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) {
        labels.push_back(a->basis_labels()[k]);
        break;
      }
  std::vector<Vector> table;
  table.reserve(c * c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) table.push_back(space.projection * a->multiply(lifts[i], lifts[j]));
  Vector unit = space.projection * a->unit();
  return {make_algebra(a->name() + "/I", std::move(labels), std::move(unit), std::move(table)), std::move(space)};
}

AlgebraPtr algebra_from_matrices(std::string name, std::vector<std::string> labels, const std::vector<Matrix>& basis) {
  if (basis.empty()) throw UsageError("algebra_from_matrices: empty basis");
  const std::size_t rows = basis.front().rows();
  std::vector<Vector> flat;
  for (const auto& m : basis) {
    if (m.rows() != rows || m.cols() != rows) throw UsageError("algebra_from_matrices: matrices must be square of equal size");
    flat.push_back(flatten(m));
  }
  BasisCoordinates coords(flat, rows * rows);
  auto unit = coords.try_coordinates(flatten(Matrix::identity(rows)));
  if (!unit) throw UsageError("algebra_from_matrices: identity is not in the span");
  std::vector<Vector> table;
  for (const auto& x : basis)
    for (const auto& y : basis) {
      auto c = coords.try_coordinates(flatten(x * y));
      if (!c) throw UsageError("algebra_from_matrices: span is not closed under multiplication");
      table.push_back(std::move(*c));
    }
  if (labels.empty())
    for (std::size_t i = 0; i < basis.size(); ++i) labels.push_back("m" + std::to_string(i));
  return make_algebra(std::move(name), std::move(labels), std::move(*unit), std::move(table));
}

namespace {

// Idempotent in A lifted from e with e² − e nilpotent.
Vector lift_idempotent(const FinDimAlgebra& a, Vector e) {
  for (;;) {
    Vector e2 = a.multiply(e, e);
    if (e2 == e) return e;
    Vector e3 = a.multiply(e2, e);
    Vector next = zero_vector(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) next[k] = Scalar(3) * e2[k] - Scalar(2) * e3[k];
    e = std::move(next);
  }
}

std::vector<Vector> candidate_elements(std::size_t n, std::size_t round) {
  std::vector<Vector> out;
  if (round == 0) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
    Vector lin(n), sq(n);
    for (std::size_t i = 0; i < n; ++i) {
      lin[i] = Scalar(static_cast<long>(i + 1));
      sq[i] = Scalar(static_cast<long>((i + 1) * (i + 1)));
    }
    out.push_back(lin);
    out.push_back(sq);
    return out;
  }
  // deterministic pseudo-random integer combinations
  std::uint64_t state = 0x9e3779b97f4a7c15ULL * round;
  for (int t = 0; t < 8; ++t) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      v[i] = Scalar(static_cast<long>((state >> 33) % 41) - 20);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

IdempotentFrame primitive_idempotents(const AlgebraPtr& a) {
  const std::size_t n = a->dim();
  QuotientAlgebra q = quotient_algebra(a, a->radical());
  const auto& s = *q.algebra;
  const std::size_t r = s.dim();
  if (!is_commutative(s)) throw UnsupportedError("unsupported: non-split algebra");

  std::vector<Vector> quotient_idempotents;
  if (r == 1) {
    quotient_idempotents.push_back(s.unit());
  } else {
    std::optional<Vector> z;
    std::vector<Scalar> roots;
    for (std::size_t round = 0; round < 8 && !z; ++round)
      for (const auto& cand : candidate_elements(r, round)) {
        Polynomial cp = characteristic_polynomial(s.left_mult(cand));
        auto rr = rational_roots(cp);
        if (static_cast<int>(rr.size()) < distinct_root_count(cp))
          throw UnsupportedError("unsupported: non-split algebra");
        if (rr.size() == r) {
          z = cand;
          roots = std::move(rr);
          break;
        }
      }
    if (!z) throw UnsupportedError("unsupported: non-split algebra");
    for (std::size_t i = 0; i < r; ++i) {
      Vector f = s.unit();
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i) continue;
        Vector shifted = *z;
        for (std::size_t k = 0; k < r; ++k) shifted[k] -= roots[j] * s.unit()[k];
        f = scale(s.multiply(f, shifted), (roots[i] - roots[j]).inverse());
      }
      quotient_idempotents.push_back(std::move(f));
    }
  }

  std::vector<Vector> lifted;
  Vector rest = a->unit();
  for (std::size_t i = 0; i + 1 < quotient_idempotents.size(); ++i) {
    Vector pre = q.space.complement * quotient_idempotents[i];
    Vector sandwiched = a->multiply(a->multiply(rest, pre), rest);
    Vector e = lift_idempotent(*a, std::move(sandwiched));
    for (std::size_t k = 0; k < n; ++k) rest[k] -= e[k];
    lifted.push_back(std::move(e));
  }
  lifted.push_back(rest);

  auto first_nonzero = [](const Vector& v) {
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); }) - v.begin());
  };
  std::stable_sort(lifted.begin(), lifted.end(),
                   [&](const Vector& x, const Vector& y) { return first_nonzero(x) < first_nonzero(y); });
  return {a, std::move(lifted)};
}

IdempotentFrame triangular_frame(const AlgebraPtr& a) {
  const auto& sizes = a->block_sizes();
  if (sizes.size() != 3) throw UsageError("algebra '" + a->name() + "' is not a triangular algebra");
  Vector e1 = a->unit(), e2 = a->unit();
  for (std::size_t k = sizes[0]; k < a->dim(); ++k) e1[k] = 0;
  for (std::size_t k = 0; k < sizes[0] + sizes[1]; ++k) e2[k] = 0;
  return {a, {std::move(e1), std::move(e2)}};
}

AlgebraPtr triangular_algebra(const AlgebraPtr& r, const AlgebraPtr& s, const Bimodule& n,
                              Orientation orientation, std::string name) {
  if (!same_algebra(n.left, s) || !same_algebra(n.right, r))
    throw UsageError("triangular_algebra: bimodule must be an (S, R)-bimodule");
  const bool lower = orientation == Orientation::lower;
  const AlgebraPtr& first = lower ? r : s;
  const AlgebraPtr& last = lower ? s : r;
  const std::size_t nf = first->dim(), nn = n.dim, nl = last->dim(), dim = nf + nn + nl;
  const std::size_t off_n = nf, off_l = nf + nn;

  std::vector<std::string> labels;
  const std::string corner = lower ? "21:" : "12:";
  for (const auto& l : first->basis_labels()) labels.push_back("11:" + l);
  for (std::size_t i = 0; i < nn; ++i) labels.push_back(corner + label_or_index(n.labels, i, "n"));
  for (const auto& l : last->basis_labels()) labels.push_back("22:" + l);

  Vector unit = zero_vector(dim);
  std::copy(first->unit().begin(), first->unit().end(), unit.begin());
  std::copy(last->unit().begin(), last->unit().end(), unit.begin() + off_l);

  // (r, n, s)(r', n', s') = (rr', n·r' + s·n', ss'); upper is the same with the corners exchanged
  const FinDimAlgebra& ra = *r;
  const FinDimAlgebra& sa = *s;
  const std::size_t off_r = lower ? 0 : off_l, off_s = lower ? off_l : 0;
  std::vector<Vector> table(dim * dim, zero_vector(dim));
  auto at = [&](std::size_t i, std::size_t j) -> Vector& { return table[i * dim + j]; };
  for (std::size_t i = 0; i < ra.dim(); ++i)
    for (std::size_t j = 0; j < ra.dim(); ++j)
      std::copy(ra.product(i, j).begin(), ra.product(i, j).end(), at(off_r + i, off_r + j).begin() + off_r);
  for (std::size_t i = 0; i < sa.dim(); ++i)
    for (std::size_t j = 0; j < sa.dim(); ++j)
      std::copy(sa.product(i, j).begin(), sa.product(i, j).end(), at(off_s + i, off_s + j).begin() + off_s);
  for (std::size_t v = 0; v < nn; ++v) {
    for (std::size_t j = 0; j < ra.dim(); ++j)
      for (std::size_t k = 0; k < nn; ++k) at(off_n + v, off_r + j)[off_n + k] = n.right_action[j](k, v);
    for (std::size_t i = 0; i < sa.dim(); ++i)
      for (std::size_t k = 0; k < nn; ++k) at(off_s + i, off_n + v)[off_n + k] = n.left_action[i](k, v);
  }
  auto alg = std::make_shared<FinDimAlgebra>(std::move(name), std::move(labels), std::move(unit), std::move(table));
  alg->set_block_sizes({nf, nn, nl});
  return alg;
}

IsoCheck verify_explicit_iso(const FinDimAlgebra& source, const FinDimAlgebra& target, const Matrix& map) {
  IsoCheck check;
  const std::size_t n = source.dim();
  if (target.dim() != n || map.rows() != n || map.cols() != n) {
    check.failure = "dimension mismatch";
    return check;
  }
  if (!is_invertible(map)) {
    check.failure = "map is not bijective";
    return check;
  }
  if (map * source.unit() != target.unit()) {
    check.failure = "unit is not preserved";
    return check;
  }
  std::vector<Vector> images = map.columns();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++check.pairs_checked;
      if (map * source.product(i, j) != target.multiply(images[i], images[j])) {
        check.failure = "not multiplicative on (" + source.basis_labels()[i] + ", " + source.basis_labels()[j] + ")";
        return check;
      }
    }
  check.ok = true;
  return check;
}

AlgebraIso swap_iso(const AlgebraPtr& r, const AlgebraPtr& s, const Bimodule& n, std::string upper_name,
                    std::string lower_name) {
  AlgebraIso iso;
  iso.source = triangular_algebra(r, s, n, Orientation::upper, std::move(upper_name));
  iso.target = triangular_algebra(r, s, n, Orientation::lower, std::move(lower_name));
  const std::size_t ns = s->dim(), nn = n.dim, nr = r->dim(), dim = ns + nn + nr;
  // upper basis (S, N, R) ↦ lower basis (R, N, S)
  iso.map = Matrix(dim, dim);
  for (std::size_t i = 0; i < ns; ++i) iso.map(nr + nn + i, i) = 1;
  for (std::size_t i = 0; i < nn; ++i) iso.map(nr + i, ns + i) = 1;
  for (std::size_t i = 0; i < nr; ++i) iso.map(i, ns + nn + i) = 1;
  IsoCheck check = verify_explicit_iso(*iso.source, *iso.target, iso.map);
  iso.pairs_checked = check.pairs_checked;
  iso.verified = check.ok;
  if (!check.ok) throw std::logic_error("swap_iso: " + check.failure);
  return iso;
}

std::vector<std::vector<std::size_t>> block_dims(const IdempotentFrame& frame) {
  const auto& a = *frame.algebra;
  std::vector<std::vector<std::size_t>> dims(frame.size(), std::vector<std::size_t>(frame.size()));
  for (std::size_t i = 0; i < frame.size(); ++i) {
    Matrix left = a.left_mult(frame.idempotents[i]);
    for (std::size_t j = 0; j < frame.size(); ++j) dims[i][j] = rank(left * a.right_mult(frame.idempotents[j]));
  }
  return dims;
}

}  // namespace deloop
