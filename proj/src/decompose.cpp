#include "deloop/errors.hpp"
#include "deloop/linalg.hpp"
#include "deloop/module.hpp"
#include "deloop/polynomial.hpp"

#include <algorithm>
#include <cstdint>

namespace deloop {

namespace {

std::vector<std::size_t> dimension_vector(const Representation& m, const IdempotentFrame& frame) {
  std::vector<std::size_t> out;
  for (const auto& e : frame.idempotents) out.push_back(rank(m.act(e)));
  return out;
}

std::size_t trace_form_rank(const std::vector<ModuleMap>& endos) {
  const std::size_t n = endos.size();
  Matrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      gram(a, b) = trace_of_product(endos[a].matrix, endos[b].matrix);
      gram(b, a) = gram(a, b);
    }
  return rank(gram);
}

// Pairwise sums and differences of basis endomorphisms, then seeded random combinations.
class Candidates {
 public:
  explicit Candidates(const std::vector<ModuleMap>& basis) : basis_(basis) {}

  std::optional<Matrix> next() {
    const std::size_t n = basis_.size();
    if (stage_ == 1) {
      while (i_ + 1 < n) {
        if (j_ >= n) {
          ++i_;
          j_ = i_ + 1;
          continue;
        }
        Matrix sum = basis_[i_].matrix + basis_[j_].matrix;
        if (!minus_) {
          minus_ = true;
          return sum;
        }
        minus_ = false;
        return basis_[i_].matrix - basis_[j_++].matrix;
      }
      stage_ = 2;
      i_ = 0;
    }
    if (i_ >= kRandomTries || n == 0) return std::nullopt;
    ++i_;
    Matrix f = basis_[0].matrix * Scalar(0);
    for (const auto& b : basis_) {
      state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
      long c = static_cast<long>((state_ >> 33) % 11) - 5;
      if (c != 0) f += b.matrix * Scalar(c);
    }
    return f;
  }

 private:
  static constexpr std::size_t kRandomTries = 64;
  const std::vector<ModuleMap>& basis_;
  int stage_ = 1;
  std::size_t i_ = 0, j_ = 1;
  bool minus_ = false;
  std::uint64_t state_ = 0x2545f4914f6cdd1dULL;
};

std::vector<Vector> span_of_images(const Representation& m, const std::vector<Vector>& elements,
                                   const std::vector<Vector>& vectors) {
  std::vector<Vector> out;
  for (const auto& a : elements) {
    const Matrix act = m.act(a);
    for (const auto& v : vectors) out.push_back(act * v);
  }
  return canonical_span_basis(out, m.dim());
}

// Radical and socle series of m, each as a chain of subspaces from m down to 0.
std::vector<std::vector<std::vector<Vector>>> filtrations(const Representation& m) {
  const std::size_t n = m.dim();
  const auto& rad = m.algebra()->radical();
  std::vector<std::vector<Vector>> radical{Matrix::identity(n).columns()};
  while (!radical.back().empty()) {
    auto next = span_of_images(m, rad, radical.back());
    if (next.size() == radical.back().size()) break;
    radical.push_back(std::move(next));
  }
  std::vector<std::vector<Vector>> socle{{}};
  while (socle.back().size() < n) {
    // v with r·v ∈ current for every radical element r
    const auto& cur = socle.back();
    const QuotientSpace q = quotient_space([&] {
      EchelonBasis eb(n);
      for (const auto& v : cur) eb.insert(v);
      return eb;
    }());
    std::vector<Matrix> rows;
    for (const auto& r : rad) rows.push_back(q.projection * m.act(r));
    auto next = rows.empty() ? Matrix::identity(n).columns() : kernel_basis(Matrix::vstack(rows, n));
    if (next.size() == cur.size()) break;
    socle.push_back(std::move(next));
  }
  std::reverse(socle.begin(), socle.end());
  return {radical, socle};
}

// An endomorphism that is singular but not nilpotent, found on a layer e_i·(U/W) of a filtration on which
// End(m) acts through the full matrix algebra: kill a hyperplane and keep a nonzero trace.
std::optional<Matrix> layer_candidate(const Representation& m, const std::vector<ModuleMap>& endos,
                                      const IdempotentFrame& frame) {
  const std::size_t n = m.dim();
  for (const auto& chain : filtrations(m))
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      for (const auto& e : frame.idempotents) {
        const auto upper = span_of_images(m, {e}, chain[k]);
        const auto lower = span_of_images(m, {e}, chain[k + 1]);
        EchelonBasis eb(n);
        for (const auto& v : lower) eb.insert(v);
        std::vector<Vector> reps;
        for (const auto& v : upper)
          if (eb.insert(v)) reps.push_back(v);
        const std::size_t t = reps.size();
        if (t < 2 || endos.size() < t * t) continue;
        std::vector<Vector> all = reps;
        all.insert(all.end(), lower.begin(), lower.end());
        const BasisCoordinates coords(all, n);
        std::vector<Matrix> induced;
        EchelonBasis image(t * t);
        for (const auto& f : endos) {
          Matrix a(t, t);
          for (std::size_t j = 0; j < t; ++j) {
            const Vector c = coords(f.matrix * reps[j]);
            for (std::size_t i = 0; i < t; ++i) a(i, j) = c[i];
          }
          image.insert(flatten(a));
          induced.push_back(std::move(a));
        }
        if (image.dim() != t * t) continue;
        // f kills reps[1..t−1] on the layer
        Matrix system((t - 1) * t, endos.size());
        for (std::size_t a = 0; a < endos.size(); ++a)
          for (std::size_t j = 1; j < t; ++j)
            for (std::size_t i = 0; i < t; ++i) system((j - 1) * t + i, a) = induced[a](i, j);
        for (const auto& sol : kernel_basis(system)) {
          Scalar tr;
          for (std::size_t a = 0; a < endos.size(); ++a)
            if (!sol[a].is_zero()) tr += sol[a] * induced[a](0, 0);
          if (tr.is_zero()) continue;
          Matrix f(n, n);
          for (std::size_t a = 0; a < endos.size(); ++a)
            if (!sol[a].is_zero()) f += endos[a].matrix * sol[a];
          return f;
        }
      }
  return std::nullopt;
}

// Fitting decomposition m = ker g^N ⊕ im g^N for g = f − λ with both parts nonzero.
std::optional<std::pair<std::vector<Vector>, std::vector<Vector>>> fitting_split(const Matrix& f) {
  const Polynomial cp = characteristic_polynomial(f);
  if (distinct_root_count(cp) < 2) return std::nullopt;
  const auto roots = rational_roots(cp);
  if (roots.empty()) return std::nullopt;
  const std::size_t n = f.rows();
  Matrix g = f - Matrix::identity(n) * roots.front();
  Matrix power = g;
  std::size_t r = rank(power);
  for (;;) {
    Matrix next = power * g;
    std::size_t rn = rank(next);
    if (rn == r) break;
    power = std::move(next);
    r = rn;
  }
  auto image = column_space(power).basis();
  auto kernel = kernel_basis(power);
  if (image.empty() || kernel.empty()) return std::nullopt;
  return std::make_pair(std::move(kernel), std::move(image));
}

void split(const Representation& m, const Matrix& into_root, const IdempotentFrame& frame, Decomposition& out) {
  if (m.dim() == 0) return;
  const auto endos = hom_basis(m, m, frame);
  if (trace_form_rank(endos) == 1) {
    out.summands.push_back(m);
    out.inclusions.push_back(into_root);
    return;
  }
  auto recurse = [&](const std::pair<std::vector<Vector>, std::vector<Vector>>& parts) {
    for (const auto* gens : {&parts.first, &parts.second}) {
      auto sq = submodule_and_quotient(m, *gens);
      split(sq.sub, into_root * sq.inclusion.matrix, frame, out);
    }
  };
  for (const auto& f : endos)
    if (auto parts = fitting_split(f.matrix)) return recurse(*parts);
  if (auto f = layer_candidate(m, endos, frame))
    if (auto parts = fitting_split(*f)) return recurse(*parts);
  Candidates candidates(endos);
  while (auto f = candidates.next())
    if (auto parts = fitting_split(*f)) return recurse(*parts);
  throw UnsupportedError("unsupported: non-split End");
}

}  // namespace

std::size_t Decomposition::class_count() const {
  std::size_t c = 0;
  for (std::size_t k : iso_class) c = std::max(c, k + 1);
  return c;
}

std::vector<std::size_t> Decomposition::multiplicities() const {
  std::vector<std::size_t> out(class_count());
  for (std::size_t k : iso_class) ++out[k];
  return out;
}

std::size_t endomorphism_top_dim(const Representation& m, const IdempotentFrame& frame) {
  if (m.dim() == 0) return 0;
  return trace_form_rank(hom_basis(m, m, frame));
}

bool is_indecomposable(const Representation& m, const IdempotentFrame& frame) {
  return endomorphism_top_dim(m, frame) == 1;
}

std::optional<ModuleMap> indecomposable_iso(const Representation& u, const Representation& v,
                                            const IdempotentFrame& frame) {
  if (u.dim() != v.dim()) return std::nullopt;
  if (u.dim() == 0) return ModuleMap{u, v, Matrix()};
  if (dimension_vector(u, frame) != dimension_vector(v, frame)) return std::nullopt;
  for (auto& f : hom_basis(u, v, frame))
    if (is_invertible(f.matrix)) return std::move(f);
  return std::nullopt;
}

Decomposition decompose(const Representation& m, const IdempotentFrame& frame) {
  Decomposition d;
  split(m, Matrix::identity(m.dim()), frame, d);
  std::vector<std::size_t> representatives;
  for (std::size_t s = 0; s < d.summands.size(); ++s) {
    std::size_t cls = representatives.size();
    for (std::size_t c = 0; c < representatives.size(); ++c)
      if (indecomposable_iso(d.summands[representatives[c]], d.summands[s], frame)) {
        cls = c;
        break;
      }
    if (cls == representatives.size()) representatives.push_back(s);
    d.iso_class.push_back(cls);
  }
  return d;
}

std::optional<ModuleMap> match_decompositions(const Decomposition& du, const Representation& u,
                                              const Decomposition& dv, const Representation& v,
                                              const IdempotentFrame& frame) {
  if (du.summands.size() != dv.summands.size() || u.dim() != v.dim()) return std::nullopt;
  const std::size_t n = du.summands.size();
  std::vector<bool> used(n, false);
  std::vector<std::pair<std::size_t, Matrix>> matched(n);
  for (std::size_t s = 0; s < n; ++s) {
    bool found = false;
    for (std::size_t t = 0; t < n && !found; ++t) {
      if (used[t]) continue;
      if (auto iso = indecomposable_iso(du.summands[s], dv.summands[t], frame)) {
        used[t] = true;
        matched[s] = {t, iso->matrix};
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  Matrix f(v.dim(), u.dim());
  if (u.dim() > 0) {
    const Matrix qinv = *inverse(Matrix::hstack(du.inclusions, u.dim()));
    std::size_t row = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t d = du.summands[s].dim();
      const Matrix proj = qinv.block(row, 0, d, u.dim());
      f += dv.inclusions[matched[s].first] * (matched[s].second * proj);
      row += d;
    }
  }
  return ModuleMap{u, v, std::move(f)};
}

std::optional<ModuleMap> is_isomorphic(const Representation& u, const Representation& v,
                                       const IdempotentFrame& frame) {
  if (!same_algebra(u.algebra(), v.algebra())) throw UsageError("is_isomorphic: modules over different algebras");
  if (u.dim() != v.dim() || dimension_vector(u, frame) != dimension_vector(v, frame)) return std::nullopt;
  if (u.dim() == 0) return ModuleMap{u, v, Matrix()};
  return match_decompositions(decompose(u, frame), u, decompose(v, frame), v, frame);
}

std::optional<std::pair<ModuleMap, ModuleMap>> split_summand(const Representation& x, const Representation& y,
                                                             const IdempotentFrame& frame) {
  if (x.dim() > y.dim()) return std::nullopt;
  const auto into = hom_basis(x, y, frame);
  if (into.empty()) return std::nullopt;
  const auto back = hom_basis(y, x, frame);
  for (const auto& g : back)
    for (const auto& f : into) {
      auto inv = inverse(g.matrix * f.matrix);
      if (!inv) continue;
      return std::make_pair(f, ModuleMap{y, x, *inv * g.matrix});
    }
  return std::nullopt;
}

StableSummand stable_summand(const Decomposition& dx, const Representation& y, const IdempotentFrame& frame) {
  StableSummand result;
  result.x_parts = dx;
  Representation rest = y;
  Matrix rest_inclusion = Matrix::identity(y.dim());
  std::vector<std::size_t> split;
  std::vector<Matrix> sections;  // into y
  for (std::size_t s = 0; s < dx.summands.size(); ++s) {
    const Representation& xs = dx.summands[s];
    if (is_projective(xs, frame)) continue;
    auto pair = split_summand(xs, rest, frame);
    if (!pair) return result;
    sections.push_back(rest_inclusion * pair->first.matrix);
    split.push_back(s);
    ModuleMap kernel_inclusion;
    rest = kernel_module(pair->second, &kernel_inclusion);
    rest_inclusion = rest_inclusion * kernel_inclusion.matrix;
  }
  // y = ⊕ im(section_s) ⊕ rest; the retractions are the block rows of the inverse basis change.
  std::vector<Matrix> columns = sections;
  columns.push_back(rest_inclusion);
  const Matrix qinv = *inverse(Matrix::hstack(columns, y.dim()));
  std::size_t row = 0;
  for (std::size_t k = 0; k < split.size(); ++k) {
    const Representation& xs = dx.summands[split[k]];
    SplitPair pair;
    pair.summand = split[k];
    pair.section = {xs, y, sections[k]};
    pair.retraction = {y, xs, qinv.block(row, 0, xs.dim(), y.dim())};
    row += xs.dim();
    result.pairs.push_back(std::move(pair));
  }
  result.holds = true;
  return result;
}

StableSummand stable_summand(const Representation& x, const Representation& y, const IdempotentFrame& frame) {
  return stable_summand(decompose(x, frame), y, frame);
}

Torsionless torsionless(const Representation& m, const IdempotentFrame& frame) {
  Torsionless result;
  const auto projectives = regular_and_projectives(frame);
  EchelonBasis rows(m.dim());
  std::vector<Matrix> chosen;
  std::vector<Representation> targets;
  for (std::size_t i = 0; i < projectives.size() && rows.dim() < m.dim(); ++i)
    for (const auto& f : hom_basis(m, projectives[i], frame)) {
      bool useful = false;
      for (std::size_t r = 0; r < f.matrix.rows(); ++r)
        if (rows.insert(f.matrix.row(r))) useful = true;
      if (useful) {
        chosen.push_back(f.matrix);
        targets.push_back(projectives[i]);
        result.vertices.push_back(i);
      }
      if (rows.dim() == m.dim()) break;
    }
  result.kernel_dim = m.dim() - rows.dim();
  result.holds = result.kernel_dim == 0;
  if (result.holds) {
    Representation target = direct_sum(m.algebra(), targets);
    result.embedding = ModuleMap{m, target, Matrix::vstack(chosen, m.dim())};
  }
  return result;
}

}  // namespace deloop
