#include "deloop/module.hpp"

#include "deloop/errors.hpp"
#include "deloop/kernels.hpp"

#include <algorithm>

namespace deloop {

Representation::Representation(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dim_(dim) {
  if (!algebra_) throw UsageError("representation without an algebra");
  if (action.size() != algebra_->dim())
    throw UsageError("representation needs " + std::to_string(algebra_->dim()) + " action matrices, got " +
                     std::to_string(action.size()));
  for (const auto& m : action)
    if (m.rows() != dim || m.cols() != dim)
      throw UsageError("action matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
  action_ = std::make_shared<const std::vector<Matrix>>(std::move(action));
}

Matrix Representation::act(const Vector& a) const {
  Matrix out(dim_, dim_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) out += action(i) * a[i];
  return out;
}

RepresentationValidation validate_representation(const Representation& m) {
  RepresentationValidation report;
  const auto& a = *m.algebra();
  if (m.act(a.unit()) != Matrix::identity(m.dim())) report.failures.push_back("unit does not act as the identity");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.action(i) * m.action(j) != m.act(a.product(i, j)))
        report.failures.push_back("action fails on (" + a.basis_labels()[i] + ", " + a.basis_labels()[j] + ")");
  return report;
}

namespace {

void require_same_algebra(const Representation& x, const Representation& y, const char* what) {
  if (!same_algebra(x.algebra(), y.algebra()))
    throw UsageError(std::string(what) + ": modules over different algebras");
}

void require_frame(const Representation& m, const IdempotentFrame& frame) {
  if (!same_algebra(m.algebra(), frame.algebra)) throw UsageError("idempotent frame belongs to a different algebra");
}

// Basis of the subspace spanned by columns, as vectors.
std::vector<Vector> span_basis(const Matrix& m) { return column_space(m).basis(); }

}  // namespace

bool is_module_map(const ModuleMap& f) {
  if (!same_algebra(f.source.algebra(), f.target.algebra())) return false;
  if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim()) return false;
  for (std::size_t i = 0; i < f.source.algebra()->dim(); ++i)
    if (f.matrix * f.source.action(i) != f.target.action(i) * f.matrix) return false;
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.source.dim() != f.target.dim()) throw UsageError("compose: dimension mismatch");
  return {f.source, g.target, g.matrix * f.matrix};
}

ModuleMap identity_map(const Representation& m) { return {m, m, Matrix::identity(m.dim())}; }

Representation zero_module(const AlgebraPtr& a) { return Representation(a, 0, std::vector<Matrix>(a->dim(), Matrix())); }

Representation regular_module(const AlgebraPtr& a) { return Representation(a, a->dim(), a->regular_action()); }

Representation left_module(const Bimodule& n) { return Representation(n.left, n.dim, n.left_action); }

Representation make_M_alpha(const AlgebraPtr& lambda, const Scalar& alpha) {
  const std::vector<std::string> expected{"1", "x", "y", "z", "yx", "zx"};
  if (lambda->basis_labels() != expected) throw UsageError("make_M_alpha: algebra is not a Lambda");
  std::vector<Matrix> action(lambda->dim(), Matrix(3, 3));
  action[0] = Matrix::identity(3);
  action[1](1, 0) = alpha;
  action[2](1, 0) = 1;
  action[3](2, 0) = 1;
  Representation m(lambda, 3, std::move(action));
  if (!validate_representation(m).ok()) throw UsageError("make_M_alpha: algebra is not a Lambda");
  return m;
}

Representation direct_sum(const AlgebraPtr& a, const std::vector<Representation>& parts) {
  std::size_t dim = 0;
  for (const auto& p : parts) {
    if (!same_algebra(a, p.algebra())) throw UsageError("direct_sum: modules over different algebras");
    dim += p.dim();
  }
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(i));
    action.push_back(Matrix::block_diagonal(blocks));
  }
  return Representation(a, dim, std::move(action));
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw UsageError("direct_sum: no summands and no algebra");
  return direct_sum(parts.front().algebra(), parts);
}

Representation change_basis(const Representation& m, const Matrix& q) {
  auto inv = inverse(q);
  if (!inv) throw UsageError("change_basis: matrix is not invertible");
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(*inv * a * q);
  return Representation(m.algebra(), m.dim(), std::move(action));
}

SubQuotient submodule_and_quotient(const Representation& m, const std::vector<Vector>& generators) {
  const auto& a = *m.algebra();
  EchelonBasis span(m.dim());
  std::vector<Vector> frontier;
  for (const auto& g : generators)
    if (span.insert(g)) frontier.push_back(g);
  const auto& gens = a.generators();
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier)
      for (std::size_t g : gens) {
        Vector w = m.action(g) * v;
        if (span.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }

  const std::size_t d = span.dim();
  const auto& basis = span.basis();
  std::vector<Matrix> sub_action;
  for (const auto& act : m.actions()) {
    Matrix s(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      Vector c = span.coordinates(act * basis[k]);
      for (std::size_t r = 0; r < d; ++r) s(r, k) = c[r];
    }
    sub_action.push_back(std::move(s));
  }
  Representation sub(m.algebra(), d, std::move(sub_action));

  QuotientSpace qs = quotient_space(span);
  const std::size_t c = qs.complement.cols();
  std::vector<Matrix> quot_action;
  for (const auto& act : m.actions()) quot_action.push_back(qs.projection * (act * qs.complement));
  Representation quot(m.algebra(), c, std::move(quot_action));

  return {sub, {sub, m, span.as_columns()}, quot, {m, quot, qs.projection}};
}

SubQuotient radical_of_module(const Representation& m) {
  std::vector<Vector> images;
  const auto& rad = m.algebra()->radical();
  for (const auto& r : rad) {
    Matrix act = m.act(r);
    for (auto& v : span_basis(act)) images.push_back(std::move(v));
  }
  return submodule_and_quotient(m, images);
}

Representation kernel_module(const ModuleMap& f, ModuleMap* inclusion) {
  auto sq = submodule_and_quotient(f.source, kernel_basis(f.matrix));
  if (inclusion) *inclusion = sq.inclusion;
  return sq.sub;
}

Representation cokernel_module(const ModuleMap& f, ModuleMap* projection) {
  auto sq = submodule_and_quotient(f.target, f.matrix.columns());
  if (projection) *projection = sq.projection;
  return sq.quot;
}

std::vector<ModuleMap> hom_basis(const Representation& x, const Representation& y) {
  require_same_algebra(x, y, "hom_basis");
  const auto& gens = x.algebra()->generators();
  std::vector<Matrix> ax, ay;
  for (std::size_t g : gens) {
    ax.push_back(x.action(g));
    ay.push_back(y.action(g));
  }
  std::vector<ModuleMap> out;
  if (x.dim() == 0 || y.dim() == 0) return out;
  Matrix system = gens.empty() ? Matrix(0, x.dim() * y.dim()) : kernels::intertwining_system(ax, ay);
  for (const auto& v : kernel_basis(system)) out.push_back({x, y, unflatten(v, y.dim(), x.dim())});
  return out;
}

std::vector<Projective> projective_modules(const IdempotentFrame& frame) {
  const auto& a = *frame.algebra;
  std::vector<Projective> out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    EchelonBasis span = column_space(a.right_mult(frame.idempotents[i]));
    const std::size_t d = span.dim();
    const auto& basis = span.basis();
    std::vector<Matrix> action;
    for (const auto& act : a.regular_action()) {
      Matrix s(d, d);
      for (std::size_t k = 0; k < d; ++k) {
        Vector c = span.coordinates(act * basis[k]);
        for (std::size_t r = 0; r < d; ++r) s(r, k) = c[r];
      }
      action.push_back(std::move(s));
    }
    Projective p;
    p.vertex = i;
    p.module = Representation(frame.algebra, d, std::move(action));
    p.elements = span.as_columns();
    p.generator = span.coordinates(frame.idempotents[i]);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Representation> regular_and_projectives(const IdempotentFrame& frame) {
  std::vector<Representation> out;
  for (auto& p : projective_modules(frame)) out.push_back(p.module);
  return out;
}

std::vector<Representation> simple_modules(const IdempotentFrame& frame) {
  std::vector<Representation> out;
  for (const auto& p : projective_modules(frame)) out.push_back(radical_of_module(p.module).quot);
  return out;
}

ProjectiveCover projective_cover_data(const Representation& m, const IdempotentFrame& frame) {
  require_frame(m, frame);
  const auto& a = m.algebra();
  ProjectiveCover cover;
  if (m.dim() == 0) {
    cover.map = {zero_module(a), m, Matrix(0, 0)};
    cover.elements = Matrix(a->dim(), 0);
    return cover;
  }
  auto rad = radical_of_module(m);
  EchelonBasis chosen(m.dim());
  for (const auto& v : rad.inclusion.matrix.columns()) chosen.insert(v);
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (const auto& w : span_basis(m.act(frame.idempotents[i])))
      if (chosen.insert(w)) {
        cover.vertices.push_back(i);
        cover.tops.push_back(w);
      }

  const auto projectives = projective_modules(frame);
  std::vector<Representation> parts;
  std::vector<Vector> images, elements;
  for (std::size_t s = 0; s < cover.vertices.size(); ++s) {
    const auto& p = projectives[cover.vertices[s]];
    parts.push_back(p.module);
    for (const auto& b : p.elements.columns()) {
      images.push_back(m.act(b) * cover.tops[s]);
      elements.push_back(b);
    }
  }
  Representation big = direct_sum(a, parts);
  cover.map = {big, m, Matrix::from_columns(m.dim(), images)};
  cover.elements = Matrix::from_columns(a->dim(), elements);
  return cover;
}

ModuleMap projective_cover(const Representation& m, const IdempotentFrame& frame) {
  return projective_cover_data(m, frame).map;
}

Representation syzygy(const Representation& m, std::size_t n, const IdempotentFrame& frame) {
  Representation cur = m;
  for (std::size_t k = 0; k < n && cur.dim() > 0; ++k) cur = kernel_module(projective_cover(cur, frame));
  return cur;
}

bool is_projective(const Representation& m, const IdempotentFrame& frame) {
  return projective_cover(m, frame).source.dim() == m.dim();
}

std::vector<ModuleMap> hom_basis(const Representation& x, const Representation& y, const IdempotentFrame& frame) {
  require_same_algebra(x, y, "hom_basis");
  require_frame(x, frame);
  std::vector<ModuleMap> out;
  if (x.dim() == 0 || y.dim() == 0) return out;
  const ProjectiveCover cover = projective_cover_data(x, frame);
  const Matrix& pi = cover.map.matrix;
  const std::size_t dim_p = pi.cols();
  const auto kernel = kernel_basis(pi);

  // Unknowns: coordinates of each y_s in a basis of e_{i_s}·Y.
  const auto projectives = projective_modules(frame);
  std::vector<std::size_t> block_start;  // P-column where block s starts
  std::vector<std::vector<Vector>> targets;
  std::size_t unknowns = 0, col = 0;
  for (std::size_t s = 0; s < cover.vertices.size(); ++s) {
    block_start.push_back(col);
    col += projectives[cover.vertices[s]].module.dim();
    targets.push_back(span_basis(y.act(frame.idempotents[cover.vertices[s]])));
    unknowns += targets.back().size();
  }
  block_start.push_back(dim_p);
  if (unknowns == 0) return out;

  // column_images[u][k] = Y(element of P-basis k) · u-th unknown direction
  std::vector<std::vector<Vector>> column_images;
  std::vector<std::size_t> unknown_block;
  for (std::size_t s = 0; s < targets.size(); ++s)
    for (const auto& t : targets[s]) {
      std::vector<Vector> cols;
      for (std::size_t k = block_start[s]; k < block_start[s + 1]; ++k) cols.push_back(y.act(cover.elements.col(k)) * t);
      column_images.push_back(std::move(cols));
      unknown_block.push_back(s);
    }

  Matrix system(kernel.size() * y.dim(), unknowns);
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t u = 0; u < unknowns; ++u) {
      const std::size_t s = unknown_block[u];
      Vector acc = zero_vector(y.dim());
      for (std::size_t k = block_start[s]; k < block_start[s + 1]; ++k) {
        const Scalar& c = kernel[r][k];
        if (c.is_zero()) continue;
        const Vector& img = column_images[u][k - block_start[s]];
        for (std::size_t t = 0; t < y.dim(); ++t)
          if (!img[t].is_zero()) acc[t] += c * img[t];
      }
      for (std::size_t t = 0; t < y.dim(); ++t) system(r * y.dim() + t, u) = acc[t];
    }

  auto section = solve_linear(pi, Matrix::identity(x.dim()));
  if (!section) throw std::logic_error("hom_basis: projective cover is not surjective");

  std::vector<Vector> flat;
  for (const auto& c : kernel_basis(system)) {
    Matrix phi(y.dim(), dim_p);
    for (std::size_t u = 0; u < unknowns; ++u) {
      if (c[u].is_zero()) continue;
      const std::size_t s = unknown_block[u];
      for (std::size_t k = block_start[s]; k < block_start[s + 1]; ++k) {
        const Vector& img = column_images[u][k - block_start[s]];
        for (std::size_t t = 0; t < y.dim(); ++t)
          if (!img[t].is_zero()) phi(t, k) += c[u] * img[t];
      }
    }
    flat.push_back(flatten(phi * *section));
  }
  for (const auto& v : canonical_span_basis(flat, x.dim() * y.dim()))
    out.push_back({x, y, unflatten(v, y.dim(), x.dim())});
  return out;
}

Representation dual_module(const Representation& m, const AlgebraPtr& opposite_algebra) {
  if (opposite_algebra->dim() != m.algebra()->dim()) throw UsageError("dual_module: wrong opposite algebra");
  std::vector<Matrix> action;
  for (const auto& a : m.actions()) action.push_back(a.transpose());
  return Representation(opposite_algebra, m.dim(), std::move(action));
}

Representation dual_module(const Representation& m) { return dual_module(m, opposite(m.algebra())); }

IdempotentFrame opposite_frame(const IdempotentFrame& frame, const AlgebraPtr& opposite_algebra) {
  return {opposite_algebra, frame.idempotents};
}

ModuleMap injective_envelope(const Representation& m, const IdempotentFrame& frame) {
  require_frame(m, frame);
  const AlgebraPtr op = opposite(m.algebra());
  const ModuleMap cover = projective_cover(dual_module(m, op), opposite_frame(frame, op));
  Representation envelope = dual_module(cover.source, m.algebra());
  return {m, envelope, cover.matrix.transpose()};
}

}  // namespace deloop
