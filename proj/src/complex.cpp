#include "deloop/complex.hpp"

#include "deloop/errors.hpp"
#include "deloop/parallel.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace deloop {

Representation ProjComplex::term(int degree) const {
  auto it = terms.find(degree);
  return it == terms.end() ? zero_module(algebra) : it->second;
}

Matrix ProjComplex::differential(int degree) const {
  auto it = differentials.find(degree);
  if (it != differentials.end()) return it->second;
  return Matrix(term(degree + 1).dim(), term(degree).dim());
}

std::vector<int> ProjComplex::support() const {
  std::vector<int> out;
  for (const auto& [d, m] : terms)
    if (m.dim() > 0) out.push_back(d);
  return out;
}

ProjComplex make_complex(AlgebraPtr algebra, std::map<int, Representation> terms, std::map<int, Matrix> differentials,
                         std::vector<SummandBlock> summands) {
  ProjComplex t{std::move(algebra), std::move(terms), std::move(differentials), std::move(summands)};
  for (const auto& [d, m] : t.terms)
    if (!same_algebra(m.algebra(), t.algebra)) throw UsageError("complex term " + std::to_string(d) + " is over a different algebra");
  for (const auto& [d, f] : t.differentials) {
    const Representation src = t.term(d), tgt = t.term(d + 1);
    if (f.rows() != tgt.dim() || f.cols() != src.dim())
      throw UsageError("differential " + std::to_string(d) + " has the wrong shape");
    if (!is_module_map({src, tgt, f})) throw UsageError("differential " + std::to_string(d) + " is not a module map");
    auto next = t.differentials.find(d + 1);
    if (next != t.differentials.end() && !(next->second * f).is_zero())
      throw UsageError("d^" + std::to_string(d + 1) + " ∘ d^" + std::to_string(d) + " is not zero");
  }
  return t;
}

void require_projective_terms(const ProjComplex& t, const IdempotentFrame& frame) {
  for (const auto& [d, m] : t.terms)
    if (!is_projective(m, frame)) throw UsageError("complex term " + std::to_string(d) + " is not projective");
}

ProjComplex stalk_complex(const Representation& p, int degree, std::string label) {
  ProjComplex t;
  t.algebra = p.algebra();
  t.terms.emplace(degree, p);
  t.summands.push_back({std::move(label), {{degree, {0, p.dim()}}}});
  return t;
}

ProjComplex direct_sum(const std::vector<ProjComplex>& parts) {
  if (parts.empty()) throw UsageError("direct_sum: no complexes");
  ProjComplex out;
  out.algebra = parts.front().algebra;
  std::set<int> degrees;
  for (const auto& p : parts)
    for (const auto& [d, m] : p.terms) degrees.insert(d);
  std::map<int, std::size_t> offset;
  for (int d : degrees) {
    std::vector<Representation> pieces;
    for (const auto& p : parts) pieces.push_back(p.term(d));
    out.terms.emplace(d, deloop::direct_sum(out.algebra, pieces));
    offset[d] = 0;
  }
  for (int d : degrees) {
    if (!degrees.count(d + 1)) continue;
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.differential(d));
    Matrix diff = Matrix::block_diagonal(blocks);
    if (!diff.is_zero()) out.differentials.emplace(d, std::move(diff));
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    std::vector<SummandBlock> blocks = p.summands;
    if (blocks.empty()) {
      SummandBlock whole{"summand " + std::to_string(k + 1), {}};
      for (const auto& [d, m] : p.terms) whole.ranges[d] = {0, m.dim()};
      blocks.push_back(std::move(whole));
    }
    for (auto& b : blocks) {
      for (auto& [d, r] : b.ranges) r = {r.first + offset[d], r.second + offset[d]};
      out.summands.push_back(std::move(b));
    }
    for (const auto& [d, m] : p.terms) offset[d] += m.dim();
  }
  return out;
}

ProjComplex shift(const ProjComplex& t, int j) {
  ProjComplex out;
  out.algebra = t.algebra;
  for (const auto& [d, m] : t.terms) out.terms.emplace(d - j, m);
  for (const auto& [d, f] : t.differentials) out.differentials.emplace(d - j, f);
  for (const auto& b : t.summands) {
    SummandBlock s{b.label, {}};
    for (const auto& [d, r] : b.ranges) s.ranges[d - j] = r;
    out.summands.push_back(std::move(s));
  }
  return out;
}

namespace {

Matrix component_or_zero(const ChainMap& f, int degree) {
  auto it = f.components.find(degree);
  if (it != f.components.end()) return it->second;
  return Matrix(f.target.term(degree + f.shift).dim(), f.source.term(degree).dim());
}

std::set<int> all_degrees(const ProjComplex& t) {
  std::set<int> out;
  for (const auto& [d, m] : t.terms) out.insert(d);
  return out;
}

}  // namespace

bool is_chain_map(const ChainMap& f) {
  std::set<int> degrees = all_degrees(f.source);
  for (int d : std::set<int>(degrees)) degrees.insert(d - 1);
  for (int i : degrees) {
    const Matrix fi = component_or_zero(f, i), fn = component_or_zero(f, i + 1);
    const Matrix left = f.target.differential(i + f.shift) * fi;
    const Matrix right = fn * f.source.differential(i);
    if (left != right) return false;
  }
  for (const auto& [d, c] : f.components)
    if (!is_module_map({f.source.term(d), f.target.term(d + f.shift), c})) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  ChainMap out{f.source, g.target, f.shift + g.shift, {}};
  for (const auto& [d, c] : f.components) {
    Matrix gc = component_or_zero(g, d + f.shift) * c;
    if (!gc.empty()) out.components.emplace(d, std::move(gc));
  }
  return out;
}

HomotopyHom::HomotopyHom(const ProjComplex& t1, const ProjComplex& t2, int shift) : t1_(t1), t2_(t2), shift_(shift) {
  if (!same_algebra(t1.algebra, t2.algebra)) throw UsageError("hom_homotopy: complexes over different algebras");
  for (int i : t1.support()) {
    const Representation tgt = t2.term(i + shift);
    if (tgt.dim() == 0) continue;
    auto homs = hom_basis(t1.term(i), tgt);
    if (homs.empty()) continue;
    std::vector<Vector> flat;
    for (const auto& h : homs) flat.push_back(flatten(h.matrix));
    degrees_.push_back(i);
    offsets_.push_back(unknowns_);
    unknowns_ += homs.size();
    hom_coords_.emplace_back(std::move(flat), tgt.dim() * t1.term(i).dim());
    homs_.push_back(std::move(homs));
  }

  // cycles: d2 f^i − f^{i+1} d1 = 0 for every i
  std::vector<Vector> rows;
  std::set<int> eq_degrees;
  for (int i : degrees_) {
    eq_degrees.insert(i);
    eq_degrees.insert(i - 1);
  }
  for (int i : eq_degrees) {
    const Representation src = t1.term(i), tgt = t2.term(i + shift + 1);
    if (src.dim() == 0 || tgt.dim() == 0) continue;
    const std::size_t block = src.dim() * tgt.dim();
    std::vector<Vector> cols(unknowns_);
    for (std::size_t k = 0; k < degrees_.size(); ++k) {
      if (degrees_[k] == i) {
        const Matrix d2 = t2.differential(i + shift);
        for (std::size_t a = 0; a < homs_[k].size(); ++a) cols[offsets_[k] + a] = flatten(d2 * homs_[k][a].matrix);
      } else if (degrees_[k] == i + 1) {
        const Matrix d1 = t1.differential(i);
        for (std::size_t a = 0; a < homs_[k].size(); ++a)
          cols[offsets_[k] + a] = flatten(homs_[k][a].matrix * d1 * Scalar(-1));
      }
    }
    for (std::size_t r = 0; r < block; ++r) {
      Vector row = zero_vector(unknowns_);
      bool any = false;
      for (std::size_t u = 0; u < unknowns_; ++u)
        if (!cols[u].empty() && !cols[u][r].is_zero()) {
          row[u] = cols[u][r];
          any = true;
        }
      if (any) rows.push_back(std::move(row));
    }
  }
  const auto cycles = kernel_basis(Matrix::from_rows(unknowns_, rows));
  cycles_dim_ = cycles.size();

  // boundaries: f^i = d2 h^i + h^{i+1} d1 for h^i : t1^i → t2^{i+shift−1}
  EchelonBasis boundaries(unknowns_);
  for (int i : t1.support()) {
    const Representation tgt = t2.term(i + shift - 1);
    if (tgt.dim() == 0) continue;
    for (const auto& h : hom_basis(t1.term(i), tgt)) {
      ChainMap f{t1, t2, shift, {}};
      const Matrix at_i = t2.differential(i + shift - 1) * h.matrix;
      if (!at_i.empty() && !at_i.is_zero()) f.components[i] = at_i;
      const Matrix at_prev = h.matrix * t1.differential(i - 1);
      if (!at_prev.empty() && !at_prev.is_zero()) f.components[i - 1] = at_prev;
      boundaries.insert(flatten_chain_map(f));
    }
  }
  boundaries_dim_ = boundaries.dim();

  EchelonBasis span = boundaries;
  for (const auto& z : cycles)
    if (span.insert(z)) {
      rep_vectors_.push_back(z);
      representatives_.push_back(unflatten_chain_map(z));
    }
  std::vector<Vector> all = rep_vectors_;
  for (const auto& b : boundaries.basis()) all.push_back(b);
  if (!all.empty()) cycle_coords_ = BasisCoordinates(std::move(all), unknowns_);
}

Vector HomotopyHom::flatten_chain_map(const ChainMap& f) const {
  Vector out = zero_vector(unknowns_);
  for (const auto& [d, c] : f.components) {
    if (c.is_zero()) continue;
    auto it = std::find(degrees_.begin(), degrees_.end(), d);
    if (it == degrees_.end()) throw std::logic_error("chain map component outside the hom support");
    const std::size_t k = static_cast<std::size_t>(it - degrees_.begin());
    auto coords = hom_coords_[k].try_coordinates(flatten(c));
    if (!coords) throw UsageError("chain map component is not a module map");
    for (std::size_t a = 0; a < coords->size(); ++a) out[offsets_[k] + a] = (*coords)[a];
  }
  return out;
}

ChainMap HomotopyHom::unflatten_chain_map(const Vector& v) const {
  ChainMap f{t1_, t2_, shift_, {}};
  for (std::size_t k = 0; k < degrees_.size(); ++k) {
    const int i = degrees_[k];
    Matrix c(t2_.term(i + shift_).dim(), t1_.term(i).dim());
    for (std::size_t a = 0; a < homs_[k].size(); ++a)
      if (!v[offsets_[k] + a].is_zero()) c += homs_[k][a].matrix * v[offsets_[k] + a];
    f.components.emplace(i, std::move(c));
  }
  return f;
}

Vector HomotopyHom::coordinates(const ChainMap& f) const {
  if (dim() == 0) return {};
  auto c = cycle_coords_.try_coordinates(flatten_chain_map(f));
  if (!c) throw UsageError("hom_homotopy: not a chain map");
  c->resize(dim());
  return *c;
}

ChainMap HomotopyHom::from_coordinates(const Vector& c) const {
  Vector v = zero_vector(unknowns_);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero())
      for (std::size_t u = 0; u < unknowns_; ++u) v[u] += c[k] * rep_vectors_[k][u];
  return unflatten_chain_map(v);
}

HomotopyHom hom_homotopy(const ProjComplex& t1, const ProjComplex& t2, int shift) { return HomotopyHom(t1, t2, shift); }

EndoAlgebra endo_algebra(const ProjComplex& t, std::string name) {
  HomotopyHom e(t, t, 0);
  const std::size_t n = e.dim();
  std::vector<Vector> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table.push_back(e.coordinates(compose(e.basis()[b], e.basis()[a])));
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("f" + std::to_string(k + 1));
  ChainMap id{t, t, 0, {}};
  for (const auto& [d, m] : t.terms) id.components.emplace(d, Matrix::identity(m.dim()));
  Vector unit = e.coordinates(id);
  EndoAlgebra out;
  out.algebra = make_algebra(std::move(name), std::move(labels), std::move(unit), std::move(table));
  out.basis = e.basis();
  if (t.summands.size() > 1) {
    std::vector<Vector> idempotents;
    for (const auto& block : t.summands) {
      ChainMap proj{t, t, 0, {}};
      for (const auto& [d, m] : t.terms) {
        Matrix p(m.dim(), m.dim());
        auto it = block.ranges.find(d);
        if (it != block.ranges.end())
          for (std::size_t k = it->second.first; k < it->second.second; ++k) p(k, k) = 1;
        proj.components.emplace(d, std::move(p));
      }
      idempotents.push_back(e.coordinates(proj));
    }
    out.frame = {out.algebra, std::move(idempotents)};
    if (!validate_frame(out.frame).ok()) out.frame = primitive_idempotents(out.algebra);
  } else {
    out.frame = primitive_idempotents(out.algebra);
  }
  return out;
}

TiltingReport is_tilting_two_term(const ProjComplex& t, const IdempotentFrame& frame) {
  const auto support = t.support();
  if (support.size() > 2 || (support.size() == 2 && support[1] != support[0] + 1))
    throw UsageError("is_tilting_two_term: complex is not concentrated in two adjacent degrees");
  require_projective_terms(t, frame);
  TiltingReport report;
  std::array<std::size_t, 2> dims{};
  parallel_for(2, [&](std::size_t k) { dims[k] = hom_homotopy(t, t, k == 0 ? -1 : 1).dim(); });
  report.hom_minus_one = dims[0];
  report.hom_plus_one = dims[1];
  // f^i : t^i → t^{i±2} always has source or target zero
  report.higher_shifts_vanish = support.empty() || support.back() - support.front() <= 1;
  report.simples = frame.size();
  if (!support.empty()) {
    EndoAlgebra e = endo_algebra(t);
    auto top = quotient_algebra(e.algebra, e.algebra->radical());
    report.summand_classes = center_dimension(*top.algebra);
  }
  for (const auto& b : t.summands) {
    std::ostringstream os;
    os << b.label << ":";
    for (const auto& [d, r] : b.ranges) os << " deg " << d << " dim " << (r.second - r.first);
    report.summands.push_back(os.str());
  }
  return report;
}

namespace {

// P_from^m → P_to in degrees 0, 1 using the first m maps of a hom basis.
std::optional<ProjComplex> two_term(const Representation& from, const Representation& to, std::size_t m,
                                    const std::vector<ModuleMap>& maps, std::string label) {
  if (m == 0 || m > maps.size()) return std::nullopt;
  std::vector<Representation> copies(m, from);
  Representation source = direct_sum(from.algebra(), copies);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < m; ++k) blocks.push_back(maps[k].matrix);
  ProjComplex c = make_complex(from.algebra(), {{0, source}, {1, to}}, {{0, Matrix::hstack(blocks, to.dim())}});
  SummandBlock whole{std::move(label), {{0, {0, source.dim()}}, {1, {0, to.dim()}}}};
  c.summands.push_back(std::move(whole));
  return c;
}

}  // namespace

FlipResult ladkani_flip(const AlgebraPtr& c, const IdempotentFrame& frame, std::optional<std::size_t> corner) {
  if (frame.size() != 2) throw UnsupportedError("unsupported shape: need exactly two vertices");
  const auto dims = block_dims(frame);
  if (dims[0][1] != 0 && dims[1][0] != 0) throw UnsupportedError("unsupported shape: algebra is not triangular");
  std::size_t s;
  if (corner) {
    s = *corner;
    if (s > 1 || dims[s][s] != 1) throw UnsupportedError("unsupported shape: corner is not one-dimensional");
  } else if (dims[1][1] == 1) {
    s = 1;
  } else if (dims[0][0] == 1) {
    s = 0;
  } else {
    throw UnsupportedError("unsupported shape: no one-dimensional corner");
  }
  const std::size_t r = 1 - s;
  const auto projectives = regular_and_projectives(frame);
  const Representation& ps = projectives[s];
  const Representation& pr = projectives[r];
  const std::string ls = "P" + std::to_string(s + 1), lr = "P" + std::to_string(r + 1);

  struct Candidate {
    std::string recipe;
    std::optional<ProjComplex> complex;
  };
  std::vector<Candidate> candidates;
  const auto s_to_r = hom_basis(ps, pr);
  const auto r_to_s = hom_basis(pr, ps);
  auto add = [&](const Representation& stalk, const std::string& stalk_label, const Representation& from,
                 const std::string& from_label, const Representation& to, const std::string& to_label, std::size_t m,
                 const std::vector<ModuleMap>& maps) {
    std::string recipe = stalk_label + " + (" + from_label + "^" + std::to_string(m) + " -> " + to_label + ")";
    auto cone = two_term(from, to, m, maps, "(" + from_label + "^" + std::to_string(m) + " -> " + to_label + ")");
    if (!cone) return;
    candidates.push_back({std::move(recipe), direct_sum({stalk_complex(stalk, 0, stalk_label), *cone})});
  };
  // universal differential first, then smaller multiplicities and the other corner as stalk
  for (std::size_t m = s_to_r.size(); m >= 1; --m) add(ps, ls, ps, ls, pr, lr, m, s_to_r);
  for (std::size_t m = s_to_r.size(); m >= 1; --m) add(pr, lr, ps, ls, pr, lr, m, s_to_r);
  for (std::size_t m = r_to_s.size(); m >= 1; --m) add(ps, ls, pr, lr, ps, ls, m, r_to_s);
  for (std::size_t m = r_to_s.size(); m >= 1; --m) add(pr, lr, pr, lr, ps, ls, m, r_to_s);

  FlipResult result;
  for (auto& cand : candidates) {
    ++result.candidates_tried;
    const std::size_t total = std::accumulate(cand.complex->terms.begin(), cand.complex->terms.end(), std::size_t{0},
                                              [](std::size_t acc, const auto& kv) { return acc + kv.second.dim(); });
    if (total > 2 * c->dim()) continue;
    TiltingReport report = is_tilting_two_term(*cand.complex, frame);
    if (!report.ok()) continue;
    result.complex = std::move(*cand.complex);
    result.recipe = cand.recipe;
    result.tilting = std::move(report);
    return result;
  }
  throw UnsupportedError("unsupported shape: no two-term tilting complex among " +
                         std::to_string(result.candidates_tried) + " candidates");
}

bool InvariantComparison::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const InvariantRow& r) { return r.match; });
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string join(const std::vector<std::vector<std::size_t>>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + join(m[i]);
  return s + "]";
}

// Lexicographically smallest form of a square matrix under simultaneous row/column permutation.
std::vector<std::vector<std::size_t>> canonical_blocks(const std::vector<std::vector<std::size_t>>& m) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> best;
  do {
    std::vector<std::vector<std::size_t>> cur(m.size(), std::vector<std::size_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) cur[i][j] = m[perm[i]][perm[j]];
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

InvariantComparison compare_invariants(const AlgebraPtr& a1, const AlgebraPtr& a2) {
  InvariantComparison cmp;
  auto row = [&](std::string name, std::string l, std::string r) {
    const bool match = l == r;
    cmp.rows.push_back({std::move(name), std::move(l), std::move(r), match});
  };
  row("dimension", std::to_string(a1->dim()), std::to_string(a2->dim()));
  const auto f1 = primitive_idempotents(a1), f2 = primitive_idempotents(a2);
  row("simples", std::to_string(f1.size()), std::to_string(f2.size()));
  const auto b1 = block_dims(f1), b2 = block_dims(f2);
  const auto c1 = canonical_blocks(b1), c2 = canonical_blocks(b2);
  cmp.rows.push_back({"block dims up to permutation", join(b1), join(b2), c1 == c2});
  row("center dimension", std::to_string(center_dimension(*a1)), std::to_string(center_dimension(*a2)));
  row("radical dimension", std::to_string(a1->radical().size()), std::to_string(a2->radical().size()));
  row("radical power dimensions", join(radical_power_dims(*a1)), join(radical_power_dims(*a2)));
  return cmp;
}

}  // namespace deloop
