#include "deloop/deloop.hpp"

#include "deloop/errors.hpp"
#include "deloop/parallel.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <mutex>
#include <random>

namespace deloop {

std::string to_string(LevelStatus s) {
  switch (s) {
    case LevelStatus::certified_yes: return "certified-yes";
    case LevelStatus::certified_no: return "certified-no";
    case LevelStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Ω^k(N) for every pool member, computed on first use; chains stop once they exceed the cap.
class PoolSyzygies {
 public:
  PoolSyzygies(const ModulePool& pool, std::size_t max_power, std::size_t max_dim, const IdempotentFrame& frame)
      : pool_(pool), frame_(frame), width_(max_power + 1), max_dim_(max_dim), slots_(pool.size() * width_) {}

  /// nullptr when Ω^k(N) (or an earlier syzygy in its chain) is above the dimension cap.
  const Representation* syzygy(std::size_t j, std::size_t k) {
    Slot& s = slots_[j * width_ + k];
    std::call_once(s.once, [&] {
      if (k == 0) {
        if (pool_[j].module.dim() <= max_dim_) s.module = pool_[j].module;
        return;
      }
      const Representation* prev = syzygy(j, k - 1);
      if (!prev) return;
      Representation next = deloop::syzygy(*prev, 1, frame_);
      if (next.dim() <= max_dim_) s.module = std::move(next);
    });
    return s.module ? &*s.module : nullptr;
  }

 private:
  struct Slot {
    std::once_flag once;
    std::optional<Representation> module;
  };
  const ModulePool& pool_;
  const IdempotentFrame& frame_;
  std::size_t width_;
  std::size_t max_dim_;
  std::vector<Slot> slots_;
};

LevelResult level_zero(const Representation& m, const IdempotentFrame& frame) {
  LevelResult r;
  r.level = 0;
  const Torsionless t = torsionless(m, frame);
  if (!t.holds) {
    r.status = LevelStatus::certified_no;
    r.reason = "M is not torsionless: " + std::to_string(t.kernel_dim) +
               "-dimensional subspace killed by every map into a projective";
    return r;
  }
  Representation n = cokernel_module(*t.embedding);
  if (!stable_summand(m, syzygy(n, 1, frame), frame).holds)
    throw std::logic_error("del level 0: Schanuel witness failed to verify");
  r.status = LevelStatus::certified_yes;
  r.reason = "M embeds in a projective; N is the cokernel";
  r.witness = NamedModule{"coker(M -> P)", std::move(n)};
  return r;
}

}  // namespace

Representation cosyzygy(const Representation& m, const IdempotentFrame& frame) {
  if (m.dim() == 0) return m;
  return cokernel_module(injective_envelope(m, frame));
}

ModulePool default_test_pool(const IdempotentFrame& frame) {
  ModulePool pool;
  const auto projectives = regular_and_projectives(frame);
  const auto simples = simple_modules(frame);
  for (std::size_t i = 0; i < simples.size(); ++i) pool.push_back({"S" + std::to_string(i + 1), simples[i]});
  for (std::size_t i = 0; i < projectives.size(); ++i) pool.push_back({"P" + std::to_string(i + 1), projectives[i]});
  for (std::size_t i = 0; i < projectives.size(); ++i) {
    auto rad = radical_of_module(projectives[i]).sub;
    if (rad.dim() > 0) pool.push_back({"rad P" + std::to_string(i + 1), rad});
  }
  for (std::size_t i = 0; i < simples.size(); ++i)
    pool.push_back({"I(S" + std::to_string(i + 1) + ")", injective_envelope(simples[i], frame).target});
  return pool;
}

ModulePool cosyzygy_pool(const Representation& m, std::size_t n_max, const IdempotentFrame& frame,
                         std::size_t max_dim) {
  ModulePool pool;
  Representation omega = m;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) omega = syzygy(omega, 1, frame);
    if (omega.dim() == 0) break;
    Representation sigma = omega;
    for (std::size_t j = 1; j <= n + 1; ++j) {
      sigma = cosyzygy(sigma, frame);
      if (sigma.dim() == 0 || sigma.dim() > max_dim) break;
      pool.push_back({"Sigma^" + std::to_string(j) + " Omega^" + std::to_string(n) + " M", sigma});
    }
  }
  return pool;
}

DelReport del_bounded(const Representation& m, std::size_t n_max, const IdempotentFrame& frame,
                      const ModulePool& extra, std::string name, std::size_t max_pool_dim) {
  DelReport report;
  report.module_name = std::move(name);
  report.levels.push_back(level_zero(m, frame));
  if (report.levels[0].status == LevelStatus::certified_yes || n_max == 0) {
    if (report.levels[0].status == LevelStatus::certified_yes) report.upper_bound = 0;
    else report.lower_bound = 1;
    return report;
  }

  ModulePool pool = default_test_pool(frame);
  for (auto& e : cosyzygy_pool(m, n_max, frame, max_pool_dim)) pool.push_back(std::move(e));
  for (const auto& e : extra) pool.push_back(e);

  std::vector<Representation> omega{m};
  for (std::size_t n = 1; n <= n_max; ++n) omega.push_back(syzygy(omega.back(), 1, frame));

  PoolSyzygies cache(pool, n_max + 1, max_pool_dim, frame);
  std::vector<LevelResult> levels(n_max + 1);
  parallel_for(n_max, [&](std::size_t idx) {
    const std::size_t n = idx + 1;
    LevelResult& r = levels[n];
    r.level = n;
    const Representation& x = omega[n];
    if (x.dim() == 0 || is_projective(x, frame)) {
      r.status = LevelStatus::certified_yes;
      r.reason = "Omega^" + std::to_string(n) + "(M) is projective";
      r.witness = NamedModule{"0", zero_module(m.algebra())};
      return;
    }
    const Torsionless t = torsionless(x, frame);
    if (!t.holds) {
      r.status = LevelStatus::certified_no;
      r.reason = "Omega^" + std::to_string(n) + "(M) is not torsionless, so it is no stable summand of a syzygy";
      return;
    }
    const Decomposition dx = decompose(x, frame);
    std::size_t skipped = 0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const Representation* y = cache.syzygy(j, n + 1);
      if (!y) {
        ++skipped;
        continue;
      }
      if (stable_summand(dx, *y, frame).holds) {
        r.status = LevelStatus::certified_yes;
        r.reason = "stable summand of Omega^" + std::to_string(n + 1) + "(" + pool[j].name + ")";
        r.witness = pool[j];
        return;
      }
    }
    r.status = LevelStatus::inconclusive;
    r.reason = "no witness among " + std::to_string(pool.size() - skipped) + " pool modules";
    if (skipped > 0) r.reason += " (" + std::to_string(skipped) + " skipped above dimension " + std::to_string(max_pool_dim) + ")";
  });

  for (std::size_t n = 1; n <= n_max; ++n) {
    report.levels.push_back(std::move(levels[n]));
    if (report.levels.back().status == LevelStatus::certified_yes) break;
  }
  while (report.lower_bound < report.levels.size() &&
         report.levels[report.lower_bound].status == LevelStatus::certified_no)
    ++report.lower_bound;
  if (report.levels.back().status == LevelStatus::certified_yes) report.upper_bound = report.levels.back().level;
  return report;
}

DelAlgebraReport del_algebra(std::size_t n_max, const IdempotentFrame& frame, const ModulePool& extra_pool,
                             std::size_t max_pool_dim) {
  DelAlgebraReport out;
  const auto simples = simple_modules(frame);
  out.simples.resize(simples.size());
  parallel_for(simples.size(), [&](std::size_t i) {
    out.simples[i] = del_bounded(simples[i], n_max, frame, extra_pool, "S" + std::to_string(i + 1), max_pool_dim);
  });
  bool all_bounded = true;
  std::size_t upper = 0;
  for (const auto& r : out.simples) {
    out.lower_bound = std::max(out.lower_bound, r.lower_bound);
    if (r.upper_bound)
      upper = std::max(upper, *r.upper_bound);
    else
      all_bounded = false;
  }
  if (all_bounded) out.upper_bound = upper;
  return out;
}

EmbeddingSearch find_embedding(const Representation& m, const Representation& n, const IdempotentFrame& frame,
                               std::uint64_t seed) {
  EmbeddingSearch search;
  if (m.dim() == 0) {
    search.embedding = ModuleMap{m, n, Matrix(n.dim(), 0)};
    return search;
  }
  const auto basis = hom_basis(m, n, frame);
  if (basis.empty()) return search;
  auto attempt = [&](const std::vector<long>& coeffs) {
    ++search.tried;
    Matrix f(n.dim(), m.dim());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeffs[k] != 0) f += basis[k].matrix * Scalar(coeffs[k]);
    if (rank(f) != m.dim()) return false;
    search.embedding = ModuleMap{m, n, std::move(f)};
    return true;
  };

  constexpr std::size_t kGridCap = 2000;
  const std::array<long, 5> values{0, 1, -1, 2, -2};
  std::vector<std::size_t> digits(basis.size(), 0);
  digits.back() = 1;
  for (std::size_t count = 0; count < kGridCap; ++count) {
    std::vector<long> coeffs(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] = values[digits[k]];
    if (attempt(coeffs)) return search;
    std::size_t pos = basis.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < values.size()) break;
      digits[pos] = 0;
      if (pos == 0) {
        pos = basis.size() + 1;
        break;
      }
    }
    if (pos == basis.size() + 1) break;
  }

  search.used_random = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-10, 10);
  for (int t = 0; t < 64; ++t) {
    std::vector<long> coeffs(basis.size());
    for (auto& c : coeffs) c = dist(rng);
    if (attempt(coeffs)) return search;
  }
  return search;
}

ModulePool default_overmodule_pool(const Representation& m, const IdempotentFrame& frame) {
  ModulePool pool;
  pool.push_back({"M", m});
  if (m.dim() > 0) pool.push_back({"I(M)", injective_envelope(m, frame).target});
  const auto projectives = regular_and_projectives(frame);
  for (std::size_t i = 0; i < projectives.size(); ++i)
    pool.push_back({"M + P" + std::to_string(i + 1), direct_sum(m.algebra(), {m, projectives[i]})});
  return pool;
}

SddelReport sddel_bounded(const Representation& m, std::size_t n_max, const IdempotentFrame& frame,
                          const ModulePool& overmodules, const ModulePool& test_pool, std::uint64_t seed,
                          std::string name, std::size_t max_pool_dim) {
  SddelReport report;
  report.module_name = std::move(name);
  report.seed = seed;
  ModulePool pool = default_overmodule_pool(m, frame);
  for (const auto& e : overmodules) pool.push_back(e);
  report.overmodules.resize(pool.size());
  for (std::size_t j = 0; j < pool.size(); ++j) {
    OvermoduleResult& r = report.overmodules[j];
    r.name = pool[j].name;
    if (j == 0) {
      r.embedding = identity_map(m);
    } else {
      r.embedding = find_embedding(m, pool[j].module, frame, seed + j).embedding;
    }
    r.embedding_found = r.embedding.has_value();
    if (!r.embedding_found) continue;
    // only a strictly smaller bound can improve the result
    if (report.upper_bound && *report.upper_bound == 0) continue;
    const std::size_t levels = report.upper_bound ? *report.upper_bound - 1 : n_max;
    r.del = del_bounded(pool[j].module, levels, frame, test_pool, pool[j].name, max_pool_dim);
    if (r.del->upper_bound && (!report.upper_bound || *r.del->upper_bound < *report.upper_bound)) {
      report.upper_bound = r.del->upper_bound;
      report.bound_from = pool[j].name;
    }
  }
  return report;
}

SyzygyCertificate syzygy_certificate(const Representation& p, const std::vector<Vector>& generators,
                                     const IdempotentFrame& frame) {
  SyzygyCertificate cert;
  auto sq = submodule_and_quotient(p, generators);
  if (sq.sub.dim() == p.dim() && p.dim() > 0) throw UsageError("not proper: the generators span the whole module");
  cert.u = sq.sub;
  cert.u_inclusion = sq.inclusion;
  cert.quotient = sq.quot;

  auto rad = radical_of_module(p);
  EchelonBasis rad_span(p.dim());
  for (const auto& v : rad.inclusion.matrix.columns()) rad_span.insert(v);
  cert.u_in_radical = true;
  for (const auto& v : sq.inclusion.matrix.columns())
    if (!rad_span.contains(v)) cert.u_in_radical = false;
  if (!cert.u_in_radical) throw UsageError("cover not minimal: U is not contained in rad P");

  cert.omega = syzygy(cert.quotient, 1, frame);
  auto iso = is_isomorphic(cert.omega, cert.u, frame);
  if (!iso) throw std::logic_error("syzygy_certificate: Omega(P/U) is not isomorphic to U");
  cert.iso = std::move(*iso);
  return cert;
}

}  // namespace deloop
