#include "deloop/verify.hpp"

#include "deloop/constructions.hpp"
#include "deloop/errors.hpp"

#include <functional>

namespace deloop {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "fail";
}

bool VerificationReport::mandatory_pass() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return false;
    if (c.mandatory && c.status != CheckStatus::pass) return false;
  }
  return checks.size() == 10;
}

int VerificationReport::exit_code() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return 1;
  if (checks.size() != 10) return 1;
  for (const auto& c : checks)
    if (c.status == CheckStatus::inconclusive) return c.mandatory ? 1 : 3;
  return 0;
}

io::Json VerificationReport::to_json() const {
  io::Json j;
  j["version"] = version;
  io::Json cfg;
  cfg["q"] = config.q.str();
  cfg["seed"] = config.seed;
  cfg["n_max"] = config.n_max;
  j["config"] = std::move(cfg);
  io::Json list = io::Json::array();
  for (const auto& c : checks) {
    io::Json e;
    e["id"] = c.id;
    e["paper_anchor"] = c.paper_anchor;
    e["status"] = to_string(c.status);
    e["mandatory"] = c.mandatory;
    e["detail"] = c.detail;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  j["overall"] = exit_code() == 0 ? "pass" : exit_code() == 3 ? "inconclusive" : "fail";
  return j;
}

namespace {

using io::Json;

Json label_vectors(const FinDimAlgebra& a, const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (!s.empty()) s += v[i].sign() > 0 ? " + " : " - ";
      else if (v[i].sign() < 0) s += "-";
      const Scalar c = v[i].abs();
      if (!c.is_one()) s += c.str() + "*";
      s += a.basis_labels()[i];
    }
    out.push_back(s.empty() ? "0" : s);
  }
  return out;
}

bool spans_equal(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t n) {
  EchelonBasis ea(n), eb(n);
  for (const auto& v : a) ea.insert(v);
  for (const auto& v : b) eb.insert(v);
  if (ea.dim() != eb.dim()) return false;
  for (const auto& v : b)
    if (!ea.contains(v)) return false;
  return true;
}

Json dims_json(const std::vector<std::vector<std::size_t>>& d) {
  Json out = Json::array();
  for (const auto& r : d) out.push_back(r);
  return out;
}

struct Context {
  VerifyConfig config;
  SwapPair pair;
  IdempotentFrame frame_b, frame_c;
};

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

Check stage_lambda(Context& ctx) {
  Check c{"lambda-structure", "Lambda has basis 1,x,y,z,yx,zx; J = span{x,y,z,yx,zx}; J^2 = span{yx,zx}; J^3 = 0", {}, {}};
  const auto& lam = ctx.pair.lambda;
  const auto v = validate_algebra(*lam);
  const auto& rad = lam->radical();
  std::vector<Vector> expected_rad, expected_rad2;
  for (const char* l : {"x", "y", "z", "yx", "zx"}) expected_rad.push_back(lam->element(l));
  for (const char* l : {"yx", "zx"}) expected_rad2.push_back(lam->element(l));
  const auto rad2 = product_span(*lam, rad, rad);
  const auto powers = radical_power_dims(*lam);
  const bool basis_ok = lam->basis_labels() == std::vector<std::string>{"1", "x", "y", "z", "yx", "zx"};
  const bool ok = v.ok() && basis_ok && lam->dim() == 6 && spans_equal(rad, expected_rad, 6) &&
                  spans_equal(rad2, expected_rad2, 6) && powers == std::vector<std::size_t>{5, 2, 0};
  c.detail["dim"] = lam->dim();
  c.detail["basis"] = lam->basis_labels();
  c.detail["associativity_failures"] = v.associativity_failures.size();
  c.detail["unit_failures"] = v.unit_failures.size();
  c.detail["radical_basis"] = label_vectors(*lam, rad);
  c.detail["radical_square_basis"] = label_vectors(*lam, rad2);
  c.detail["radical_power_dims"] = powers;
  c.detail["x*y"] = label_vectors(*lam, {lam->multiply(lam->element("x"), lam->element("y"))})[0];
  c.status = status_of(ok);
  return c;
}

Check stage_yx(Context& ctx) {
  Check c{"lambda-yx-socle", "Lambda(yx) = k(yx) is one-dimensional; x, y, z annihilate yx on the left", {}, {}};
  const auto& lam = ctx.pair.lambda;
  const Vector yx = lam->element("yx");
  std::vector<Vector> left_multiples;
  for (std::size_t i = 0; i < lam->dim(); ++i) left_multiples.push_back(lam->multiply(lam->basis_vector(i), yx));
  const auto span = product_span(*lam, {lam->unit()}, left_multiples);
  bool annihilated = true;
  for (const char* l : {"x", "y", "z", "yx", "zx"})
    if (!is_zero(lam->multiply(lam->element(l), yx))) annihilated = false;
  c.detail["dim_Lambda_yx"] = span.size();
  c.detail["basis"] = label_vectors(*lam, span);
  c.detail["radical_annihilates_yx"] = annihilated;
  c.status = status_of(span.size() == 1 && spans_equal(span, {yx}, lam->dim()) && annihilated);
  return c;
}

Check stage_annihilation(Context& ctx) {
  Check c{"yx-annihilation", "(yx) M(q) = 0 and f (yx) = 0 for all f in D(M(q))", {}, {}};
  const auto& lam = ctx.pair.lambda;
  const std::size_t yx = lam->index_of("yx");
  const Representation m = make_M_alpha(lam, ctx.config.q);
  const bool m_valid = validate_representation(m).ok() && validate_bimodule(ctx.pair.m).ok();
  const bool dm_valid = validate_bimodule(ctx.pair.dm).ok();
  const bool left_zero = m.action(yx).is_zero();
  const bool right_zero = ctx.pair.dm.right_action[yx].is_zero();
  c.detail["M_valid"] = m_valid;
  c.detail["DM_valid"] = dm_valid;
  c.detail["action_yx_on_M"] = io::to_json(m.action(yx));
  c.detail["right_action_yx_on_DM"] = io::to_json(ctx.pair.dm.right_action[yx]);
  c.status = status_of(m_valid && dm_valid && left_zero && right_zero);
  return c;
}

Check stage_triangular(Context& ctx) {
  Check c{"triangular-algebras", "B = [[k,0],[M(q),Lambda]] and C = [[Lambda,0],[D(M(q)),k]] are 10-dimensional", {}, {}};
  const auto vb = validate_algebra(*ctx.pair.b), vc = validate_algebra(*ctx.pair.c);
  ctx.frame_b = primitive_idempotents(ctx.pair.b);
  ctx.frame_c = primitive_idempotents(ctx.pair.c);
  const auto db = block_dims(ctx.frame_b), dc = block_dims(ctx.frame_c);
  const std::vector<std::vector<std::size_t>> want_b{{1, 0}, {3, 6}}, want_c{{6, 0}, {3, 1}};
  const bool ok = vb.ok() && vc.ok() && ctx.pair.b->dim() == 10 && ctx.pair.c->dim() == 10 && db == want_b &&
                  dc == want_c && validate_frame(ctx.frame_b).ok() && validate_frame(ctx.frame_c).ok();
  c.detail["dim_B"] = ctx.pair.b->dim();
  c.detail["dim_C"] = ctx.pair.c->dim();
  c.detail["block_dims_B"] = dims_json(db);
  c.detail["block_dims_C"] = dims_json(dc);
  c.detail["radical_dim_B"] = ctx.pair.b->radical().size();
  c.detail["radical_dim_C"] = ctx.pair.c->radical().size();
  c.status = status_of(ok);
  return c;
}

Check stage_swap(Context& ctx) {
  Check c{"swap-isomorphisms", "[[S,N],[0,R]] = [[R,0],[N,S]]: T1 = [[k,D(M(q))],[0,Lambda]] = C and T2 = [[Lambda,M(q)],[0,k]] = B", {}, {}};
  const AlgebraIso t1 = t1_iso(ctx.config.q), t2 = t2_iso(ctx.config.q);
  const bool ok = t1.verified && t2.verified && same_structure(*t1.target, *ctx.pair.c) &&
                  same_structure(*t2.target, *ctx.pair.b) && t1.pairs_checked == 100 && t2.pairs_checked == 100;
  for (const auto* iso : {&t1, &t2}) {
    Json e;
    e["source"] = iso->source->name();
    e["target"] = iso->target->name();
    e["pairs_checked"] = iso->pairs_checked;
    e["verified"] = iso->verified;
    e["map"] = io::to_json(iso->map);
    c.detail[iso == &t1 ? "T1" : "T2"] = std::move(e);
  }
  c.status = status_of(ok);
  return c;
}

Check stage_duality(Context& ctx) {
  Check c{"double-dual", "D(D(M(q))) = M(q); dim Hom(X,Y) = dim Hom(DY,DX)", {}, {}};
  const auto& lam = ctx.pair.lambda;
  const Bimodule ddm = dual_bimodule(ctx.pair.dm);
  // canonical double-dual identification is the identity in dual-of-dual bases
  const Matrix witness = Matrix::identity(ddm.dim);
  bool actions_match = ddm.dim == ctx.pair.m.dim && same_algebra(ddm.left, ctx.pair.m.left) &&
                       same_algebra(ddm.right, ctx.pair.m.right);
  for (std::size_t i = 0; actions_match && i < lam->dim(); ++i)
    actions_match = witness * ddm.left_action[i] == ctx.pair.m.left_action[i] * witness;
  actions_match = actions_match && witness * ddm.right_action[0] == ctx.pair.m.right_action[0] * witness;
  const Representation m = left_module(ctx.pair.m);
  const auto module_iso = is_isomorphic(left_module(ddm), m, primitive_idempotents(lam));

  std::size_t pairs = 0, mismatches = 0;
  auto check_family = [&](const std::vector<Representation>& family) {
    const AlgebraPtr op = opposite(family.front().algebra());
    std::vector<Representation> duals;
    for (const auto& x : family) duals.push_back(dual_module(x, op));
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j) {
        ++pairs;
        if (hom_basis(family[i], family[j]).size() != hom_basis(duals[j], duals[i]).size()) ++mismatches;
      }
  };
  const auto fl = primitive_idempotents(lam);
  std::vector<Representation> lambda_family{m, regular_module(lam), simple_modules(fl)[0]};
  std::vector<Representation> c_family = regular_and_projectives(ctx.frame_c);
  for (auto& s : simple_modules(ctx.frame_c)) c_family.push_back(s);
  std::vector<Representation> b_family = regular_and_projectives(ctx.frame_b);
  for (auto& s : simple_modules(ctx.frame_b)) b_family.push_back(s);
  check_family(lambda_family);
  check_family(c_family);
  check_family(b_family);

  c.detail["bimodule_witness"] = io::to_json(witness);
  c.detail["bimodule_actions_match"] = actions_match;
  c.detail["module_iso"] = module_iso ? io::to_json(module_iso->matrix) : Json(nullptr);
  c.detail["hom_pairs_checked"] = pairs;
  c.detail["hom_dimension_mismatches"] = mismatches;
  c.status = status_of(actions_match && module_iso && is_module_map(*module_iso) && mismatches == 0);
  return c;
}

Check stage_proposition(Context& ctx) {
  Check c{"syzygy-of-simple",
          "U = Lambda(yx) e1 in P1 is simple, U = S1, U in rad P1, and U = Omega(P1/U); hence del_C(S1) = 0", {}, {}};
  const auto& alg = ctx.pair.c;
  const auto projectives = projective_modules(ctx.frame_c);
  const Projective& p1 = projectives[0];
  const BasisCoordinates coords(p1.elements.columns(), alg->dim());
  const auto gen = coords.try_coordinates(alg->element("11:yx"));
  if (!gen) throw std::logic_error("11:yx is not in P1");
  const auto sq = submodule_and_quotient(p1.module, {*gen});
  const auto simples = simple_modules(ctx.frame_c);
  const auto iso_s1 = is_isomorphic(sq.sub, simples[0], ctx.frame_c);
  const bool not_s2 = !is_isomorphic(sq.sub, simples[1], ctx.frame_c);
  const auto cert = syzygy_certificate(p1.module, {*gen}, ctx.frame_c);
  const bool ok = sq.sub.dim() == 1 && iso_s1 && is_module_map(*iso_s1) && not_s2 && cert.u_in_radical &&
                  is_module_map(cert.iso) && is_invertible(cert.iso.matrix) && sq.quot.dim() == 8;
  c.detail["dim_P1"] = p1.module.dim();
  c.detail["dim_U"] = sq.sub.dim();
  c.detail["dim_P1_mod_U"] = sq.quot.dim();
  c.detail["U_iso_S1"] = iso_s1 ? io::to_json(iso_s1->matrix) : Json(nullptr);
  c.detail["U_not_iso_S2"] = not_s2;
  c.detail["U_in_rad_P1"] = cert.u_in_radical;
  c.detail["Omega_P1_mod_U_dim"] = cert.omega.dim();
  c.detail["Omega_to_U_iso"] = io::to_json(cert.iso.matrix);
  c.detail["U"] = io::module_to_json(sq.sub, alg->name());
  c.status = status_of(ok);
  return c;
}

Check stage_c_levels(Context& ctx) {
  Check c{"del-sddel-C", "del(C) = sddel(C) = 0", {}, {}};
  const auto& alg = ctx.pair.c;
  const DelAlgebraReport del = del_algebra(ctx.config.n_max, ctx.frame_c);
  const auto simples = simple_modules(ctx.frame_c);
  Json sd = Json::array();
  bool sddel_zero = true;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    const SddelReport r =
        sddel_bounded(simples[i], ctx.config.n_max, ctx.frame_c, {}, {}, ctx.config.seed, "S" + std::to_string(i + 1));
    if (!r.upper_bound || *r.upper_bound != 0) sddel_zero = false;
    sd.push_back(io::sddel_report_to_json(r, alg->name()));
  }
  // every certified-yes witness replays
  bool replay = true;
  for (const auto& r : del.simples)
    for (const auto& l : r.levels)
      if (l.status == LevelStatus::certified_yes && l.witness) {
        const Representation omega = syzygy(simples[&r - del.simples.data()], l.level, ctx.frame_c);
        if (!stable_summand(omega, syzygy(l.witness->module, l.level + 1, ctx.frame_c), ctx.frame_c).holds)
          replay = false;
      }
  Json simples_json = Json::array();
  for (const auto& r : del.simples) simples_json.push_back(io::del_report_to_json(r, alg->name()));
  c.detail["del_C"] = del.exact() ? Json(*del.upper_bound) : Json(nullptr);
  c.detail["sddel_C"] = sddel_zero ? Json(0) : Json(nullptr);
  c.detail["witnesses_replay"] = replay;
  c.detail["del_simples"] = std::move(simples_json);
  c.detail["sddel_simples"] = std::move(sd);
  c.status = status_of(del.exact() && *del.upper_bound == 0 && sddel_zero && replay);
  return c;
}

Check stage_b_probe(Context& ctx) {
  Check c{"B-probe", "del(B) = sddel(B) = infinity: bounded probes must find no finite upper bound", {}, {}};
  const auto& alg = ctx.pair.b;
  const auto dims = block_dims(ctx.frame_b);
  std::size_t k_vertex = 0;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i][i] == 1) k_vertex = i;
  const auto simples = simple_modules(ctx.frame_b);
  const Torsionless t = torsionless(simples[k_vertex], ctx.frame_b);
  const DelAlgebraReport del = del_algebra(ctx.config.n_max, ctx.frame_b);
  bool bound_found = false;
  for (const auto& r : del.simples)
    if (r.levels.front().status == LevelStatus::certified_no && r.upper_bound) bound_found = true;
  const SddelReport sd = sddel_bounded(simples[k_vertex], ctx.config.n_max, ctx.frame_b, {}, {}, ctx.config.seed,
                                       "S" + std::to_string(k_vertex + 1));
  if (sd.upper_bound) bound_found = true;
  Json simples_json = Json::array();
  for (const auto& r : del.simples) simples_json.push_back(io::del_report_to_json(r, alg->name()));
  c.detail["k_vertex_simple"] = "S" + std::to_string(k_vertex + 1);
  c.detail["k_vertex_simple_torsionless"] = t.holds;
  c.detail["del_lower_bound"] = del.lower_bound;
  c.detail["result"] = bound_found ? "finite upper bound found" : "no finite upper bound";
  c.detail["del_simples"] = std::move(simples_json);
  c.detail["sddel_k_vertex"] = io::sddel_report_to_json(sd, alg->name());
  c.status = status_of(!t.holds && del.lower_bound >= 1 && !bound_found);
  return c;
}

Check stage_tilting(Context& ctx) {
  Check c{"tilting-flip",
          "[[S,N],[0,R]] and [[R,D(N)],[0,S]] are derived equivalent for S a division ring; End(T)^op matches B",
          {}, {}};
  const FlipResult flip = ladkani_flip(ctx.pair.c, ctx.frame_c);
  const EndoAlgebra e = endo_algebra(flip.complex);
  const auto dims = block_dims(e.frame);
  const InvariantComparison vs_b = compare_invariants(e.algebra, ctx.pair.b);
  const InvariantComparison b_vs_c = compare_invariants(ctx.pair.b, ctx.pair.c);
  const bool ok = flip.tilting.ok() && flip.tilting.summand_classes == 2 && e.algebra->dim() == 10 &&
                  validate_algebra(*e.algebra).ok() && validate_frame(e.frame).ok() &&
                  dims == std::vector<std::vector<std::size_t>>{{1, 0}, {3, 6}} && vs_b.all_match();
  c.detail["recipe"] = flip.recipe;
  c.detail["candidates_tried"] = flip.candidates_tried;
  c.detail["complex"] = io::complex_to_json(flip.complex, ctx.pair.c->name());
  c.detail["tilting"] = io::tilting_report_to_json(flip.tilting);
  c.detail["dim_End_op"] = e.algebra->dim();
  c.detail["block_dims_End_op"] = dims_json(dims);
  c.detail["End_op_vs_B"] = io::invariants_to_json(vs_b);
  c.detail["B_vs_C"] = io::invariants_to_json(b_vs_c);
  c.detail["conclusion"] = ok ? "two-term tilting complex found with End^op matching B on all computed invariants "
                                "(via Rickard's theorem, equivalence follows)"
                              : "no conclusion";
  c.status = status_of(ok);
  return c;
}

}  // namespace

VerificationReport run_paper_verification(const VerifyConfig& config) {
  if (config.q.is_zero() || config.q == Scalar(1) || config.q == Scalar(-1))
    throw UsageError("q must have infinite multiplicative order (q^n != 1 for all n >= 1), got " + config.q.str());
  if (config.n_max < 2) throw UsageError("n_max must be at least 2");
  VerificationReport report;
  report.config = config;
  report.version = DELOOP_VERSION;
  Context ctx{config, make_swap_pair(config.q), {}, {}};
  const std::vector<std::pair<const char*, std::function<Check(Context&)>>> stages{
      {"lambda-structure", stage_lambda},   {"lambda-yx-socle", stage_yx},     {"yx-annihilation", stage_annihilation},
      {"triangular-algebras", stage_triangular}, {"swap-isomorphisms", stage_swap}, {"double-dual", stage_duality},
      {"syzygy-of-simple", stage_proposition}, {"del-sddel-C", stage_c_levels}, {"B-probe", stage_b_probe},
      {"tilting-flip", stage_tilting}};
  for (std::size_t k = 0; k < stages.size(); ++k) {
    try {
      report.checks.push_back(stages[k].second(ctx));
    } catch (const std::exception& e) {
      Check failed{stages[k].first, "stage " + std::to_string(k + 1), CheckStatus::fail, {}};
      failed.detail["stage"] = k + 1;
      failed.detail["error"] = e.what();
      report.checks.push_back(std::move(failed));
      break;
    }
  }
  return report;
}

}  // namespace deloop
