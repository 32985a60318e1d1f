#include "deloop/constructions.hpp"
#include "deloop/deloop.hpp"
#include "deloop/errors.hpp"
#include "deloop/io.hpp"
#include "deloop/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace fs = std::filesystem;
using namespace deloop;
using io::Json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInconclusive = 3;

struct Loaded {
  io::AlgebraResolver resolver;
  AlgebraPtr algebra;
  std::string ref;
};

void load_algebra(Loaded& l, const std::string& ref) {
  l.algebra = l.resolver.resolve(ref, fs::current_path());
  l.ref = ref;
}

Representation load_module(Loaded& l, const std::string& path) {
  Representation m = io::read_module_file(path, l.resolver);
  if (!same_algebra(m.algebra(), l.algebra))
    throw UsageError(path + ": module is over a different algebra than " + l.ref);
  return Representation(l.algebra, m.dim(), m.actions());
}

ModulePool load_pool(Loaded& l, const std::vector<std::string>& files) {
  ModulePool pool;
  for (const auto& f : files) pool.push_back({fs::path(f).stem().string(), load_module(l, f)});
  return pool;
}

void emit(const Json& j, const std::string& out) {
  const std::string text = io::canonical_dump(j);
  if (out.empty() || out == "-")
    std::cout << text;
  else
    io::write_text_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deloop-kit: exact computations with finite-dimensional algebras and delooping levels"};
  app.set_version_flag("--version", DELOOP_VERSION);
  app.require_subcommand(1);
  int code = kExitPass;

  std::string alg_ref, mod_file, complex_file, out;
  std::vector<std::string> pool_files;
  std::size_t power = 1, max_n = 2, simple = 0;
  std::uint64_t seed = 0;
  std::string q_text = "2";

  auto* alg = app.add_subcommand("alg", "Algebra utilities")->require_subcommand(1);
  auto* alg_validate = alg->add_subcommand("validate", "Check associativity and unit");
  alg_validate->add_option("alg", alg_ref, "Algebra file or built-in name")->required();
  alg_validate->callback([&] {
    Loaded l;
    load_algebra(l, alg_ref);
    const auto v = validate_algebra(*l.algebra);
    Json j;
    j["algebra"] = l.algebra->name();
    j["dim"] = l.algebra->dim();
    Json assoc = Json::array();
    for (const auto& t : v.associativity_failures) assoc.push_back(Json::array({t[0], t[1], t[2]}));
    j["associativity_failures"] = std::move(assoc);
    j["unit_failures"] = v.unit_failures;
    j["valid"] = v.ok();
    emit(j, "");
    code = v.ok() ? kExitPass : kExitFail;
  });

  auto* alg_radical = alg->add_subcommand("radical", "Jacobson radical and its powers");
  alg_radical->add_option("alg", alg_ref, "Algebra file or built-in name")->required();
  alg_radical->callback([&] {
    Loaded l;
    load_algebra(l, alg_ref);
    Json j;
    j["algebra"] = l.algebra->name();
    j["radical_dim"] = l.algebra->radical().size();
    Json basis = Json::array();
    for (const auto& v : l.algebra->radical()) basis.push_back(io::to_json(v));
    j["radical_basis"] = std::move(basis);
    j["radical_power_dims"] = radical_power_dims(*l.algebra);
    j["center_dim"] = center_dimension(*l.algebra);
    emit(j, "");
  });

  auto* alg_export = alg->add_subcommand("export", "Write an algebra as a canonical file");
  alg_export->add_option("alg", alg_ref, "Algebra file or built-in name, e.g. Lambda[q=2], B[q=2], C[q=2]")->required();
  alg_export->add_option("-o,--out", out, "Output file (default stdout)");
  alg_export->callback([&] {
    Loaded l;
    load_algebra(l, alg_ref);
    emit(io::algebra_to_json(*l.algebra), out);
  });

  auto* mod = app.add_subcommand("mod", "Module utilities")->require_subcommand(1);
  auto* mod_syzygy = mod->add_subcommand("syzygy", "n-th syzygy of a module");
  mod_syzygy->add_option("--power", power, "Syzygy power n")->check(CLI::NonNegativeNumber);
  mod_syzygy->add_option("alg", alg_ref, "Algebra file or built-in name")->required();
  mod_syzygy->add_option("mod", mod_file, "Module file")->required()->check(CLI::ExistingFile);
  mod_syzygy->add_option("-o,--out", out, "Output file (default stdout)");
  mod_syzygy->callback([&] {
    Loaded l;
    load_algebra(l, alg_ref);
    const Representation m = load_module(l, mod_file);
    emit(io::module_to_json(syzygy(m, power, primitive_idempotents(l.algebra)), l.ref), out);
  });

  auto* del = app.add_subcommand("del", "Bounded delooping-level search");
  del->add_option("--max-n", max_n, "Largest level examined")->check(CLI::NonNegativeNumber);
  del->add_option("--pool", pool_files, "Extra test modules")->check(CLI::ExistingFile);
  del->add_option("--simple", simple, "Use the i-th simple module (1-based)")->check(CLI::PositiveNumber);
  del->add_option("alg", alg_ref, "Algebra file or built-in name")->required();
  del->add_option("mod", mod_file, "Module file")->check(CLI::ExistingFile);
  del->callback([&] {
    if ((simple == 0) == mod_file.empty()) throw UsageError("del: give exactly one of <mod> or --simple <i>");
    Loaded l;
    load_algebra(l, alg_ref);
    const auto frame = primitive_idempotents(l.algebra);
    Representation m;
    std::string name;
    if (simple > 0) {
      const auto simples = simple_modules(frame);
      if (simple > simples.size()) throw UsageError("del: --simple out of range");
      m = simples[simple - 1];
      name = "S" + std::to_string(simple);
    } else {
      m = load_module(l, mod_file);
      name = fs::path(mod_file).stem().string();
    }
    const DelReport r = del_bounded(m, max_n, frame, load_pool(l, pool_files), name);
    emit(io::del_report_to_json(r, l.ref), "");
    code = r.exact() ? kExitPass : kExitInconclusive;
  });

  auto* sddel = app.add_subcommand("sddel", "Bounded sub-derived delooping-level search");
  sddel->add_option("--max-n", max_n, "Largest level examined")->check(CLI::NonNegativeNumber);
  sddel->add_option("--pool", pool_files, "Extra overmodules")->check(CLI::ExistingFile);
  sddel->add_option("--seed", seed, "Seed for the embedding search");
  sddel->add_option("alg", alg_ref, "Algebra file or built-in name")->required();
  sddel->add_option("mod", mod_file, "Module file")->required()->check(CLI::ExistingFile);
  sddel->callback([&] {
    Loaded l;
    load_algebra(l, alg_ref);
    const auto frame = primitive_idempotents(l.algebra);
    const Representation m = load_module(l, mod_file);
    const SddelReport r = sddel_bounded(m, max_n, frame, load_pool(l, pool_files), {}, seed,
                                        fs::path(mod_file).stem().string());
    emit(io::sddel_report_to_json(r, l.ref), "");
    code = r.upper_bound ? kExitPass : kExitInconclusive;
  });

  auto* tilt = app.add_subcommand("tilt", "Tilting complexes")->require_subcommand(1);
  auto* tilt_check = tilt->add_subcommand("check", "Two-term tilting conditions");
  tilt_check->add_option("complex", complex_file, "Complex file")->required()->check(CLI::ExistingFile);
  tilt_check->callback([&] {
    io::AlgebraResolver resolver;
    const ProjComplex t = io::read_complex_file(complex_file, resolver);
    const TiltingReport r = is_tilting_two_term(t, primitive_idempotents(t.algebra));
    emit(io::tilting_report_to_json(r), "");
    code = r.ok() ? kExitPass : kExitFail;
  });

  auto* paper = app.add_subcommand("paper", "End-to-end replay")->require_subcommand(1);
  auto* verify = paper->add_subcommand("verify", "Run all ten verification stages");
  verify->add_option("--q", q_text, "Parameter q (rational, canonical form)");
  verify->add_option("--max-n", max_n, "Largest level probed")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed for randomized searches");
  verify->add_option("--json", out, "Write the JSON report here ('-' for stdout)");
  verify->callback([&] {
    VerifyConfig cfg;
    cfg.q = Scalar::parse(q_text);
    cfg.n_max = max_n;
    cfg.seed = seed;
    const VerificationReport r = run_paper_verification(cfg);
    std::ostream& log = out == "-" ? std::cerr : std::cout;
    for (const auto& c : r.checks) log << "[" << to_string(c.status) << "] " << c.id << "\n";
    if (!out.empty()) emit(r.to_json(), out);
    code = r.exit_code();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitConfig;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedError& e) {
    std::cerr << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return code;
}
