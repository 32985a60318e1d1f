#include "deloop/constructions.hpp"
#include "deloop/errors.hpp"
#include "deloop/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace deloop {
namespace {

namespace fs = std::filesystem;
using io::Json;

const fs::path kGolden = fs::path(DELOOP_TEST_DATA) / "golden";

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string expect_parse_error(const std::function<void()>& body) {
  try {
    body();
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no ParseError";
  return {};
}

/// File name and freshly generated canonical text of every golden file.
std::vector<std::pair<std::string, std::string>> golden_texts() {
  const auto c = make_C(2);
  const auto frame = primitive_idempotents(c);
  return {
      {"lambda_q2.json", io::canonical_dump(io::algebra_to_json(*make_lambda(2)))},
      {"B_q2.json", io::canonical_dump(io::algebra_to_json(*make_B(2)))},
      {"C_q2.json", io::canonical_dump(io::algebra_to_json(*c))},
      {"M_q2.json", io::canonical_dump(io::module_to_json(make_M_alpha(make_lambda(2), 2), "Lambda[q=2]"))},
      {"DM_q2.json", io::canonical_dump(io::bimodule_to_json(make_swap_pair(2).dm, "k", "Lambda[q=2]"))},
      {"flip_C_q2.json", io::canonical_dump(io::complex_to_json(ladkani_flip(c, frame).complex, "C[q=2]"))},
  };
}

TEST(Golden, MatchesConstructors) {
  const bool regenerate = std::getenv("DELOOP_REGENERATE_GOLDEN") != nullptr;
  for (const auto& [name, text] : golden_texts()) {
    const fs::path path = kGolden / name;
    if (regenerate) io::write_text_file(path, text);
    ASSERT_TRUE(fs::exists(path)) << path;
    EXPECT_EQ(slurp(path), text) << name << " drifted; rerun with DELOOP_REGENERATE_GOLDEN=1 after review";
  }
}

TEST(Golden, FilesRoundTrip) {
  io::AlgebraResolver resolver;
  for (const char* name : {"lambda_q2.json", "B_q2.json", "C_q2.json"}) {
    const auto a = io::read_algebra_file(kGolden / name);
    EXPECT_TRUE(validate_algebra(*a).ok());
    EXPECT_EQ(io::canonical_dump(io::algebra_to_json(*a)), slurp(kGolden / name));
  }
  EXPECT_TRUE(same_structure(*io::read_algebra_file(kGolden / "lambda_q2.json"), *make_lambda(2)));
  EXPECT_TRUE(same_structure(*io::read_algebra_file(kGolden / "C_q2.json"), *make_C(2)));

  const auto m = io::read_module_file(kGolden / "M_q2.json", resolver);
  EXPECT_EQ(io::canonical_dump(io::module_to_json(m, "Lambda[q=2]")), slurp(kGolden / "M_q2.json"));
  EXPECT_EQ(m.actions(), make_M_alpha(make_lambda(2), 2).actions());

  const auto dm = io::bimodule_from_json(io::read_json_file(kGolden / "DM_q2.json"), resolver, kGolden);
  EXPECT_TRUE(validate_bimodule(dm).ok());
  EXPECT_EQ(io::canonical_dump(io::bimodule_to_json(dm, "k", "Lambda[q=2]")), slurp(kGolden / "DM_q2.json"));

  const auto t = io::read_complex_file(kGolden / "flip_C_q2.json", resolver);
  EXPECT_EQ(io::canonical_dump(io::complex_to_json(t, "C[q=2]")), slurp(kGolden / "flip_C_q2.json"));
  EXPECT_TRUE(is_tilting_two_term(t, primitive_idempotents(t.algebra)).ok());
}

TEST(Io, ModuleReferencingAlgebraFile) {
  const fs::path dir = fs::temp_directory_path() / "deloop_io_test";
  fs::create_directories(dir);
  io::write_text_file(dir / "lam.json", io::canonical_dump(io::algebra_to_json(*make_lambda(3))));
  auto j = io::module_to_json(make_M_alpha(make_lambda(3), 3), "lam.json");
  io::write_text_file(dir / "m.json", io::canonical_dump(j));
  io::AlgebraResolver resolver;
  const auto m = io::read_module_file(dir / "m.json", resolver);
  EXPECT_TRUE(validate_representation(m).ok());
  EXPECT_TRUE(same_structure(*m.algebra(), *make_lambda(3)));
  // the resolver caches by path
  EXPECT_EQ(resolver.resolve("lam.json", dir), m.algebra());
  fs::remove_all(dir);
}

TEST(Io, RejectsNonCanonicalScalar) {
  auto j = io::algebra_to_json(*ground_field());
  j["unit"][0] = "2/2";
  const auto msg = expect_parse_error([&] { io::algebra_from_json(j, "k.json"); });
  EXPECT_NE(msg.find("/unit/0"), std::string::npos) << msg;
  j["unit"][0] = "1";
  j["table"][0][0][0] = "2/4";
  EXPECT_THROW(io::algebra_from_json(j), ParseError);
  j["table"][0][0][0] = 1;
  EXPECT_THROW(io::algebra_from_json(j), ParseError);
}

TEST(Io, WrongVectorLengthNamesEntry) {
  auto j = io::algebra_to_json(*make_lambda(2));
  j["table"][2][4] = Json::array({"0", "1"});
  const auto msg = expect_parse_error([&] { io::algebra_from_json(j, "lam.json"); });
  EXPECT_NE(msg.find("(entry 2,4)"), std::string::npos) << msg;
  EXPECT_NE(msg.find("/table/2/4"), std::string::npos) << msg;
}

TEST(Io, MissingFieldAndWrongDimension) {
  auto j = io::algebra_to_json(*make_lambda(2));
  j.erase("unit");
  EXPECT_NE(expect_parse_error([&] { io::algebra_from_json(j); }).find("missing field \"unit\""), std::string::npos);
  io::AlgebraResolver resolver;
  auto m = io::module_to_json(make_M_alpha(make_lambda(2), 2), "Lambda[q=2]");
  m["dim"] = 2;
  EXPECT_THROW(io::module_from_json(m, resolver, "."), ParseError);
  m = io::module_to_json(make_M_alpha(make_lambda(2), 2), "Lambda[q=7/3]x");
  EXPECT_THROW(io::module_from_json(m, resolver, "."), ParseError);
}

TEST(Io, SyntaxErrorsCarryPosition) {
  const auto msg = expect_parse_error([] { io::parse_text("{\n  \"a\": ,\n}", "bad.json"); });
  EXPECT_NE(msg.find("bad.json: line 2"), std::string::npos) << msg;
}

TEST(Io, CanonicalLayout) {
  Json j;
  j["name"] = "x";
  j["v"] = Json::array({"1", "-1/2"});
  j["m"] = io::to_json(Matrix{{1, 0}, {0, Scalar(1, 3)}});
  EXPECT_EQ(io::canonical_dump(j),
            "{\n  \"name\": \"x\",\n  \"v\": [\"1\", \"-1/2\"],\n  \"m\": [\n    [\"1\", \"0\"],\n    [\"0\", \"1/3\"]\n  ]\n}\n");
  EXPECT_EQ(io::canonical_dump(io::parse_text(io::canonical_dump(j))), io::canonical_dump(j));
}

TEST(Io, ResolverBuiltinsAndErrors) {
  io::AlgebraResolver resolver;
  EXPECT_TRUE(same_structure(*resolver.resolve("B[q=3]", "."), *make_B(3)));
  EXPECT_THROW(resolver.resolve("no-such-file.json", "."), ParseError);
  resolver.add("mine", make_lambda(5));
  EXPECT_TRUE(same_structure(*resolver.resolve("mine", "."), *make_lambda(5)));
}

}  // namespace
}  // namespace deloop
