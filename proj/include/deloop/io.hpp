#pragma once

#include "deloop/complex.hpp"
#include "deloop/deloop.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace deloop::io {

using Json = nlohmann::ordered_json;

/// Canonical text: one object key per line, arrays of primitives inline, nested arrays one element
/// per line, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);
/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_text(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);

/// Resolves algebra references: built-in names ("k", "Lambda[q=2]", "B[q=2]", "C[q=2]") or file
/// paths relative to the referencing file. Loaded files are cached by canonical path.
class AlgebraResolver {
 public:
  AlgebraPtr resolve(const std::string& ref, const std::filesystem::path& base_dir);
  /// Registers an in-memory algebra under a reference name.
  void add(const std::string& ref, AlgebraPtr algebra) { named_[ref] = std::move(algebra); }

 private:
  std::map<std::string, AlgebraPtr> named_;
  std::map<std::string, AlgebraPtr> files_;
};

Json algebra_to_json(const FinDimAlgebra& a);
AlgebraPtr algebra_from_json(const Json& j, const std::string& source = "<input>");
AlgebraPtr read_algebra_file(const std::filesystem::path& path);

Json bimodule_to_json(const Bimodule& n, const std::string& left_ref, const std::string& right_ref);
Bimodule bimodule_from_json(const Json& j, AlgebraResolver& resolver, const std::filesystem::path& base_dir,
                            const std::string& source = "<input>");

Json module_to_json(const Representation& m, const std::string& algebra_ref);
Representation module_from_json(const Json& j, AlgebraResolver& resolver, const std::filesystem::path& base_dir,
                                const std::string& source = "<input>");
Representation read_module_file(const std::filesystem::path& path, AlgebraResolver& resolver);

Json complex_to_json(const ProjComplex& t, const std::string& algebra_ref);
ProjComplex complex_from_json(const Json& j, AlgebraResolver& resolver, const std::filesystem::path& base_dir,
                              const std::string& source = "<input>");
ProjComplex read_complex_file(const std::filesystem::path& path, AlgebraResolver& resolver);

Json del_report_to_json(const DelReport& r, const std::string& algebra_ref);
Json sddel_report_to_json(const SddelReport& r, const std::string& algebra_ref);
Json tilting_report_to_json(const TiltingReport& r);
Json invariants_to_json(const InvariantComparison& c);

}  // namespace deloop::io
