#include "deloop/io.hpp"

#include "deloop/constructions.hpp"
#include "deloop/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace deloop::io {

namespace {

bool is_primitive(const Json& j) { return !j.is_array() && !j.is_object(); }

void dump(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(key).dump() + ": ";
      dump(value, indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return is_primitive(e); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      dump(j[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

[[noreturn]] void fail(const std::string& source, const std::string& pointer, const std::string& message) {
  throw ParseError(source + ": " + (pointer.empty() ? "/" : pointer) + ": " + message);
}

// Accessors that report the JSON pointer of the offending value.
struct Reader {
  std::string source;

  const Json& field(const Json& obj, const std::string& pointer, const std::string& key) const {
    if (!obj.is_object()) fail(source, pointer, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(source, pointer, "missing field \"" + key + "\"");
    return *it;
  }

  std::string string(const Json& j, const std::string& pointer) const {
    if (!j.is_string()) fail(source, pointer, "expected a string");
    return j.get<std::string>();
  }

  std::size_t count(const Json& j, const std::string& pointer) const {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(source, pointer, "expected a non-negative integer");
    return j.get<std::size_t>();
  }

  Scalar scalar(const Json& j, const std::string& pointer) const {
    if (!j.is_string()) fail(source, pointer, "scalars are written as strings \"p\" or \"p/q\"");
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(source, pointer, e.what());
    }
  }

  const Json& array(const Json& j, const std::string& pointer, std::optional<std::size_t> size = {}) const {
    if (!j.is_array()) fail(source, pointer, "expected an array");
    if (size && j.size() != *size)
      fail(source, pointer, "expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
    return j;
  }

  Vector vector(const Json& j, const std::string& pointer, std::size_t size) const {
    array(j, pointer, size);
    Vector v;
    for (std::size_t i = 0; i < size; ++i) v.push_back(scalar(j[i], pointer + "/" + std::to_string(i)));
    return v;
  }

  Matrix matrix(const Json& j, const std::string& pointer, std::size_t rows, std::size_t cols) const {
    array(j, pointer, rows);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      Vector row = vector(j[r], pointer + "/" + std::to_string(r), cols);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::move(row[c]);
    }
    return m;
  }

  std::vector<Matrix> matrices(const Json& j, const std::string& pointer, std::size_t count, std::size_t dim) const {
    array(j, pointer, count);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(matrix(j[k], pointer + "/" + std::to_string(k), dim, dim));
    return out;
  }
};

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  dump(j, 0, out);
  out += "\n";
  return out;
}

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(source + ": line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path.string());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError(path.string() + ": cannot write file");
  out << text;
}

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

AlgebraPtr AlgebraResolver::resolve(const std::string& ref, const std::filesystem::path& base_dir) {
  if (auto it = named_.find(ref); it != named_.end()) return it->second;
  if (auto builtin = builtin_algebra(ref)) {
    named_[ref] = builtin;
    return builtin;
  }
  std::filesystem::path path = ref;
  if (path.is_relative()) path = base_dir / path;
  std::error_code ec;
  auto canonical = std::filesystem::weakly_canonical(path, ec);
  const std::string key = ec ? path.string() : canonical.string();
  if (auto it = files_.find(key); it != files_.end()) return it->second;
  if (!std::filesystem::exists(path)) throw ParseError("algebra reference \"" + ref + "\" is neither built in nor a file");
  auto a = read_algebra_file(path);
  files_[key] = a;
  return a;
}

Json algebra_to_json(const FinDimAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = a.basis_labels();
  j["unit"] = to_json(a.unit());
  Json table = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(to_json(a.product(i, k)));
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

AlgebraPtr algebra_from_json(const Json& j, const std::string& source) {
  Reader rd{source};
  const std::string name = rd.string(rd.field(j, "", "name"), "/name");
  const std::size_t dim = rd.count(rd.field(j, "", "dim"), "/dim");
  const Json& basis = rd.array(rd.field(j, "", "basis"), "/basis", dim);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(rd.string(basis[i], "/basis/" + std::to_string(i)));
  Vector unit = rd.vector(rd.field(j, "", "unit"), "/unit", dim);
  const Json& table = rd.array(rd.field(j, "", "table"), "/table", dim);
  std::vector<Vector> entries;
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_ptr = "/table/" + std::to_string(i);
    const Json& row = rd.array(table[i], row_ptr, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const std::string ptr = row_ptr + "/" + std::to_string(k);
      if (!row[k].is_array() || row[k].size() != dim)
        fail(source, ptr, "product b" + std::to_string(i) + "*b" + std::to_string(k) + " (entry " + std::to_string(i) +
                              "," + std::to_string(k) + ") needs " + std::to_string(dim) + " coefficients");
      entries.push_back(rd.vector(row[k], ptr, dim));
    }
  }
  return make_algebra(name, std::move(labels), std::move(unit), std::move(entries));
}

AlgebraPtr read_algebra_file(const std::filesystem::path& path) {
  return algebra_from_json(read_json_file(path), path.string());
}

Json bimodule_to_json(const Bimodule& n, const std::string& left_ref, const std::string& right_ref) {
  Json j;
  j["left_algebra"] = left_ref;
  j["right_algebra"] = right_ref;
  j["dim"] = n.dim;
  Json left = Json::array(), right = Json::array();
  for (const auto& m : n.left_action) left.push_back(to_json(m));
  for (const auto& m : n.right_action) right.push_back(to_json(m));
  j["left_action"] = std::move(left);
  j["right_action"] = std::move(right);
  return j;
}

Bimodule bimodule_from_json(const Json& j, AlgebraResolver& resolver, const std::filesystem::path& base_dir,
                            const std::string& source) {
  Reader rd{source};
  Bimodule n;
  n.left = resolver.resolve(rd.string(rd.field(j, "", "left_algebra"), "/left_algebra"), base_dir);
  n.right = resolver.resolve(rd.string(rd.field(j, "", "right_algebra"), "/right_algebra"), base_dir);
  n.dim = rd.count(rd.field(j, "", "dim"), "/dim");
  n.left_action = rd.matrices(rd.field(j, "", "left_action"), "/left_action", n.left->dim(), n.dim);
  n.right_action = rd.matrices(rd.field(j, "", "right_action"), "/right_action", n.right->dim(), n.dim);
  return n;
}

Json module_to_json(const Representation& m, const std::string& algebra_ref) {
  Json j;
  j["algebra"] = algebra_ref;
  j["dim"] = m.dim();
  Json action = Json::array();
  for (const auto& a : m.actions()) action.push_back(to_json(a));
  j["action"] = std::move(action);
  return j;
}

namespace {

Representation module_at(const Json& j, const std::string& pointer, AlgebraResolver& resolver,
                         const std::filesystem::path& base_dir, const std::string& source) {
  Reader rd{source};
  auto a = resolver.resolve(rd.string(rd.field(j, pointer, "algebra"), pointer + "/algebra"), base_dir);
  const std::size_t dim = rd.count(rd.field(j, pointer, "dim"), pointer + "/dim");
  auto action = rd.matrices(rd.field(j, pointer, "action"), pointer + "/action", a->dim(), dim);
  return Representation(a, dim, std::move(action));
}

}  // namespace

Representation module_from_json(const Json& j, AlgebraResolver& resolver, const std::filesystem::path& base_dir,
                                const std::string& source) {
  return module_at(j, "", resolver, base_dir, source);
}

Representation read_module_file(const std::filesystem::path& path, AlgebraResolver& resolver) {
  return module_from_json(read_json_file(path), resolver, path.parent_path(), path.string());
}

Json complex_to_json(const ProjComplex& t, const std::string& algebra_ref) {
  Json j;
  j["algebra"] = algebra_ref;
  Json terms = Json::object(), diffs = Json::object();
  for (const auto& [d, m] : t.terms) terms[std::to_string(d)] = module_to_json(m, algebra_ref);
  for (const auto& [d, f] : t.differentials) diffs[std::to_string(d)] = to_json(f);
  j["terms"] = std::move(terms);
  j["differentials"] = std::move(diffs);
  return j;
}

ProjComplex complex_from_json(const Json& j, AlgebraResolver& resolver, const std::filesystem::path& base_dir,
                              const std::string& source) {
  Reader rd{source};
  auto a = resolver.resolve(rd.string(rd.field(j, "", "algebra"), "/algebra"), base_dir);
  auto parse_degree = [&](const std::string& key, const std::string& pointer) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty() || std::to_string(d) != key) fail(source, pointer, "degree must be a decimal integer");
    return d;
  };
  std::map<int, Representation> terms;
  const Json& jt = rd.field(j, "", "terms");
  if (!jt.is_object()) fail(source, "/terms", "expected an object");
  for (const auto& [key, value] : jt.items()) {
    const std::string ptr = "/terms/" + escape_pointer(key);
    terms.emplace(parse_degree(key, ptr), module_at(value, ptr, resolver, base_dir, source));
  }
  std::map<int, Matrix> diffs;
  const Json& jd = rd.field(j, "", "differentials");
  if (!jd.is_object()) fail(source, "/differentials", "expected an object");
  for (const auto& [key, value] : jd.items()) {
    const std::string ptr = "/differentials/" + escape_pointer(key);
    const int d = parse_degree(key, ptr);
    auto src = terms.find(d), tgt = terms.find(d + 1);
    const std::size_t rows = tgt == terms.end() ? 0 : tgt->second.dim();
    const std::size_t cols = src == terms.end() ? 0 : src->second.dim();
    diffs.emplace(d, rd.matrix(value, ptr, rows, cols));
  }
  try {
    return make_complex(a, std::move(terms), std::move(diffs));
  } catch (const UsageError& e) {
    fail(source, "", e.what());
  }
}

ProjComplex read_complex_file(const std::filesystem::path& path, AlgebraResolver& resolver) {
  return complex_from_json(read_json_file(path), resolver, path.parent_path(), path.string());
}

Json del_report_to_json(const DelReport& r, const std::string& algebra_ref) {
  Json j;
  j["module"] = r.module_name;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound ? Json(*r.upper_bound) : Json(nullptr);
  j["exact"] = r.exact();
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json e;
    e["level"] = l.level;
    e["status"] = to_string(l.status);
    e["reason"] = l.reason;
    if (l.witness) {
      Json w;
      w["name"] = l.witness->name;
      w["module"] = module_to_json(l.witness->module, algebra_ref);
      e["witness"] = std::move(w);
    } else {
      e["witness"] = nullptr;
    }
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  return j;
}

Json sddel_report_to_json(const SddelReport& r, const std::string& algebra_ref) {
  Json j;
  j["module"] = r.module_name;
  j["upper_bound"] = r.upper_bound ? Json(*r.upper_bound) : Json(nullptr);
  j["bound_from"] = r.bound_from ? Json(*r.bound_from) : Json(nullptr);
  j["lower_bound"] = "not computed";
  j["seed"] = r.seed;
  Json overs = Json::array();
  for (const auto& o : r.overmodules) {
    Json e;
    e["name"] = o.name;
    e["embedding_found"] = o.embedding_found;
    e["embedding"] = o.embedding ? to_json(o.embedding->matrix) : Json(nullptr);
    e["del"] = o.del ? del_report_to_json(*o.del, algebra_ref) : Json(nullptr);
    overs.push_back(std::move(e));
  }
  j["overmodules"] = std::move(overs);
  return j;
}

Json tilting_report_to_json(const TiltingReport& r) {
  Json j;
  j["hom_shift_minus_one"] = r.hom_minus_one;
  j["hom_shift_plus_one"] = r.hom_plus_one;
  j["higher_shifts_vanish"] = r.higher_shifts_vanish;
  j["summand_classes"] = r.summand_classes;
  j["simples"] = r.simples;
  j["summands"] = r.summands;
  j["two_term_tilting_conditions_hold"] = r.ok();
  return j;
}

Json invariants_to_json(const InvariantComparison& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json e;
    e["invariant"] = r.name;
    e["left"] = r.left;
    e["right"] = r.right;
    e["match"] = r.match;
    rows.push_back(std::move(e));
  }
  Json j;
  j["rows"] = std::move(rows);
  j["all_match"] = c.all_match();
  j["isomorphism_claimed"] = false;
  return j;
}

}  // namespace deloop::io
