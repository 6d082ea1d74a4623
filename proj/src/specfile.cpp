#include "soclelab/specfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "soclelab/error.hpp"
#include "soclelab/families.hpp"

namespace soclelab {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

FieldCtx parse_field(const std::string& text) {
  if (text == "QQ" || text == "Q") return FieldCtx::rationals();
  if (text.size() > 4 && text.rfind("GF(", 0) == 0 && text.back() == ')') {
    const std::string digits = text.substr(3, text.size() - 4);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
      return FieldCtx::gf(std::stoull(digits));
    }
  }
  fail(Errc::InvalidSpec, "unknown field \"" + text + "\" (expected QQ or GF(p))");
}

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& what) {
  fail(Errc::InvalidSpec, origin + ": " + what);
}

Scalar scalar_at(const std::string& origin, FieldCtx f, const json& node,
                 const std::string& where) {
  if (!node.is_string()) bad(origin, where + ": scalars must be strings like \"3/2\"");
  return Scalar::parse(f, node.get<std::string>());
}

Vec vec_at(const std::string& origin, FieldCtx f, const json& node, std::size_t dim,
           const std::string& where) {
  if (!node.is_array() || node.size() != dim) {
    bad(origin, where + ": expected an array of " + std::to_string(dim) + " scalar strings");
  }
  Vec v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v.push_back(scalar_at(origin, f, node[i], where + "[" + std::to_string(i) + "]"));
  }
  return v;
}

Mat mat_at(const std::string& origin, FieldCtx f, const json& node, std::size_t rows,
           std::size_t cols, const std::string& where) {
  if (!node.is_array() || node.size() != rows) {
    bad(origin, where + ": expected " + std::to_string(rows) + " rows");
  }
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = vec_at(origin, f, node[r], cols, where + "[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
  }
  return m;
}

std::size_t index_at(const std::string& origin, const json& node, std::size_t dim,
                     const std::string& where) {
  if (!node.is_number_unsigned()) bad(origin, where + ": expected a basis index");
  const std::size_t i = node.get<std::size_t>();
  if (i >= dim) bad(origin, where + ": index " + std::to_string(i) + " out of range");
  return i;
}

BarnesElement barnes_at(const std::string& origin, FieldCtx f, const json& node,
                        const std::string& where) {
  if (!node.is_object() || !node.contains("lambda") || !node.contains("block")) {
    bad(origin, where + ": expected {\"lambda\": scalar, \"block\": rows}");
  }
  Scalar lambda = scalar_at(origin, f, node["lambda"], where + ".lambda");
  const json& rows = node["block"];
  if (!rows.is_array()) bad(origin, where + ".block: expected an array of rows");
  const std::size_t n = rows.size();
  Mat block = mat_at(origin, f, rows, n, n, where + ".block");
  return BarnesElement(std::move(lambda), std::move(block));
}

}  // namespace

SpecFile parse_spec_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(origin, e.what());
  }
  if (!j.is_object()) bad(origin, "top level must be an object");

  SpecFile out;
  const std::string model = j.value("model", std::string("findim"));
  if (!j.contains("field") || !j["field"].is_string()) {
    bad(origin, "missing \"field\" (QQ or GF(p))");
  }
  out.field = parse_field(j["field"].get<std::string>());
  out.name = j.value("name", std::string("spec"));

  // bound to a named value: items() on a temporary dangles in a range-for
  const json elems = j.value("elements", json::object());

  if (model == "barnes") {
    out.model = SpecFile::Model::Barnes;
    for (const auto& [key, val] : elems.items()) {
      out.barnes_elements.emplace(key, barnes_at(origin, out.field, val, "elements." + key));
    }
    return out;
  }
  if (model == "poly") {
    out.model = SpecFile::Model::Poly;
    if (out.field.is_rationals()) bad(origin, "the poly model needs a prime field");
    for (const auto& [key, val] : elems.items()) {
      if (!val.is_string()) bad(origin, "elements." + key + ": expected a polynomial string");
      out.poly_elements.emplace(key, Poly::parse(out.field, val.get<std::string>()));
    }
    return out;
  }
  if (model != "findim") bad(origin, "unknown model \"" + model + "\"");

  out.model = SpecFile::Model::FinDim;
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) bad(origin, "missing \"dim\"");
  const std::size_t dim = j["dim"].get<std::size_t>();
  if (!j.contains("unit")) bad(origin, "missing \"unit\"");
  Vec unit = vec_at(origin, out.field, j["unit"], dim, "unit");

  if (!j.contains("mult") || !j["mult"].is_array()) bad(origin, "missing \"mult\" entries");
  std::vector<ScEntry> entries;
  entries.reserve(j["mult"].size());
  std::size_t t = 0;
  for (const json& e : j["mult"]) {
    const std::string where = "mult[" + std::to_string(t++) + "]";
    if (!e.is_array() || e.size() != 4) bad(origin, where + ": expected [i, j, k, scalar]");
    ScEntry entry{index_at(origin, e[0], dim, where + "[0]"),
                  index_at(origin, e[1], dim, where + "[1]"),
                  index_at(origin, e[2], dim, where + "[2]"),
                  scalar_at(origin, out.field, e[3], where + "[3]")};
    entries.push_back(std::move(entry));
  }

  std::optional<Mat> involution;
  if (j.contains("involution")) {
    involution = mat_at(origin, out.field, j["involution"], dim, dim, "involution");
  }

  out.algebra = AlgebraSC::build(out.field, dim, std::move(entries), std::move(unit),
                                 std::move(involution), out.name);
  for (const auto& [key, val] : elems.items()) {
    out.elements.emplace(key, vec_at(origin, out.field, val, dim, "elements." + key));
  }
  return out;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidSpec, path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), path);
}

Vec resolve_findim_element(const SpecFile& spec, const std::string& ref) {
  if (auto it = spec.elements.find(ref); it != spec.elements.end()) return it->second;
  if (!ref.empty() && ref.front() == '[') {
    json node;
    try {
      node = json::parse(ref);
    } catch (const json::exception& e) {
      bad("<element>", e.what());
    }
    return vec_at("<element>", spec.field, node, spec.algebra->dim(), "literal");
  }
  fail(Errc::InvalidSpec, "unknown element \"" + ref + "\"");
}

BarnesElement resolve_barnes_element(const SpecFile& spec, const std::string& ref) {
  if (auto it = spec.barnes_elements.find(ref); it != spec.barnes_elements.end()) {
    return it->second;
  }
  if (!ref.empty() && ref.front() == '{') {
    json node;
    try {
      node = json::parse(ref);
    } catch (const json::exception& e) {
      bad("<element>", e.what());
    }
    return barnes_at("<element>", spec.field, node, "literal");
  }
  fail(Errc::InvalidSpec, "unknown element \"" + ref + "\"");
}

Poly resolve_poly_element(const SpecFile& spec, const std::string& ref) {
  if (auto it = spec.poly_elements.find(ref); it != spec.poly_elements.end()) return it->second;
  return Poly::parse(spec.field, ref);
}

namespace {

// Canonical emission: entries sorted by (i, j, k), scalars as strings.
ojson spec_json_for(const AlgebraSC::Ptr& alg, const std::string& name,
                    const std::map<std::string, Vec>& elements) {
  ojson j;
  j["model"] = "findim";
  j["name"] = name;
  j["field"] = alg->field().to_string();
  j["dim"] = alg->dim();

  ojson unit = ojson::array();
  for (const Scalar& c : alg->unit()) unit.push_back(c.to_string());
  j["unit"] = unit;

  std::vector<ScEntry> sorted = alg->entries();
  std::sort(sorted.begin(), sorted.end(), [](const ScEntry& a, const ScEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  ojson mult = ojson::array();
  for (const ScEntry& e : sorted) {
    mult.push_back(ojson::array({e.i, e.j, e.k, e.c.to_string()}));
  }
  j["mult"] = mult;

  if (alg->has_involution()) {
    const Mat& inv = alg->involution();
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < inv.rows(); ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < inv.cols(); ++c) row.push_back(inv.at(r, c).to_string());
      rows.push_back(row);
    }
    j["involution"] = rows;
  }

  ojson elems = ojson::object();
  for (const auto& [key, coords] : elements) {
    ojson arr = ojson::array();
    for (const Scalar& c : coords) arr.push_back(c.to_string());
    elems[key] = arr;
  }
  elems["one"] = [&] {
    ojson arr = ojson::array();
    for (const Scalar& c : alg->unit()) arr.push_back(c.to_string());
    return arr;
  }();
  elems["zero"] = [&] {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < alg->dim(); ++i) arr.push_back(Scalar::zero(alg->field()).to_string());
    return arr;
  }();
  j["elements"] = elems;
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string spec_for_matrix(std::size_t n, FieldCtx f) {
  AlgebraSC::Ptr alg = matrix_algebra(n, f);
  std::map<std::string, Vec> elements;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::string name = "E" + std::to_string(r + 1) + std::to_string(c + 1);
      elements.emplace(std::move(name), unit_vec(f, n * n, matrix_unit_index(n, r, c)));
    }
  }
  return dump(spec_json_for(alg, "M" + std::to_string(n) + "(" + f.to_string() + ")", elements));
}

std::string spec_for_product(std::size_t n, std::size_t m, FieldCtx f) {
  AlgebraSC::Ptr alg = direct_product(matrix_algebra(n, f), matrix_algebra(m, f));
  const std::string name =
      "M" + std::to_string(n) + "xM" + std::to_string(m) + "(" + f.to_string() + ")";
  return dump(spec_json_for(alg, name, {}));
}

std::string spec_for_group(const std::string& group, FieldCtx f) {
  std::vector<std::vector<std::size_t>> table;
  if (group == "klein") {
    table = klein_four_table();
  } else if (group == "s3") {
    table = symmetric3_table();
  } else if (group == "d4") {
    table = dihedral4_table();
  } else if (group == "q8") {
    table = quaternion_table();
  } else if (group.size() == 2 && group[0] == 'c' && group[1] >= '2' && group[1] <= '8') {
    table = cyclic_group_table(static_cast<std::size_t>(group[1] - '0'));
  } else {
    fail(Errc::InvalidSpec, "unknown group \"" + group +
                                "\" (expected c2..c8, klein, s3, d4, or q8)");
  }
  AlgebraSC::Ptr alg = group_algebra(table, f, "F[" + group + "]");
  std::map<std::string, Vec> elements;
  for (std::size_t g = 0; g < alg->dim(); ++g) {
    elements.emplace("g" + std::to_string(g), unit_vec(f, alg->dim(), g));
  }
  return dump(spec_json_for(alg, "F[" + group + "](" + f.to_string() + ")", elements));
}

std::string spec_for_triangular(std::size_t n, FieldCtx f) {
  AlgebraSC::Ptr alg = upper_triangular_algebra(n, f);
  std::map<std::string, Vec> elements;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      std::string name = "E" + std::to_string(r + 1) + std::to_string(c + 1);
      elements.emplace(std::move(name), unit_vec(f, alg->dim(), triangular_unit_index(n, r, c)));
    }
  }
  return dump(spec_json_for(alg, "T" + std::to_string(n) + "(" + f.to_string() + ")", elements));
}

}  // namespace soclelab
