#include "bca/harness/io.hpp"

#include <fstream>
#include <sstream>

namespace bca::harness {

namespace {

template <class T>
T field_as(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw UsageError(what + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(what + ": bad \"" + key + "\": " + e.what());
  }
}

}  // namespace

grp::Group group_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("group file: expected a JSON object");
  const auto name = field_as<std::string>(j, "name", "group file");
  try {
    if (j.contains("table")) {
      const auto table = field_as<std::vector<std::vector<grp::Elem>>>(j, "table", name);
      std::vector<std::string> names;
      if (j.contains("names")) names = field_as<std::vector<std::string>>(j, "names", name);
      return grp::Group::from_table(name, table, std::move(names));
    }
    const auto degree = field_as<std::size_t>(j, "degree", name);
    const auto gens = field_as<std::vector<std::vector<std::uint32_t>>>(j, "generators", name);
    return grp::Group::from_permutations(name, degree, gens);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

grp::Group load_group_file(const std::string& path) {
  try {
    return group_from_json(read_json_file(path));
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json group_to_json(const grp::Group& G) {
  std::vector<std::string> names;
  for (grp::Elem x = 0; x < G.order(); ++x) names.push_back(G.element_name(x));
  return json{{"name", G.name()}, {"table", G.table()}, {"names", names}};
}

json cocycle_to_json(const cocycle::Cocycle2& c) {
  const std::size_t n = c.n();
  json rows = json::array();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint32_t> row(c.table.begin() + static_cast<std::ptrdiff_t>(x * n),
                                   c.table.begin() + static_cast<std::ptrdiff_t>((x + 1) * n));
    rows.push_back(row);
  }
  return json{{"group", c.group->name()}, {"m", c.m}, {"table", rows}};
}

cocycle::Cocycle2 cocycle_from_json(const json& j, const std::vector<CatalogEntry>& catalog) {
  if (!j.is_object()) throw UsageError("cocycle file: expected a JSON object");
  const auto gname = field_as<std::string>(j, "group", "cocycle file");
  const auto m = field_as<std::uint64_t>(j, "m", "cocycle file");
  const auto rows = field_as<std::vector<std::vector<std::uint32_t>>>(j, "table", "cocycle file");
  const CatalogEntry e = resolve_group(gname, catalog);
  const std::size_t n = e.group->order();
  if (rows.size() != n) throw UsageError("cocycle file: table must have " + std::to_string(n) + " rows");
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw UsageError("cocycle file: every row must have " + std::to_string(n) + " entries");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  cocycle::Cocycle2 c;
  try {
    c = cocycle::make_cocycle(e.group, m, std::move(flat));
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("cocycle file: ") + ex.what());
  }
  if (!cocycle::is_cocycle(c)) throw UsageError("cocycle file: table violates the 2-cocycle identity");
  return c;
}

json algebra_to_json(const algebra::StructAlgebra& A) {
  const auto& F = A.field();
  json sc = json::array();
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (const auto& t : A.sc(i, j)) sc.push_back({i, j, t.k, t.c.code});
  std::vector<std::uint32_t> unit;
  for (const auto& u : A.unit()) unit.push_back(u.code);
  return json{{"field", {{"p", F.p()}, {"e", F.e()}, {"modulus", F.modulus()}}},
              {"dim", A.dim()},
              {"labels", A.labels()},
              {"unit", unit},
              {"structure_constants", sc}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("write failed: " + path);
}

}  // namespace bca::harness
