#include "bca/harness/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <sstream>

#include "bca/ff/field.hpp"
#include "bca/harness/io.hpp"

namespace bca::harness {

namespace {

using Perm = std::vector<std::uint32_t>;

Perm cycle_perm(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i + 1);
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) p[c[i] - 1] = c[(i + 1) % c.size()];
  return p;
}

// Affine maps i -> a i + b on Z/n, points 1..n standing for 0..n-1.
Perm affine_perm(std::uint32_t n, std::uint32_t a, std::uint32_t b) {
  Perm p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = (a * i + b) % n + 1;
  return p;
}

CatalogEntry builtin(std::string name, std::size_t degree, std::vector<Perm> gens) {
  CatalogEntry e;
  e.name = name;
  e.group = std::make_shared<const grp::Group>(grp::Group::from_permutations(std::move(name), degree, gens));
  e.tags = compute_tags(*e.group);
  return e;
}

}  // namespace

CatalogTags compute_tags(const grp::Group& G) {
  CatalogTags t;
  t.abelian = G.is_abelian();
  for (grp::Elem x = 0; x < G.order(); ++x)
    if (G.element_order(x) == G.order()) t.cyclic = true;
  t.metacyclic = grp::group_predicates(G).is_metacyclic;
  if (G.order() > 1) t.primes = ff::prime_divisors(G.order());
  if (t.primes.size() == 1) t.p_group = t.primes.front();
  for (auto p : t.primes) t.p_solvable[p] = grp::is_p_solvable(G, p);
  return t;
}

std::vector<CatalogEntry> catalog_default() {
  std::vector<CatalogEntry> out;
  for (std::uint32_t n = 1; n <= 16; ++n) out.push_back(builtin("C" + std::to_string(n), n, {affine_perm(n, 1, 1)}));
  out.push_back(builtin("C2xC2", 4, {cycle_perm(4, {{1, 2}}), cycle_perm(4, {{3, 4}})}));
  out.push_back(builtin("C2xC4", 6, {cycle_perm(6, {{1, 2}}), cycle_perm(6, {{3, 4, 5, 6}})}));
  out.push_back(builtin("C3xC3", 6, {cycle_perm(6, {{1, 2, 3}}), cycle_perm(6, {{4, 5, 6}})}));
  for (std::uint32_t n = 3; n <= 8; ++n)
    out.push_back(builtin("D" + std::to_string(2 * n), n, {affine_perm(n, 1, 1), affine_perm(n, n - 1, 0)}));
  out.push_back(builtin("Q8", 8, {{2, 4, 6, 7, 3, 8, 1, 5}, {3, 5, 4, 8, 7, 2, 6, 1}}));
  out.push_back(builtin("Q16", 16,
                        {{2, 4, 6, 8, 3, 11, 10, 7, 5, 14, 15, 13, 9, 16, 12, 1},
                         {3, 5, 7, 9, 10, 8, 12, 13, 14, 15, 4, 1, 16, 11, 2, 6}}));
  out.push_back(builtin("S3", 3, {cycle_perm(3, {{1, 2, 3}}), cycle_perm(3, {{1, 2}})}));
  out.push_back(builtin("S4", 4, {cycle_perm(4, {{1, 2, 3, 4}}), cycle_perm(4, {{1, 2}})}));
  out.push_back(builtin("A4", 4, {cycle_perm(4, {{1, 2, 3}}), cycle_perm(4, {{1, 2}, {3, 4}})}));
  out.push_back(builtin("A5", 5, {cycle_perm(5, {{1, 2, 3, 4, 5}}), cycle_perm(5, {{1, 2, 3}})}));
  out.push_back(builtin("SL2(3)", 8, {{1, 2, 4, 5, 3, 8, 6, 7}, {3, 6, 2, 5, 8, 1, 4, 7}}));
  out.push_back(builtin("C7:C3", 7, {affine_perm(7, 1, 1), affine_perm(7, 2, 0)}));
  out.push_back(builtin("C3:C4", 7, {cycle_perm(7, {{1, 2, 3}}), cycle_perm(7, {{2, 3}, {4, 5, 6, 7}})}));
  out.push_back(builtin("M16", 8, {affine_perm(8, 1, 1), affine_perm(8, 5, 0)}));
  std::stable_sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return a.group->order() < b.group->order();
  });
  return out;
}

std::vector<CatalogEntry> catalog_full() {
  std::vector<CatalogEntry> out = catalog_default();
  std::set<std::string> names;
  for (const auto& e : out) names.insert(e.name);
  const char* dirs = std::getenv("BCA_CATALOG_DIR");
  if (dirs == nullptr) return out;
  std::stringstream ss(dirs);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (dir.empty()) continue;
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw UsageError("BCA_CATALOG_DIR: not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator(dir))
      if (f.path().extension() == ".json") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      CatalogEntry e;
      e.group = std::make_shared<const grp::Group>(load_group_file(f.string()));
      e.name = e.group->name();
      e.source = f.string();
      if (!names.insert(e.name).second) throw UsageError(f.string() + ": duplicate group name " + e.name);
      e.tags = compute_tags(*e.group);
      out.push_back(std::move(e));
    }
  }
  return out;
}

CatalogEntry resolve_group(const std::string& name_or_path, const std::vector<CatalogEntry>& catalog) {
  for (const auto& e : catalog)
    if (e.name == name_or_path) return e;
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) {
    CatalogEntry e;
    e.group = std::make_shared<const grp::Group>(load_group_file(name_or_path));
    e.name = e.group->name();
    e.source = name_or_path;
    e.tags = compute_tags(*e.group);
    return e;
  }
  throw UsageError("unknown group: " + name_or_path);
}

CatalogEntry resolve_group(const std::string& name_or_path) { return resolve_group(name_or_path, catalog_full()); }

}  // namespace bca::harness
