#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bca/grp/group.hpp"

namespace bca::harness {

inline constexpr const char* kVersion = "0.1.0";

/// Bad user input (unknown group, malformed file, invalid option). The CLI
/// maps it to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogTags {
  bool abelian = false;
  bool cyclic = false;
  bool metacyclic = false;
  std::vector<std::uint64_t> primes;       // prime divisors of the order
  std::optional<std::uint64_t> p_group;    // the prime when |G| is a prime power > 1
  std::map<std::uint64_t, bool> p_solvable;  // per prime divisor
};

struct CatalogEntry {
  std::string name;
  std::string source = "builtin";  // or the file path
  std::shared_ptr<const grp::Group> group;
  CatalogTags tags;
};

CatalogTags compute_tags(const grp::Group& G);

/// Built-in groups, all from permutation generators, sorted by (order, name).
std::vector<CatalogEntry> catalog_default();

/// Built-ins plus every *.json group file in the directories listed in
/// BCA_CATALOG_DIR (colon separated). Throws UsageError on a bad file or a
/// duplicate name.
std::vector<CatalogEntry> catalog_full();

/// Looks the name up in catalog_full(); anything else that names an existing
/// file is loaded as a group file. Throws UsageError otherwise.
CatalogEntry resolve_group(const std::string& name_or_path);
CatalogEntry resolve_group(const std::string& name_or_path, const std::vector<CatalogEntry>& catalog);

}  // namespace bca::harness
