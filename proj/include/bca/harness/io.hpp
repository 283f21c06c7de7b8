#pragma once

#include <string>

#include <json.hpp>

#include "bca/algebra/algebra.hpp"
#include "bca/cocycle/cocycle.hpp"
#include "bca/grp/group.hpp"
#include "bca/harness/catalog.hpp"

namespace bca::harness {

using nlohmann::json;

/// {"name", "degree", "generators"} or {"name", "table"}. Throws UsageError,
/// carrying the group validator's message when an axiom fails.
grp::Group group_from_json(const json& j);
grp::Group load_group_file(const std::string& path);
json group_to_json(const grp::Group& G);

/// {"group", "m", "table"}; the group name is resolved in the catalog.
json cocycle_to_json(const cocycle::Cocycle2& c);
/// Throws UsageError unless the table is a 2-cocycle of the named group.
cocycle::Cocycle2 cocycle_from_json(const json& j, const std::vector<CatalogEntry>& catalog);

/// {"field": {"p", "e", "modulus"}, "dim", "unit", "structure_constants":
/// [[i, j, k, c], ...]} with field elements as coefficient codes.
json algebra_to_json(const algebra::StructAlgebra& A);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace bca::harness
