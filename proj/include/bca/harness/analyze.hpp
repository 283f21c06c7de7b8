#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "bca/blocks/blocks.hpp"
#include "bca/harness/catalog.hpp"

namespace bca::harness {

struct AnalyzeOptions {
  std::optional<std::uint64_t> m;
  std::optional<std::uint32_t> field;  // field order q for the block part
  std::uint64_t seed = 1;
  std::size_t class_cap = 64;
};

/// Field of order q and characteristic p; throws UsageError otherwise.
ff::FqField field_of_order(std::uint64_t q, std::uint64_t p);

/// Full report on (G, p). The "checks" member lists internal consistency
/// assertions; "ok" is false when one of them failed.
nlohmann::json analyze(const CatalogEntry& entry, std::uint64_t p, const AnalyzeOptions& opt);

/// Per-block report: idempotent support, augmentation, dimension, defect
/// group, principal flag, hh1 and the pipeline flags.
nlohmann::json blocks_report(const CatalogEntry& entry, std::uint64_t p, const AnalyzeOptions& opt);

}  // namespace bca::harness
