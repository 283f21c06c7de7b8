#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bca/harness/catalog.hpp"
#include "bca/harness/report.hpp"

namespace bca::harness {

struct SuiteOptions {
  std::size_t max_order = 24;
  std::vector<std::uint64_t> primes;  // empty: every prime divisor of |G|
  std::optional<std::uint64_t> m;     // default: p'-part of |G|
  std::uint64_t seed = 1;
  std::optional<std::uint32_t> field_override;  // field order q
  std::size_t class_cap = 64;
  unsigned threads = 0;  // 0: hardware concurrency
};

const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite or inconsistent options.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt,
                             const std::vector<CatalogEntry>& catalog);
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt);

}  // namespace bca::harness
