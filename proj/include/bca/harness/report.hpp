#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bca::harness {

inline constexpr const char* kReportSchema = "bca-report/1";

enum class Status { pass, fail, candidate, info };
std::string to_string(Status s);

struct CaseRecord {
  std::string check;
  std::string group;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::optional<std::size_t> class_index;
  nlohmann::json values = nlohmann::json::object();
  Status status = Status::pass;
  std::string witness;
};

struct VerificationReport {
  std::string suite;
  std::string version;
  std::uint64_t seed = 0;
  nlohmann::json options = nlohmann::json::object();
  std::vector<CaseRecord> cases;

  std::size_t count(Status s) const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const { return count(Status::fail) == 0 ? 0 : 1; }
  nlohmann::json to_json() const;
  /// Header line, then one line per case.
  std::string to_tsv() const;
};

}  // namespace bca::harness
