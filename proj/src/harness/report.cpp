#include "bca/harness/report.hpp"

#include <sstream>

namespace bca::harness {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::candidate: return "candidate";
    case Status::info: return "info";
  }
  return "?";
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t k = 0;
  for (const auto& c : cases) k += c.status == s;
  return k;
}

namespace {

nlohmann::json record_json(const CaseRecord& c) {
  nlohmann::json j{{"check", c.check}, {"group", c.group}, {"p", c.p}, {"m", c.m}, {"status", to_string(c.status)}};
  j["class_index"] = c.class_index ? nlohmann::json(*c.class_index) : nlohmann::json(nullptr);
  j["values"] = c.values;
  j["witness"] = c.witness;
  return j;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["version"] = version;
  j["seed"] = seed;
  j["options"] = options;
  j["summary"] = {{"total", cases.size()},
                  {"pass", count(Status::pass)},
                  {"fail", count(Status::fail)},
                  {"candidate", count(Status::candidate)},
                  {"info", count(Status::info)}};
  auto& arr = j["cases"] = nlohmann::json::array();
  auto& cand = j["candidates"] = nlohmann::json::array();
  for (const auto& c : cases) {
    arr.push_back(record_json(c));
    if (c.status == Status::candidate) cand.push_back(record_json(c));
  }
  return j;
}

std::string VerificationReport::to_tsv() const {
  std::ostringstream out;
  out << "check\tgroup\tp\tm\tclass\tstatus\twitness\tvalues\n";
  for (const auto& c : cases) {
    out << c.check << '\t' << c.group << '\t' << c.p << '\t' << c.m << '\t'
        << (c.class_index ? std::to_string(*c.class_index) : "-") << '\t' << to_string(c.status) << '\t'
        << (c.witness.empty() ? "-" : c.witness) << '\t' << c.values.dump() << '\n';
  }
  return out.str();
}

}  // namespace bca::harness
