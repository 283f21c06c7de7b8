#include <CLI11.hpp>
#include <iostream>
#include <numeric>

#include "bca/cocycle/cocycle.hpp"
#include "bca/ff/field.hpp"
#include "bca/harness/analyze.hpp"
#include "bca/harness/catalog.hpp"
#include "bca/harness/io.hpp"
#include "bca/harness/suites.hpp"

using namespace bca;
using harness::json;

namespace {

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    harness::write_text_file(path, text);
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

int groups_list() {
  std::cout << "name\torder\tsource\tabelian\tmetacyclic\tp_group\tprimes\tp_solvable\n";
  for (const auto& e : harness::catalog_full()) {
    std::string solv;
    for (auto [p, s] : e.tags.p_solvable) solv += (solv.empty() ? "" : ",") + std::to_string(p) + (s ? ":y" : ":n");
    std::cout << e.name << '\t' << e.group->order() << '\t' << e.source << '\t' << (e.tags.abelian ? "y" : "n")
              << '\t' << (e.tags.metacyclic ? "y" : "n") << '\t'
              << (e.tags.p_group ? std::to_string(*e.tags.p_group) : "-") << '\t' << join(e.tags.primes, ",")
              << '\t' << (solv.empty() ? "-" : solv) << '\n';
  }
  return 0;
}

int cocycles(const std::string& group, std::uint64_t m, std::optional<std::uint64_t> prime,
             const std::string& import_path, const std::string& json_path) {
  const auto catalog = harness::catalog_full();
  const auto entry = harness::resolve_group(group, catalog);
  if (m == 0) throw harness::UsageError("--m must be positive");
  std::uint64_t p = 2;
  if (prime) {
    p = *prime;
    if (!ff::is_prime(p)) throw harness::UsageError("--prime: " + std::to_string(p) + " is not prime");
    if (std::gcd(p, m) != 1) throw harness::UsageError("--m must be prime to --prime");
  } else {
    while (!ff::is_prime(p) || std::gcd(p, m) != 1) ++p;
  }
  const auto h2 = cocycle::h2_classes(entry.group, m, p);
  json out{{"group", entry.name},
           {"m", m},
           {"prime", p},
           {"invariant_factors", h2.invariant_factors},
           {"class_count", h2.class_count},
           {"truncated", h2.truncated}};
  auto& reps = out["representatives"] = json::array();
  for (const auto& c : h2.representatives) reps.push_back(harness::cocycle_to_json(c));
  if (!import_path.empty()) {
    const auto c = harness::cocycle_from_json(harness::read_json_file(import_path), catalog);
    if (c.group->name() != entry.name || c.m != m)
      throw harness::UsageError(import_path + ": cocycle is for another group or m");
    json cls = nullptr;
    for (std::size_t i = 0; i < h2.representatives.size(); ++i)
      if (cocycle::is_cohomologous(c, h2.representatives[i])) {
        cls = i;
        break;
      }
    out["imported_class"] = cls;
  }
  emit(json_path, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block and cohomology toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(harness::kVersion));

  auto* groups = app.add_subcommand("groups", "group catalog");
  groups->add_subcommand("list", "list catalog groups");
  groups->require_subcommand(1);

  std::string group, json_path, tsv_path, import_path;
  std::uint64_t prime = 0, seed = 1;
  std::optional<std::uint64_t> m, cprime;
  std::optional<std::uint32_t> field;

  auto* an = app.add_subcommand("analyze", "full report on a group and a prime");
  an->add_option("--group", group, "catalog name or group file")->required();
  an->add_option("--prime", prime)->required();
  an->add_option("--m", m, "cocycle order (default: p'-part of |G|)");
  an->add_option("--field", field, "field order for the block part");
  an->add_option("--seed", seed);
  an->add_option("--json", json_path, "write the report here instead of stdout");

  auto* bl = app.add_subcommand("blocks", "block decomposition");
  bl->add_option("--group", group)->required();
  bl->add_option("--prime", prime)->required();
  bl->add_option("--field", field);
  bl->add_option("--seed", seed);
  bl->add_option("--json", json_path);

  std::string suite;
  harness::SuiteOptions sopt;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(harness::suite_names()));
  ver->add_option("--max-order", sopt.max_order);
  ver->add_option("--primes", sopt.primes)->delimiter(',');
  ver->add_option("--m", sopt.m);
  ver->add_option("--seed", sopt.seed);
  ver->add_option("--field-override", sopt.field_override, "field order q");
  ver->add_option("--class-cap", sopt.class_cap);
  ver->add_option("--threads", sopt.threads);
  ver->add_option("--json", json_path, "write the JSON report");
  ver->add_option("--tsv", tsv_path, "write the TSV summary (- for stdout)");

  std::uint64_t cm = 0;
  auto* co = app.add_subcommand("cocycles", "H^2 class representatives");
  co->add_option("--group", group)->required();
  co->add_option("--m", cm)->required();
  co->add_option("--prime", cprime, "characteristic (default: least prime not dividing m)");
  co->add_option("--import", import_path, "cocycle file to validate and classify");
  co->add_option("--json", json_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (groups->parsed()) return groups_list();
    if (an->parsed() || bl->parsed()) {
      const auto entry = harness::resolve_group(group);
      harness::AnalyzeOptions aopt;
      aopt.m = m;
      aopt.field = field;
      aopt.seed = seed;
      const json r = an->parsed() ? harness::analyze(entry, prime, aopt) : harness::blocks_report(entry, prime, aopt);
      emit(json_path, r.dump(2) + "\n");
      return r.at("ok").get<bool>() ? 0 : 1;
    }
    if (ver->parsed()) {
      const auto rep = harness::run_suite(suite, sopt);
      if (!json_path.empty()) harness::write_text_file(json_path, rep.to_json().dump(2) + "\n");
      if (!tsv_path.empty()) emit(tsv_path, rep.to_tsv());
      for (const auto& c : rep.cases)
        if (c.status == harness::Status::fail || c.status == harness::Status::candidate)
          std::cerr << harness::to_string(c.status) << ": " << c.check << ' ' << c.group << " p=" << c.p
                    << " m=" << c.m << (c.class_index ? " class=" + std::to_string(*c.class_index) : "")
                    << (c.witness.empty() ? "" : " witness=" + c.witness) << ' ' << c.values.dump() << '\n';
      std::cout << suite << ": " << rep.cases.size() << " records, " << rep.count(harness::Status::pass)
                << " pass, " << rep.count(harness::Status::fail) << " fail, "
                << rep.count(harness::Status::candidate) << " candidate\n";
      return rep.exit_code();
    }
    if (co->parsed()) return cocycles(group, cm, cprime, import_path, json_path);
  } catch (const harness::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
