#include "bca/harness/analyze.hpp"

#include <numeric>

#include "bca/algebra/algebra.hpp"
#include "bca/cocycle/cocycle.hpp"
#include "bca/ff/field.hpp"
#include "bca/gcoh/gcoh.hpp"
#include "bca/regprops/regprops.hpp"

namespace bca::harness {

namespace {

using ff::FqField;
using grp::Elem;
using grp::Group;
using json = nlohmann::json;

json names(const Group& G, const std::vector<Elem>& xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(G.element_name(x));
  return a;
}

json subgroup_json(const Group& G, const grp::Subgroup& H) {
  return {{"order", H.order()}, {"generators", names(G, grp::subgroup_generators(G, H))}};
}

json contributions(const Group& G, const std::vector<gcoh::ClassContribution>& br) {
  json a = json::array();
  for (const auto& c : br)
    a.push_back({{"representative", G.element_name(c.representative)},
                 {"class_size", c.class_size},
                 {"centralizer_order", c.centralizer_order},
                 {"trivial_twist", c.trivial_twist},
                 {"h1", c.h1_dim}});
  return a;
}

void check(json& checks, bool& ok, const std::string& what, bool pass) {
  checks.push_back({{"check", what}, {"pass", pass}});
  ok = ok && pass;
}

FqField block_field(const Group& G, std::uint64_t p, const AnalyzeOptions& opt) {
  if (opt.field) return field_of_order(*opt.field, p);
  return blocks::splitting_field(G, static_cast<std::uint32_t>(p));
}

json blocks_json(const CatalogEntry& entry, std::uint64_t p, const FqField& F, const AnalyzeOptions& opt,
                 json& checks, bool& ok) {
  const Group& G = *entry.group;
  const auto bl = blocks::block_decomposition(G, F, opt.seed);
  const bool npp = !grp::is_p_perfect(G, p);
  json arr = json::array();
  for (std::size_t i = 0; i < bl.size(); ++i) {
    const auto& b = bl[i];
    std::vector<Elem> support;
    for (Elem g = 0; g < G.order(); ++g)
      if (!b.idempotent[g].is_zero()) support.push_back(g);
    json jb{{"index", i},
            {"principal", b.is_principal},
            {"dim", b.basis.size()},
            {"augmentation", b.augmentation(F).code},
            {"idempotent_support", names(G, support)},
            {"defect_group", subgroup_json(G, b.defect_group)},
            {"defect_class_size", b.defect_class_size},
            {"hh1", algebra::hh1_dim(*b.algebra)}};
    if (b.defect_group.order() > 1) {
      const auto pair = blocks::max_brauer_pair(G, b.idempotent, b.defect_group, F, opt.seed);
      const auto iq = blocks::inertial_quotient(G, pair, p);
      jb["inertial_quotient"] = {{"order", iq.order},
                                 {"stabilizer_order", iq.stabilizer.order()},
                                 {"pc_order", iq.pc.order()}};
    }
    if (b.is_principal && npp) {
      const auto r = blocks::thm14_pipeline(entry.group, b, p, F);
      jb["thm14"] = {{"scott_trivial", r.scott_trivial},
                     {"conjugation_has_trivial_summand", r.conjugation_has_trivial_summand},
                     {"hh1_derivations", r.hh1_derivations},
                     {"hh1_group_cohomology", r.hh1_group_cohomology},
                     {"hypotheses_met", r.hypotheses_met},
                     {"conclusion_confirmed", r.conclusion_confirmed}};
      check(checks, ok, "thm14 principal block", r.conclusion_confirmed);
      check(checks, ok, "principal block hh1 equals H1(G, B)", r.hh1_derivations == r.hh1_group_cohomology);
    }
    arr.push_back(std::move(jb));
  }
  return arr;
}

}  // namespace

FqField field_of_order(std::uint64_t q, std::uint64_t p) {
  if (!ff::is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r > 1 && r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1 || e == 0) throw UsageError("field order " + std::to_string(q) + " is not a power of " + std::to_string(p));
  if (q > FqField::kMaxOrder) throw UsageError("field order " + std::to_string(q) + " is too large");
  return FqField::make(static_cast<std::uint32_t>(p), e);
}

json analyze(const CatalogEntry& entry, std::uint64_t p, const AnalyzeOptions& opt) {
  const Group& G = *entry.group;
  if (!ff::is_prime(p)) throw UsageError("--prime: " + std::to_string(p) + " is not prime");
  json out;
  out["version"] = kVersion;
  out["group"] = {{"name", entry.name}, {"source", entry.source}, {"order", G.order()}};
  out["prime"] = p;
  json checks = json::array();
  bool ok = true;

  json classes = json::array();
  for (const auto& c : grp::conjugacy_classes(G))
    classes.push_back({{"representative", G.element_name(c.representative)},
                       {"size", c.members.size()},
                       {"element_order", G.element_order(c.representative)},
                       {"centralizer_order", G.order() / c.members.size()}});
  out["conjugacy_classes"] = classes;
  out["abelianization"] = grp::abelianization(G).invariant_factors;
  out["p_perfect"] = grp::is_p_perfect(G, p);
  out["p_solvable"] = grp::is_p_solvable(G, p);

  const grp::Subgroup S = grp::sylow_subgroup(G, p);
  const Group SG = grp::subgroup_as_group(G, S);
  const auto pred = grp::group_predicates(SG);
  out["sylow"] = subgroup_json(G, S);
  out["sylow"]["normal"] = grp::is_normal(G, S);
  out["sylow"]["abelian"] = SG.is_abelian();
  out["sylow"]["metacyclic"] = pred.is_metacyclic;
  out["sylow"]["exponent"] = pred.exponent;
  if (G.order() % p == 0) {
    out["O_p_residual"] = subgroup_json(G, grp::p_residual(G, p));
    const auto f = regprops::prop25_conditions(G, p);
    out["prop25_flags"] = {{"i", f.non_p_perfect},
                           {"ii", f.sylow_normal},
                           {"iii", f.center_not_in_derived},
                           {"iv", f.derived_exponent_smaller},
                           {"v", f.metacyclic}};
  }

  const auto cp = regprops::commutator_index_set(G, p);
  out["c_p"] = names(G, cp);
  out["s_p_centralizer"] = names(G, regprops::strong_nonschur_set(G, p, regprops::SpVariant::centralizer));
  out["s_p_sylow"] = names(G, regprops::strong_nonschur_set(G, p, regprops::SpVariant::sylow));

  std::uint64_t m = opt.m ? *opt.m : cocycle::default_m(G, p);
  if (std::gcd(m, p) != 1) throw UsageError("--m must be prime to p");
  const auto h2 = cocycle::h2_classes(entry.group, m, p, opt.class_cap);
  const FqField Ft = gcoh::twisted_field(static_cast<std::uint32_t>(p), m);
  out["h2"] = {{"m", m},
               {"invariant_factors", h2.invariant_factors},
               {"class_count", h2.class_count},
               {"truncated", h2.truncated},
               {"field", Ft.name()}};
  json cls = json::array();
  for (std::size_t i = 0; i < h2.representatives.size(); ++i) {
    const auto& c = h2.representatives[i];
    const auto areg = cocycle::alpha_regular_set(c);
    const auto w = regprops::first_common(cp, areg);
    const std::size_t hh1 = algebra::hh1_dim(algebra::twisted_group_algebra(G, c, Ft));
    std::vector<gcoh::ClassContribution> br;
    const std::size_t via = gcoh::hh1_twisted_via_centralizers(G, c, Ft, &br);
    check(checks, ok, "class " + std::to_string(i) + " centralizer formula", hh1 == via);
    if (w) check(checks, ok, "class " + std::to_string(i) + " criterion implies hh1 > 0", hh1 >= 1);
    json jc{{"index", i},
            {"alpha_regular", names(G, areg)},
            {"hh1", hh1},
            {"breakdown", contributions(G, br)}};
    jc["criterion_witness"] = w ? json(G.element_name(*w)) : json(nullptr);
    cls.push_back(std::move(jc));
  }
  out["h2"]["classes"] = cls;

  if (G.order() % p == 0) {
    const FqField Fb = block_field(G, p, opt);
    out["blocks"] = {{"field", Fb.name()}, {"list", blocks_json(entry, p, Fb, opt, checks, ok)}};
  }
  out["checks"] = checks;
  out["ok"] = ok;
  return out;
}

json blocks_report(const CatalogEntry& entry, std::uint64_t p, const AnalyzeOptions& opt) {
  const Group& G = *entry.group;
  if (!ff::is_prime(p)) throw UsageError("--prime: " + std::to_string(p) + " is not prime");
  const FqField F = block_field(G, p, opt);
  json checks = json::array();
  bool ok = true;
  json out{{"version", kVersion}, {"group", entry.name}, {"prime", p}, {"field", F.name()}};
  out["blocks"] = blocks_json(entry, p, F, opt, checks, ok);
  out["checks"] = checks;
  out["ok"] = ok;
  return out;
}

}  // namespace bca::harness
