#include "bca/regprops/regprops.hpp"

#include <algorithm>
#include <stdexcept>

namespace bca::regprops {

std::string to_string(SpVariant v) { return v == SpVariant::centralizer ? "centralizer" : "sylow"; }

std::vector<Elem> commutator_index_set(const Group& G, std::uint64_t p) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x) {
    const grp::Subgroup C = grp::centralizer(G, x);
    const grp::Subgroup D = grp::derived_subgroup(G, C);
    if ((C.order() / D.order()) % p == 0) out.push_back(x);
  }
  return out;
}

std::vector<Elem> strong_nonschur_set(const Group& G, std::uint64_t p, SpVariant variant) {
  std::vector<Elem> out;
  for (Elem x = 1; x < G.order(); ++x) {
    if (!grp::is_p_element(G, x, p)) continue;
    const grp::Subgroup C = grp::centralizer(G, x);
    if (variant == SpVariant::centralizer) {
      if (!grp::derived_subgroup(G, C).contains(x)) out.push_back(x);
      continue;
    }
    const Group CG = grp::subgroup_as_group(G, C);
    const grp::Subgroup S = grp::sylow_subgroup(CG, p);
    const Elem xi = static_cast<Elem>(std::lower_bound(C.members.begin(), C.members.end(), x) - C.members.begin());
    if (!S.contains(xi)) throw std::logic_error("strong_nonschur_set: central p-element outside a Sylow subgroup");
    if (!grp::derived_subgroup(CG, S).contains(xi)) out.push_back(x);
  }
  return out;
}

std::optional<Elem> first_common(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  for (Elem x : a)
    if (std::binary_search(b.begin(), b.end(), x)) return x;
  return std::nullopt;
}

std::optional<Elem> thm12_criterion(const Group& G, std::uint64_t p, const cocycle::Cocycle2& c) {
  if (G.order() % p != 0)
    throw std::invalid_argument("thm12_criterion: p = " + std::to_string(p) + " does not divide |G|");
  return first_common(commutator_index_set(G, p), cocycle::alpha_regular_set(c));
}

Prop25Flags prop25_conditions(const Group& G, std::uint64_t p) {
  Prop25Flags f;
  f.non_p_perfect = !grp::is_p_perfect(G, p);
  const grp::Subgroup P = grp::sylow_subgroup(G, p);
  f.sylow_normal = grp::is_normal(G, P);
  const Group PG = grp::subgroup_as_group(G, P);
  const auto pred = grp::group_predicates(PG);
  f.center_not_in_derived = !pred.center_in_derived;
  const grp::Subgroup D = grp::derived_subgroup(PG);
  std::size_t exp_d = 1;
  for (Elem x : D.members) exp_d = std::max(exp_d, PG.element_order(x));
  f.derived_exponent_smaller = exp_d < pred.exponent;
  f.metacyclic = pred.is_metacyclic;
  return f;
}

PropertyReport property_report(const Group& G, std::uint64_t p) {
  PropertyReport r;
  r.group = G.name();
  r.p = p;
  r.c_p_set = commutator_index_set(G, p);
  r.s_p_centralizer = strong_nonschur_set(G, p, SpVariant::centralizer);
  r.s_p_sylow = strong_nonschur_set(G, p, SpVariant::sylow);
  if (G.order() % p == 0) {
    r.prop25 = prop25_conditions(G, p);
    if (!r.c_p_set.empty()) r.criterion_witness = r.c_p_set.front();
  }
  return r;
}

}  // namespace bca::regprops
