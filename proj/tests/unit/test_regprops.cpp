#include <doctest.h>

#include <algorithm>
#include <set>

#include "bca/cocycle/cocycle.hpp"
#include "bca/ff/field.hpp"
#include "bca/regprops/regprops.hpp"
#include "common.hpp"

using namespace bca::regprops;
using testutil::catalog;
using testutil::named;
using testutil::shared;

namespace {

bool contains(const std::vector<Elem>& v, Elem x) { return std::binary_search(v.begin(), v.end(), x); }

std::set<Elem> closure(const Group& G, std::set<Elem> s) {
  s.insert(0);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : cur)
        if (s.insert(G.mul(a, b)).second) grew = true;
  }
  return s;
}

std::vector<Elem> brute_centralizer(const Group& G, Elem x) {
  std::vector<Elem> c;
  for (Elem y = 0; y < G.order(); ++y)
    if (G.commute(x, y)) c.push_back(y);
  return c;
}

std::set<Elem> brute_derived(const Group& G, const std::vector<Elem>& H) {
  std::set<Elem> comms;
  for (Elem a : H)
    for (Elem b : H) comms.insert(G.commutator(a, b));
  return closure(G, comms);
}

bool is_p_elem(const Group& G, Elem x, std::uint64_t p) {
  std::uint64_t o = G.element_order(x);
  while (o % p == 0) o /= p;
  return o == 1;
}

std::vector<Elem> oracle_cp(const Group& G, std::uint64_t p) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x) {
    const auto C = brute_centralizer(G, x);
    if ((C.size() / brute_derived(G, C).size()) % p == 0) out.push_back(x);
  }
  return out;
}

std::vector<Elem> oracle_sp_centralizer(const Group& G, std::uint64_t p) {
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x)
    if (is_p_elem(G, x, p) && !brute_derived(G, brute_centralizer(G, x)).count(x)) out.push_back(x);
  return out;
}

std::vector<Elem> names_to_elems(const Group& G, std::initializer_list<const char*> ns) {
  std::vector<Elem> v;
  for (auto n : ns) v.push_back(*G.find(n));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("commutator index set examples") {
  const Group& S3 = named("S3");
  CHECK(commutator_index_set(S3, 3) == names_to_elems(S3, {"(1,2,3)", "(1,3,2)"}));
  CHECK(commutator_index_set(named("C2xC4"), 2).size() == 8);
  CHECK(commutator_index_set(named("Q8"), 2).size() == 8);
  CHECK(commutator_index_set(named("D16"), 2).size() == 16);
  CHECK(commutator_index_set(named("C15"), 5).size() == 15);
}

TEST_CASE("strong non-Schur set examples") {
  const Group& S3 = named("S3");
  for (auto v : {SpVariant::centralizer, SpVariant::sylow})
    CHECK(strong_nonschur_set(S3, 3, v) == names_to_elems(S3, {"(1,2,3)", "(1,3,2)"}));
  for (std::string name : {"Q8", "D8", "C2xC4", "Q16", "D16", "M16", "C3xC3", "C9"}) {
    CAPTURE(name);
    const Group& P = named(name);
    const std::uint64_t p = bca::ff::prime_divisors(P.order()).front();
    const auto D = bca::grp::derived_subgroup(P);
    std::vector<Elem> expect;
    for (Elem x = 0; x < P.order(); ++x)
      if (!std::binary_search(D.members.begin(), D.members.end(), x)) expect.push_back(x);
    // In Q16 and D16 the squares of a generator of the index-2 cyclic subgroup lie in P' but not in C(x)'.
    const std::size_t extra = name == "Q16" || name == "D16" ? 2 : 0;
    for (auto v : {SpVariant::centralizer, SpVariant::sylow}) {
      const auto S = strong_nonschur_set(P, p, v);
      CHECK(std::includes(S.begin(), S.end(), expect.begin(), expect.end()));
      CHECK(S.size() == expect.size() + extra);
    }
  }
  CHECK(to_string(SpVariant::sylow) == "sylow");
  CHECK(to_string(SpVariant::centralizer) == "centralizer");
}

TEST_CASE("criterion examples") {
  CHECK_THROWS_AS(thm12_criterion(named("S3"), 5, bca::cocycle::trivial_cocycle(shared("S3"), 2)),
                  std::invalid_argument);
  CHECK(thm12_criterion(named("S3"), 2, bca::cocycle::trivial_cocycle(shared("S3"), 3)) == Elem{0});
  CHECK(thm12_criterion(named("A5"), 5, bca::cocycle::trivial_cocycle(shared("A5"), 12)).has_value());
  CHECK(first_common({1, 4, 7}, {2, 4, 7}) == Elem{4});
  CHECK_FALSE(first_common({1, 3}, {2}).has_value());
}

TEST_CASE("five sufficient conditions on named groups") {
  auto f = prop25_conditions(named("SL2(3)"), 3);
  CHECK(f.non_p_perfect);
  f = prop25_conditions(named("SL2(3)"), 2);
  CHECK_FALSE(f.center_not_in_derived);
  CHECK(f.derived_exponent_smaller);
  CHECK(f.metacyclic);
  CHECK(f.sylow_normal);
  f = prop25_conditions(named("A5"), 5);
  CHECK_FALSE(f.sylow_normal);
  CHECK(f.metacyclic);
  CHECK_FALSE(f.non_p_perfect);
  f = prop25_conditions(named("A5"), 2);
  CHECK(f.center_not_in_derived);
  CHECK(f.derived_exponent_smaller);
  CHECK(f.metacyclic);
  const auto r = property_report(named("A4"), 3);
  CHECK(r.group == "A4");
  CHECK(r.p == 3);
  CHECK(r.prop25.non_p_perfect);
  CHECK(r.criterion_witness == Elem{0});
}

TEST_CASE("properties over the catalog and every cohomology class") {
  std::size_t differing = 0;
  for (const auto& e : catalog()) {
    const Group& G = *e.group;
    if (G.order() == 1) continue;
    for (auto p : bca::ff::prime_divisors(G.order())) {
      CAPTURE(e.name);
      CAPTURE(p);
      const auto cp = commutator_index_set(G, p);
      CHECK(cp == oracle_cp(G, p));
      CHECK(contains(cp, 0) == !bca::grp::is_p_perfect(G, p));
      if (G.is_abelian()) CHECK(cp.size() == G.order());
      const auto spc = strong_nonschur_set(G, p, SpVariant::centralizer);
      const auto sps = strong_nonschur_set(G, p, SpVariant::sylow);
      CHECK(spc == oracle_sp_centralizer(G, p));
      if (spc != sps) ++differing;
      for (const auto& cl : bca::grp::conjugacy_classes(G))
        for (const auto* set : {&cp, &spc, &sps})
          for (Elem y : cl.members) CHECK(contains(*set, y) == contains(*set, cl.representative));
      for (const auto* set : {&spc, &sps})
        for (Elem x : *set) CHECK(is_p_elem(G, x, p));
      if (bca::grp::is_p_solvable(G, p)) {
        CHECK_FALSE(spc.empty());
        CHECK_FALSE(sps.empty());
      }
      const auto P = bca::grp::sylow_subgroup(G, p);
      if (bca::grp::is_normal(G, P)) {
        const auto D = bca::grp::derived_subgroup(bca::grp::subgroup_as_group(G, P));
        bool nonempty = false;
        for (std::size_t i = 0; i < P.members.size(); ++i)
          if (!std::binary_search(D.members.begin(), D.members.end(), static_cast<Elem>(i))) {
            nonempty = true;
            CHECK(contains(sps, P.members[i]));
            CHECK(contains(spc, P.members[i]));
          }
        CHECK(nonempty);
      }
      const auto flags = prop25_conditions(G, p);
      const auto h2 = bca::cocycle::h2_classes(e.group, bca::cocycle::default_m(G, p), p);
      for (const auto& c : h2.representatives) {
        const auto reg = bca::cocycle::alpha_regular_set(c);
        CHECK(contains(reg, 0));
        for (const auto* set : {&spc, &sps})
          for (Elem x : *set) {
            CHECK(contains(cp, x));
            CHECK(contains(reg, x));
          }
        const auto w = thm12_criterion(G, p, c);
        if (flags.any()) CHECK(w.has_value());
        if (!bca::grp::is_p_perfect(G, p)) CHECK(w == Elem{0});
        if (e.tags.p_group == p) CHECK(w == Elem{0});
      }
    }
  }
  MESSAGE("catalog (group, prime) pairs where the two variants differ: " << differing);
  CHECK(differing == 0);
}
