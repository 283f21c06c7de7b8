#include <doctest.h>

#include <algorithm>

#include "bca/algebra/algebra.hpp"
#include "bca/cocycle/cocycle.hpp"
#include "bca/gcoh/gcoh.hpp"
#include "bca/regprops/regprops.hpp"
#include "common.hpp"

using namespace bca::gcoh;
using bca::algebra::group_algebra;
using bca::algebra::hh1_dim;
using bca::algebra::trivial_module;
using bca::algebra::twisted_group_algebra;
using testutil::catalog;
using testutil::named;
using testutil::shared;

namespace {

// p-rank of G/G' read off the invariant factors.
std::size_t p_rank_abelianization(const Group& G, std::uint64_t p) {
  std::size_t r = 0;
  for (auto d : bca::grp::abelianization(G).invariant_factors) r += d % p == 0;
  return r;
}

std::uint32_t mult_order(std::uint64_t p, std::uint64_t m) {
  std::uint32_t e = 1;
  std::uint64_t v = p % m;
  while (v != 1 % m) {
    v = v * p % m;
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("first cohomology with trivial coefficients") {
  const auto F2 = FqField::make(2, 1), F3 = FqField::make(3, 1), F5 = FqField::make(5, 1);
  CHECK(h1(trivial_module(shared("C2"), F2)).h1_dim == 1);
  CHECK(h1(trivial_module(shared("C3"), F3)).h1_dim == 1);
  CHECK(h1(trivial_module(shared("C3"), F2)).h1_dim == 0);
  CHECK(h1(trivial_module(shared("S3"), F5)).h1_dim == 0);
  CHECK(h1(trivial_module(shared("C2xC2"), F2)).h1_dim == 2);
  CHECK(h1(trivial_module(shared("C3xC3"), F3)).h1_dim == 2);
  CHECK(h1(trivial_module(shared("C2"), F2, 3)).h1_dim == 3);
  CHECK(h1_trivial_dim(named("SL2(3)"), F3) == 1);
  for (auto F : {F2, F3, F5}) CHECK(h1_trivial_dim(named("A5"), F) == 0);
  CHECK(h1_trivial_dim(named("C6"), F2) == 1);

  const auto h = h1(trivial_module(shared("C2xC4"), F2), true);
  CHECK(h.h1_dim == 2);
  CHECK(h.b1_dim == 0);
  CHECK(h.z1_dim == 2);
  REQUIRE(h.basis.size() == 2);
  CHECK(h.basis[0].size() == 8);
}

TEST_CASE("trivial-module H1 matches the abelianization rank") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const std::size_t expect = p_rank_abelianization(*e.group, p);
      for (std::uint32_t k : {1u, 2u}) {
        const auto F = FqField::make(p, k);
        CHECK(h1_trivial_dim(*e.group, F) == expect);
        if (e.group->order() <= 24) CHECK(h1(trivial_module(e.group, F)).h1_dim == expect);
      }
    }
  }
}

TEST_CASE("H1 of a permutation module") {
  // F_2^2 with C2 swapping coordinates: H1 has dimension 0 (it is induced from the trivial subgroup).
  const auto F2 = FqField::make(2, 1);
  const auto C2 = shared("C2");
  bca::algebra::GModule M{C2, F2, 2, {}};
  M.action.push_back(bca::ff::FqMatrix::identity(F2, 2));
  bca::ff::FqMatrix sw(F2, 2, 2);
  sw.set(0, 1, F2.one());
  sw.set(1, 0, F2.one());
  M.action.push_back(sw);
  M.validate();
  const auto h = h1(M);
  CHECK(h.h1_dim == 0);
  CHECK(h.z1_dim == 1);
  CHECK(h.b1_dim == 1);
  auto bad = M;
  bad.action[0] = sw;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("twist characters") {
  const auto V = shared("C2xC2");
  const auto F3 = FqField::make(3, 1);
  const auto reps = bca::cocycle::h2_classes(V, 2, 3).representatives;
  REQUIRE(reps.size() == 2);
  for (Elem x = 0; x < 4; ++x) {
    const auto triv = twist_character(reps[0], F3, x);
    for (const auto& g : triv.action) CHECK(g.is_identity());
    const auto chi = twist_character(reps[1], F3, x);
    CHECK(chi.group->order() == 4);
    std::size_t nontrivial = 0;
    for (const auto& g : chi.action) nontrivial += !g.is_identity();
    CHECK(nontrivial == (x == 0 ? 0 : 2));
  }
}

TEST_CASE("centralizer decomposition examples") {
  const auto F2 = FqField::make(2, 1), F3 = FqField::make(3, 1);
  CHECK(hh1_twisted_via_centralizers(named("C2"), bca::cocycle::trivial_cocycle(shared("C2"), 1), F2) == 2);
  CHECK(hh1_group_algebra_via_centralizers(named("C2"), F2) == 2);
  std::vector<ClassContribution> br;
  CHECK(hh1_group_algebra_via_centralizers(named("S3"), F3, &br) == 1);
  REQUIRE(br.size() == 3);
  for (const auto& c : br) {
    CHECK(c.trivial_twist);
    CHECK(c.class_size * c.centralizer_order == 6);
    CHECK(c.h1_dim == (c.centralizer_order == 3 ? 1u : 0u));
  }
  CHECK(hh1_dim(group_algebra(named("S3"), F3)) == 1);
  for (const char* name : {"C7:C3", "C3:C4", "D10", "C15"})
    for (std::uint32_t p : {7u, 11u, 13u}) {
      const auto F = FqField::make(p, 1);
      if (named(name).order() % p == 0) continue;
      CHECK(hh1_group_algebra_via_centralizers(named(name), F) == 0);
      CHECK(hh1_dim(group_algebra(named(name), F)) == 0);
    }
}

TEST_CASE("twisted field selection") {
  CHECK(twisted_field(2, 1).q() == 2);
  CHECK(twisted_field(2, 3).q() == 4);
  CHECK(twisted_field(3, 2).q() == 3);
  CHECK(twisted_field(3, 4).q() == 9);
  CHECK(twisted_field(2, 15).q() == 16);
  CHECK(twisted_field(5, 12).q() == 25);
  for (std::uint64_t p : {2, 3, 5, 7})
    for (std::uint64_t m = 1; m <= 12; ++m) {
      if (m % p == 0) continue;
      double q = 1;
      for (std::uint32_t i = 0; i < mult_order(p, m); ++i) q *= static_cast<double>(p);
      if (q > FqField::kMaxOrder) {
        CHECK_THROWS(twisted_field(static_cast<std::uint32_t>(p), m));
        continue;
      }
      const auto F = twisted_field(static_cast<std::uint32_t>(p), m);
      CHECK(F.e() == mult_order(p, m));
      CHECK((F.q() - 1) % m == 0);
    }
  CHECK_THROWS(twisted_field(3, 6));
}

TEST_CASE("twisted decomposition equals the direct dimension") {
  for (const auto& e : catalog()) {
    const Group& G = *e.group;
    if (G.order() > 24 || G.order() == 1) continue;
    for (auto p : bca::ff::prime_divisors(G.order())) {
      CAPTURE(e.name);
      CAPTURE(p);
      const std::uint64_t m = bca::cocycle::default_m(G, p);
      const auto F = twisted_field(static_cast<std::uint32_t>(p), m);
      const auto cp = bca::regprops::commutator_index_set(G, p);
      for (const auto& c : bca::cocycle::h2_classes(e.group, m, p).representatives) {
        std::vector<ClassContribution> br;
        const std::size_t via = hh1_twisted_via_centralizers(G, c, F, &br);
        const std::size_t direct = hh1_dim(twisted_group_algebra(G, c, F));
        CHECK(via == direct);
        const auto reg = bca::cocycle::alpha_regular_set(c);
        std::size_t sum = 0;
        for (const auto& b : br) {
          sum += b.h1_dim;
          CHECK(b.trivial_twist == std::binary_search(reg.begin(), reg.end(), b.representative));
        }
        CHECK(sum == via);
        const auto w = bca::regprops::thm12_criterion(G, p, c);
        if (w) {
          CHECK(via >= 1);
          const auto cls = bca::grp::conjugacy_classes(G);
          const auto it = std::find_if(br.begin(), br.end(), [&](const ClassContribution& b) {
            for (const auto& k : cls)
              if (k.representative == b.representative)
                return std::binary_search(k.members.begin(), k.members.end(), *w);
            return false;
          });
          REQUIRE(it != br.end());
          CHECK(it->h1_dim >= 1);
        }
      }
    }
  }
}
