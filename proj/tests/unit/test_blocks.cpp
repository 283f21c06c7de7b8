#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bca/algebra/algebra.hpp"
#include "bca/blocks/blocks.hpp"
#include "bca/gcoh/gcoh.hpp"
#include "common.hpp"

using namespace bca::blocks;
using bca::algebra::group_algebra;
using bca::algebra::hh1_dim;
using testutil::catalog;
using testutil::named;
using testutil::shared;

namespace {

Vec unit_vec(const Group& G, const FqField& F) {
  Vec v(G.order(), F.zero());
  v[0] = F.one();
  return v;
}

Vec add(const FqField& F, Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], b[i]);
  return a;
}

std::size_t defect_of(const Block& b) { return b.defect_group.order(); }

// Euler phi for the cyclic automorphism bound.
std::uint64_t phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto p : bca::ff::prime_divisors(n)) r = r / p * (p - 1);
  return r;
}

}  // namespace

TEST_CASE("p-groups have a single block") {
  for (const char* name : {"C4", "Q8", "D8", "C3xC3", "C9", "Q16"}) {
    CAPTURE(name);
    const Group& G = named(name);
    const std::uint32_t p = static_cast<std::uint32_t>(bca::ff::prime_divisors(G.order()).front());
    const auto F = FqField::make(p, 1);
    const auto bl = block_decomposition(G, F, 1);
    REQUIRE(bl.size() == 1);
    CHECK(bl[0].idempotent == unit_vec(G, F));
    CHECK(bl[0].is_principal);
    CHECK(defect_of(bl[0]) == G.order());
    CHECK(&principal_block(bl, F) == &bl[0]);
    const auto pair = max_brauer_pair(G, bl[0].idempotent, bl[0].defect_group, F, 1);
    CHECK(pair.C == bca::grp::center(G));
    CHECK(inertial_quotient(G, pair, p).order == 1);
  }
}

TEST_CASE("semisimple and non-split examples") {
  const auto F3 = FqField::make(3, 1);
  const auto bl = block_decomposition(named("C2"), F3, 1);
  REQUIRE(bl.size() == 2);
  for (const auto& b : bl) {
    CHECK(defect_of(b) == 1);
    CHECK(b.basis.size() == 1);
    CHECK(hh1_dim(*b.algebra) == 0);
  }
  CHECK(bl[0].is_principal);
  CHECK(bl[0].idempotent == Vec{F3.from_int(2), F3.from_int(2)});
  // F_2[C3] is F_2 x F_4 over F_2 and splits further over F_4.
  CHECK(frobenius_block_count(named("C3"), FqField::make(2, 1)) == 2);
  CHECK(block_decomposition(named("C3"), FqField::make(2, 1), 1).size() == 2);
  CHECK(block_decomposition(named("C3"), FqField::make(2, 2), 1).size() == 3);
  CHECK(block_decomposition(named("C7"), FqField::make(2, 1), 1).size() == 3);
}

TEST_CASE("SL2(3) at p = 3") {
  const auto G = shared("SL2(3)");
  const auto F = splitting_field(*G, 3);
  CHECK(F.q() == 9);
  const auto A = group_algebra(*G, F);
  CHECK(bca::algebra::algebra_center(A).size() == 7);
  const auto bl = block_decomposition(*G, F, 1);
  REQUIRE(bl.size() == 3);
  const Block& b0 = principal_block(bl, F);
  CHECK(b0.is_principal);
  CHECK(b0.augmentation(F) == F.one());
  CHECK(b0.basis.size() == 3);
  CHECK(defect_of(b0) == 3);
  CHECK(hh1_dim(*b0.algebra) == 3);
  std::multiset<std::size_t> dims, defects;
  for (const auto& b : bl) {
    dims.insert(b.basis.size());
    defects.insert(defect_of(b));
  }
  CHECK(dims == std::multiset<std::size_t>{3, 9, 12});
  CHECK(defects == std::multiset<std::size_t>{1, 3, 3});
  for (const auto& b : bl) {
    if (b.is_principal || defect_of(b) != 3) continue;
    CHECK(b.basis.size() == 12);
    CHECK(hh1_dim(*b.algebra) == 3);
    CHECK(b.augmentation(F).is_zero());
  }
  const auto r = thm14_pipeline(G, b0, 3, F);
  CHECK(r.defect_order == 3);
  CHECK(r.non_p_perfect);
  CHECK(r.scott_trivial);
  CHECK(r.conjugation_has_trivial_summand);
  CHECK(r.hypotheses_met);
  CHECK(r.conclusion_confirmed);
  CHECK(r.hh1_derivations == 3);
  CHECK(r.hh1_group_cohomology == 3);
  CHECK(bca::grp::p_residual(*G, 3).order() == 8);
}

TEST_CASE("pipeline reports unmet hypotheses") {
  const auto G = shared("A5");
  const auto F = FqField::make(5, 1);
  const auto bl = block_decomposition(*G, F, 1);
  const auto r = thm14_pipeline(G, principal_block(bl, F), 5, F);
  CHECK_FALSE(r.non_p_perfect);
  CHECK_FALSE(r.hypotheses_met);
  CHECK_FALSE(r.conclusion_confirmed);
}

TEST_CASE("S3 at p = 3: Brauer pair and inertial quotient") {
  const Group& G = named("S3");
  const auto F = FqField::make(3, 1);
  const auto bl = block_decomposition(G, F, 1);
  REQUIRE(bl.size() == 1);
  const auto& b = bl[0];
  CHECK(defect_of(b) == 3);
  const auto pair = max_brauer_pair(G, b.idempotent, b.defect_group, F, 1);
  CHECK(pair.C.order() == 3);
  CHECK(pair.e == Vec{F.one(), F.zero(), F.zero()});
  const auto iq = inertial_quotient(G, pair, 3);
  CHECK(iq.order == 2);
  CHECK(iq.stabilizer.order() == 6);
  CHECK(iq.pc.order() == 3);
  // Trivial P: the pair is the block itself.
  const auto F2 = FqField::make(2, 1);
  for (const auto& c : block_decomposition(G, F2, 1)) {
    if (defect_of(c) != 1) continue;
    const auto tp = max_brauer_pair(G, c.idempotent, c.defect_group, F2, 1);
    CHECK(tp.C.order() == 6);
    CHECK(tp.e == c.idempotent);
  }
}

TEST_CASE("Brauer map") {
  const auto F = FqField::make(2, 1);
  const Group& G = named("S4");
  const auto A = group_algebra(G, F);
  const auto one = unit_vec(G, F);
  std::vector<Vec> xs;
  for (Elem g = 0; g < G.order(); ++g) {
    Vec v(G.order(), F.zero());
    v[g] = F.one();
    xs.push_back(v);
  }
  CHECK(brauer_map(G, bca::grp::trivial_subgroup(), xs[5], F) == xs[5]);
  std::mt19937_64 rng(29);
  for (const auto& D : bca::grp::p_subgroups_up_to_conjugacy(G, 2)) {
    CAPTURE(D.order());
    const auto C = bca::grp::centralizer_of(G, D);
    const Group CG = bca::grp::subgroup_as_group(G, C);
    const auto AC = group_algebra(CG, F);
    Vec cone(C.order(), F.zero());
    cone[0] = F.one();
    CHECK(brauer_map(G, D, one, F) == cone);
    // D-fixed elements: sums over D-conjugation orbits.
    std::vector<Vec> orbit_sums;
    std::vector<bool> seen(G.order(), false);
    for (Elem g = 0; g < G.order(); ++g) {
      if (seen[g]) continue;
      Vec v(G.order(), F.zero());
      for (Elem d : D.members) {
        const Elem h = G.mul(G.mul(d, g), G.inv(d));
        if (!seen[h]) v[h] = F.one();
        seen[h] = true;
      }
      orbit_sums.push_back(v);
    }
    auto random_fixed = [&] {
      Vec v(G.order(), F.zero());
      for (const auto& o : orbit_sums)
        if (rng() & 1) v = add(F, v, o);
      return v;
    };
    for (int k = 0; k < 10; ++k) {
      const Vec a = random_fixed(), b = random_fixed();
      CHECK(brauer_map(G, D, A.mul(a, b), F) == AC.mul(brauer_map(G, D, a, F), brauer_map(G, D, b, F)));
    }
    if (D.order() > 1) {
      Vec t(G.order(), F.zero());
      for (Elem g = 0; g < G.order(); ++g)
        if (!std::binary_search(C.members.begin(), C.members.end(), g)) {
          t[g] = F.one();
          break;
        }
      bool fixed = true;
      for (Elem d : D.members)
        for (Elem g = 0; g < G.order(); ++g)
          if (t[g] != t[G.mul(G.mul(d, g), G.inv(d))]) fixed = false;
      if (!fixed) CHECK_THROWS_AS(brauer_map(G, D, t, F), std::invalid_argument);
    }
  }
}

TEST_CASE("permutation modules and the trivial summand test") {
  const auto F2 = FqField::make(2, 1), F3 = FqField::make(3, 1);
  const auto S3 = shared("S3");
  CHECK(trivial_summand_test(bca::algebra::trivial_module(S3, F2)));
  for (const auto& H : bca::grp::all_subgroups(*S3))
    for (const auto& F : {F2, F3}) {
      const std::size_t index = 6 / H.order();
      const auto M = permutation_module(S3, H, F);
      CHECK(M.dim == index);
      M.validate();
      CHECK(trivial_summand_test(M) == (index % F.p() != 0));
    }
  const auto S4 = shared("S4");
  const auto F = FqField::make(2, 1);
  CHECK(scott_trivial_check(S4, bca::grp::sylow_subgroup(*S4, 2), F));
  CHECK_FALSE(scott_trivial_check(S4, bca::grp::trivial_subgroup(), F));
  const auto Q8 = shared("Q8");
  CHECK(scott_trivial_check(Q8, bca::grp::whole_group(*Q8), F));
}

TEST_CASE("splitting fields") {
  CHECK(splitting_field(named("A5"), 2).q() == 16);
  CHECK(splitting_field(named("A5"), 3).q() == 81);
  CHECK(splitting_field(named("A5"), 5).q() == 25);
  CHECK(splitting_field(named("S4"), 2).q() == 4);
  CHECK(splitting_field(named("Q8"), 2).q() == 2);
  CHECK(splitting_field(named("C7:C3"), 7).q() == 7);
}

TEST_CASE("block properties over the catalog") {
  for (const auto& e : catalog()) {
    const Group& G = *e.group;
    if (G.order() > 24 || G.order() == 1) continue;
    for (auto p : bca::ff::prime_divisors(G.order())) {
      CAPTURE(e.name);
      CAPTURE(p);
      const auto F = splitting_field(G, static_cast<std::uint32_t>(p));
      const auto A = group_algebra(G, F);
      const auto bl = block_decomposition(G, F, 1);
      CHECK(bl.size() == frobenius_block_count(G, F));
      Vec sum(G.order(), F.zero());
      std::size_t hh1_sum = 0, dim_sum = 0;
      for (std::size_t i = 0; i < bl.size(); ++i) {
        sum = add(F, sum, bl[i].idempotent);
        CHECK(bca::algebra::is_central(A, bl[i].idempotent));
        for (std::size_t j = 0; j < bl.size(); ++j) {
          const Vec prod = A.mul(bl[i].idempotent, bl[j].idempotent);
          CHECK(prod == (i == j ? bl[i].idempotent : Vec(G.order(), F.zero())));
        }
        hh1_sum += hh1_dim(*bl[i].algebra);
        dim_sum += bl[i].basis.size();
        CHECK(bca::grp::p_part(defect_of(bl[i]), p) == defect_of(bl[i]));
        if (bl[i].is_principal) CHECK(defect_of(bl[i]) == bca::grp::p_part(G.order(), p));
        // HH1(B) = H1(G, B) for the conjugation action.
        const auto M = bca::algebra::conjugation_module(e.group, F, bl[i].basis);
        CHECK(bca::gcoh::h1(M).h1_dim == hh1_dim(*bl[i].algebra));
        if (defect_of(bl[i]) > 1) {
          const auto pair = max_brauer_pair(G, bl[i].idempotent, bl[i].defect_group, F, 1);
          const auto iq = inertial_quotient(G, pair, p);
          CHECK(iq.order % p != 0);
          const auto PG = bca::grp::subgroup_as_group(G, bl[i].defect_group);
          if (bca::grp::abelianization(PG).invariant_factors.size() == 1 && PG.is_abelian())
            CHECK(phi(PG.order()) % iq.order == 0);
          if (G.is_abelian()) CHECK(iq.order == 1);
        }
        // Monotonicity of nonvanishing Brauer images along subgroups of the defect group.
        for (const auto& D : bca::grp::all_subgroups(G)) {
          if (!bca::grp::is_subset(D, bl[i].defect_group)) continue;
          bool nonzero = false;
          for (auto v : brauer_map(G, D, bl[i].idempotent, F)) nonzero = nonzero || !v.is_zero();
          CHECK(nonzero);
        }
      }
      CHECK(sum == unit_vec(G, F));
      CHECK(dim_sum == G.order());
      CHECK(hh1_sum == hh1_dim(A));
      CHECK(std::count_if(bl.begin(), bl.end(), [](const Block& b) { return b.is_principal; }) == 1);
      for (std::uint64_t seed : {2, 3}) {
        const auto other = block_decomposition(G, F, seed);
        REQUIRE(other.size() == bl.size());
        for (std::size_t i = 0; i < bl.size(); ++i) CHECK(other[i].idempotent == bl[i].idempotent);
      }
    }
  }
}
