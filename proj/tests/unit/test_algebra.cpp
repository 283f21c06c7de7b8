#include <doctest.h>

#include <chrono>
#include <random>

#include "bca/algebra/algebra.hpp"
#include "bca/cocycle/cocycle.hpp"
#include "bca/gcoh/gcoh.hpp"
#include "common.hpp"

using namespace bca::algebra;
using bca::ff::FqField;
using testutil::catalog;
using testutil::named;
using testutil::shared;

namespace {

// Rank over Z/p by plain Gaussian elimination on int rows.
std::size_t rank_mod_p(std::vector<std::vector<int>> rows, int p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    int inv = 1;
    while (inv * rows[rank][c] % p != 1) ++inv;
    for (auto& v : rows[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Derivations of the twisted group algebra e_x e_y = z^t(x,y) e_xy over F_p,
// unknowns D[k][i] = coefficient of e_k in D(e_i).
std::size_t oracle_derivation_dim(const bca::grp::Group& G, int p, int z, const std::vector<std::uint32_t>& t) {
  const std::size_t n = G.order();
  auto w = [&](std::size_t x, std::size_t y) {
    int r = 1;
    for (std::uint32_t i = 0; i < t[x * n + y]; ++i) r = r * z % p;
    return r;
  };
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = G.mul(static_cast<bca::grp::Elem>(i), static_cast<bca::grp::Elem>(j));
      // coefficient of e_l in w(i,j) D(e_ij) - D(e_i) e_j - e_i D(e_j)
      for (std::size_t l = 0; l < n; ++l) {
        std::vector<int> row(n * n, 0);
        auto addc = [&](std::size_t k, std::size_t src, int v) { row[k * n + src] = ((row[k * n + src] + v) % p + p) % p; };
        addc(l, ij, w(i, j));
        for (std::size_t k = 0; k < n; ++k) {
          if (G.mul(static_cast<bca::grp::Elem>(k), static_cast<bca::grp::Elem>(j)) == l) addc(k, i, -w(k, j));
          if (G.mul(static_cast<bca::grp::Elem>(i), static_cast<bca::grp::Elem>(k)) == l) addc(k, j, -w(i, k));
        }
        rows.push_back(std::move(row));
      }
    }
  return n * n - rank_mod_p(std::move(rows), p);
}

// Exhaustive count of derivations of F_p[C_n] as n x n matrices.
std::size_t brute_force_derivations(const bca::grp::Group& G, int p) {
  const std::size_t n = G.order();
  std::size_t total = 1, count = 0;
  for (std::size_t i = 0; i < n * n; ++i) total *= static_cast<std::size_t>(p);
  std::vector<int> D(n * n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& v : D) {
      v = static_cast<int>(c % p);
      c /= p;
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        std::vector<int> lhs(n, 0);
        const std::size_t ij = G.mul(static_cast<bca::grp::Elem>(i), static_cast<bca::grp::Elem>(j));
        for (std::size_t k = 0; k < n; ++k) {
          lhs[k] += D[k * n + ij];
          lhs[G.mul(static_cast<bca::grp::Elem>(k), static_cast<bca::grp::Elem>(j))] -= D[k * n + i];
          lhs[G.mul(static_cast<bca::grp::Elem>(i), static_cast<bca::grp::Elem>(k))] -= D[k * n + j];
        }
        for (int v : lhs) ok = ok && ((v % p) + p) % p == 0;
      }
    if (ok) ++count;
  }
  return count;
}

std::size_t log_base(std::size_t v, std::size_t b) {
  std::size_t e = 0;
  while (v > 1) {
    v /= b;
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("group algebra structure constants") {
  const auto F2 = FqField::make(2, 1);
  const auto A1 = group_algebra(named("C1"), F2);
  CHECK(A1.dim() == 1);
  const auto A = group_algebra(named("C2"), F2);
  CHECK(A.dim() == 2);
  REQUIRE(A.sc(1, 1).size() == 1);
  CHECK(A.sc(1, 1)[0].k == 0);
  CHECK(A.sc(1, 1)[0].c == F2.one());
  CHECK(A.unit() == Vec{F2.one(), F2.zero()});
  CHECK(A.labels().size() == 2);

  const auto F4 = FqField::make(2, 2);
  const auto S3 = shared("S3");
  const auto B = group_algebra(*S3, F4);
  const auto T = twisted_group_algebra(*S3, bca::cocycle::trivial_cocycle(S3, 3), F4);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      REQUIRE(B.sc(i, j).size() == T.sc(i, j).size());
      CHECK(B.sc(i, j)[0].k == T.sc(i, j)[0].k);
      CHECK(B.sc(i, j)[0].c == T.sc(i, j)[0].c);
    }
}

TEST_CASE("twisted algebra validation") {
  const auto V = shared("C2xC2");
  const auto F3 = FqField::make(3, 1);
  const auto h2 = bca::cocycle::h2_classes(V, 2, 3);
  REQUIRE(h2.representatives.size() == 2);
  const auto A = twisted_group_algebra(*V, h2.representatives[1], F3);
  CHECK(A.unit() == A.basis_vector(0));
  CHECK(algebra_center(A).size() == 1);
  CHECK(hh1_dim(A) == 0);
  CHECK_THROWS_AS(twisted_group_algebra(*V, h2.representatives[1], FqField::make(2, 1)), std::domain_error);
  auto bad = h2.representatives[1];
  bad.at(1, 2) ^= 1;
  CHECK_THROWS_AS(twisted_group_algebra(*V, bad, F3), std::invalid_argument);
}

TEST_CASE("non-associative structure constants are rejected") {
  const auto F2 = FqField::make(2, 1);
  std::vector<std::vector<Term>> sc(9);
  for (std::uint32_t i = 0; i < 3; ++i) {
    sc[i] = {{i, F2.one()}};
    sc[i * 3] = {{i, F2.one()}};
  }
  sc[1 * 3 + 1] = {{2, F2.one()}};
  sc[1 * 3 + 2] = {{0, F2.one()}};
  const Vec unit{F2.one(), F2.zero(), F2.zero()};
  CHECK_THROWS_AS(StructAlgebra(F2, 3, sc, unit), std::invalid_argument);
  StructAlgebra::Options o;
  o.paranoid = true;
  CHECK_THROWS_AS(StructAlgebra(F2, 3, sc, unit, {}, {}, o), std::invalid_argument);
}

TEST_CASE("derivations by exhaustive search") {
  struct Case {
    const char* group;
    int p;
  };
  for (auto [name, p] : {Case{"C2", 2}, Case{"C3", 3}, Case{"C2xC2", 2}, Case{"C2", 3}, Case{"C4", 2}}) {
    CAPTURE(name);
    CAPTURE(p);
    const Group& G = named(name);
    const auto A = group_algebra(G, FqField::make(static_cast<std::uint32_t>(p), 1));
    const std::size_t d = log_base(brute_force_derivations(G, p), static_cast<std::size_t>(p));
    CHECK(derivation_space(A).dim == d);
  }
  const auto F2 = FqField::make(2, 1), F3 = FqField::make(3, 1);
  CHECK(hh1_dim(group_algebra(named("C2"), F2)) == 2);
  CHECK(hh1_dim(group_algebra(named("C3"), F3)) == 3);
  CHECK(derivation_space(group_algebra(named("C1"), F2)).dim == 0);
  CHECK(hh1_dim(group_algebra(named("C1"), F2)) == 0);
  CHECK(hh1_dim(group_algebra(named("C2"), F3)) == 0);
  CHECK(hh1_dim(group_algebra(named("C3"), FqField::make(2, 2))) == 0);
  CHECK(inner_derivation_space(group_algebra(named("S3"), F3)).dim == 3);
  CHECK(inner_derivation_space(group_algebra(named("C6"), F3)).dim == 0);
}

TEST_CASE("derivation dimensions against an independent elimination") {
  for (const auto& e : catalog()) {
    const Group& G = *e.group;
    if (G.order() > 12) continue;
    for (int p : {2, 3, 5}) {
      CAPTURE(e.name);
      CAPTURE(p);
      const auto A = group_algebra(G, FqField::make(static_cast<std::uint32_t>(p), 1));
      const std::vector<std::uint32_t> zero(G.order() * G.order(), 0);
      const std::size_t d = oracle_derivation_dim(G, p, 1, zero);
      CHECK(derivation_space(A, false, bca::ff::Elimination::dense).dim == d);
      CHECK(derivation_space(A, false, bca::ff::Elimination::sparse).dim == d);
    }
  }
  // Twisted: values in mu_2 inside F_3 and F_5.
  for (const char* name : {"C2xC2", "D8", "C2xC4", "A4", "D12"}) {
    for (int p : {3, 5}) {
      CAPTURE(name);
      CAPTURE(p);
      const auto G = shared(name);
      const auto F = FqField::make(static_cast<std::uint32_t>(p), 1);
      for (const auto& c : bca::cocycle::h2_classes(G, 2, static_cast<std::uint64_t>(p)).representatives) {
        const auto A = twisted_group_algebra(*G, c, F);
        CHECK(derivation_space(A).dim == oracle_derivation_dim(*G, p, p - 1, c.table));
      }
    }
  }
}

TEST_CASE("center, inner derivations and derivation bases") {
  for (const auto& e : catalog()) {
    const Group& G = *e.group;
    if (G.order() > 16) continue;
    CAPTURE(e.name);
    const std::size_t classes = bca::grp::conjugacy_classes(G).size();
    for (std::uint32_t p : {2u, 3u}) {
      const auto A = group_algebra(G, FqField::make(p, 1));
      const auto Z = algebra_center(A);
      CHECK(Z.size() == classes);
      for (const auto& z : Z) CHECK(is_central(A, z));
      CHECK(inner_derivation_space(A).dim + Z.size() == A.dim());
      if (G.is_abelian()) CHECK(Z.size() == A.dim());
      const auto D = derivation_space(A, true);
      REQUIRE(D.basis.size() == D.dim);
      for (const auto& M : D.basis) {
        CHECK(is_derivation(A, M));
        for (auto v : M.apply(A.unit())) CHECK(v.is_zero());
      }
      if (G.order() > 1) CHECK(is_derivation(A, inner_derivation(A, A.basis_vector(1))));
    }
  }
}

TEST_CASE("hh1 is invariant under cohomologous change") {
  std::mt19937_64 rng(23);
  for (const char* name : {"C2xC2", "D8", "A4", "C3xC3"}) {
    const auto G = shared(name);
    for (std::uint64_t p : {2, 3}) {
      const std::uint64_t m = bca::cocycle::default_m(*G, p);
      const auto F = bca::gcoh::twisted_field(static_cast<std::uint32_t>(p), m);
      for (const auto& c : bca::cocycle::h2_classes(G, m, p).representatives) {
        const std::size_t h = hh1_dim(twisted_group_algebra(*G, c, F));
        for (int k = 0; k < 2; ++k) {
          std::vector<std::int64_t> lambda(G->order(), 0);
          for (std::size_t i = 1; i < lambda.size(); ++i) lambda[i] = static_cast<std::int64_t>(rng() % m);
          const auto s = bca::cocycle::add(c, bca::cocycle::coboundary(G, m, lambda));
          CHECK(hh1_dim(twisted_group_algebra(*G, s, F)) == h);
        }
      }
    }
  }
}

TEST_CASE("hh1 is stable under field extension") {
  for (const auto& e : catalog()) {
    const Group& G = *e.group;
    if (G.order() > 12 || G.order() == 1) continue;
    for (auto p : bca::ff::prime_divisors(G.order())) {
      CAPTURE(e.name);
      const auto P = static_cast<std::uint32_t>(p);
      const std::size_t base = hh1_dim(group_algebra(G, FqField::make(P, 1)));
      CHECK(base > 0);
      CHECK(hh1_dim(group_algebra(G, FqField::make(P, 2))) == base);
      if (G.order() <= 8) CHECK(hh1_dim(group_algebra(G, FqField::make(P, 3))) == base);
    }
  }
}

TEST_CASE("ideals on central idempotents") {
  const auto F3 = FqField::make(3, 1);
  const Group& S3 = named("S3");
  const auto A = group_algebra(S3, F3);
  const auto whole = ideal_algebra_on_idempotent(A, A.unit());
  CHECK(whole.dim() == A.dim());
  CHECK(hh1_dim(whole) == hh1_dim(A));
  CHECK(ideal_algebra_on_idempotent(A, Vec(6, F3.zero())).dim() == 0);
  CHECK(ideal_basis(A, A.unit()).size() == 6);
  // (1 + t) / 2 for a transposition t is idempotent but not central.
  Vec e(6, F3.zero());
  e[0] = F3.from_int(2);
  e[*S3.find("(1,2)")] = F3.from_int(2);
  CHECK(is_idempotent(A, e));
  CHECK_FALSE(is_central(A, e));
  CHECK_THROWS_AS(ideal_algebra_on_idempotent(A, e), std::invalid_argument);
  // F_3[C2] splits as two copies of F_3.
  const auto B = group_algebra(named("C2"), F3);
  const Vec f{F3.from_int(2), F3.from_int(2)};
  CHECK(is_idempotent(B, f));
  const auto Bf = ideal_algebra_on_idempotent(B, f);
  CHECK(Bf.dim() == 1);
  CHECK(echelon_coordinates(ideal_basis(B, f), f).size() == 1);
}

TEST_CASE("conjugation modules") {
  const auto F2 = FqField::make(2, 1);
  const auto C4 = shared("C4");
  std::vector<Vec> all;
  for (std::size_t i = 0; i < 4; ++i) {
    Vec v(4, F2.zero());
    v[i] = F2.one();
    all.push_back(v);
  }
  const auto M = conjugation_module(C4, F2, all);
  M.validate();
  for (const auto& g : M.action) CHECK(g.is_identity());
  const auto S3 = shared("S3");
  std::vector<Vec> six;
  for (std::size_t i = 0; i < 6; ++i) {
    Vec v(6, F2.zero());
    v[i] = F2.one();
    six.push_back(v);
  }
  const auto N = conjugation_module(S3, F2, six);
  N.validate();
  std::size_t nontrivial = 0;
  for (const auto& g : N.action) nontrivial += !g.is_identity();
  CHECK(nontrivial == 5);
  Vec t(6, F2.zero());
  t[*S3->find("(1,2)")] = F2.one();
  CHECK_THROWS_AS(conjugation_module(S3, F2, {t}), std::invalid_argument);
  const auto T = trivial_module(S3, F2, 2);
  T.validate();
  CHECK(T.action.size() == 6);
}

TEST_CASE("order-100 group algebras") {
  std::vector<std::uint32_t> r(50), s(50);
  for (std::uint32_t i = 0; i < 50; ++i) {
    r[i] = (i + 1) % 50 + 1;
    s[i] = (50 - i) % 50 + 1;
  }
  const auto D = Group::from_permutations("D100", 50, {r, s});
  const auto C = bca::grp::cyclic_group(100);
  REQUIRE(D.order() == 100);
  const auto t0 = std::chrono::steady_clock::now();
  CHECK(hh1_dim(group_algebra(D, FqField::make(2, 1))) == 32);
  CHECK(hh1_dim(group_algebra(D, FqField::make(5, 1))) == 24);
  CHECK(hh1_dim(group_algebra(C, FqField::make(2, 1))) == 100);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 60.0);
  CHECK(bca::gcoh::hh1_group_algebra_via_centralizers(D, FqField::make(2, 1)) == 32);
}
