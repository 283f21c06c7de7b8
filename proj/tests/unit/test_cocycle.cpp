#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "bca/cocycle/cocycle.hpp"
#include "bca/ff/field.hpp"
#include "common.hpp"

using namespace bca::cocycle;
using testutil::catalog;
using testutil::shared;

namespace {

bool oracle_is_cocycle(const Group& G, std::uint64_t m, const std::vector<std::uint32_t>& t) {
  const std::size_t n = G.order();
  auto at = [&](Elem x, Elem y) { return std::uint64_t{t[x * n + y]}; };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if ((at(G.mul(x, y), z) + at(x, y)) % m != (at(x, G.mul(y, z)) + at(y, z)) % m) return false;
  return true;
}

std::vector<Elem> oracle_alpha_regular(const Cocycle2& c) {
  const Group& G = *c.group;
  std::vector<Elem> out;
  for (Elem x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (Elem y = 0; y < G.order() && ok; ++y)
      if (G.commute(x, y)) ok = c.at(x, y) == c.at(y, x);
    if (ok) out.push_back(x);
  }
  return out;
}

Cocycle2 random_shift(const Cocycle2& c, std::mt19937_64& rng) {
  std::vector<std::int64_t> lambda(c.n());
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  for (auto& v : lambda) v = d(rng);
  return add(c, coboundary(c.group, c.m, lambda));
}

// Orders of the Schur multipliers of the catalog groups; all are cyclic.
const std::map<std::string, std::uint64_t> kSchur = {
    {"C2xC2", 2}, {"C2xC4", 2}, {"C3xC3", 3}, {"D8", 2}, {"D12", 2}, {"D16", 2},
    {"A4", 2},    {"S4", 2},    {"A5", 2}};

std::uint64_t expected_classes(const std::string& name, std::uint64_t m) {
  const auto it = kSchur.find(name);
  return it == kSchur.end() ? 1 : std::gcd(it->second, m);
}

}  // namespace

TEST_CASE("cocycle construction and validation") {
  const auto V = shared("C2xC2");
  CHECK(is_cocycle(trivial_cocycle(V, 2)));
  CHECK_THROWS_AS(make_cocycle(V, 2, std::vector<std::uint32_t>(15, 0)), std::invalid_argument);
  CHECK_THROWS_AS(make_cocycle(V, 2, std::vector<std::uint32_t>(16, 2)), std::invalid_argument);
  CHECK_THROWS_AS(make_cocycle(V, 0, std::vector<std::uint32_t>(16, 0)), std::invalid_argument);

  const auto c = coboundary(V, 5, {3, 3, 3, 3});
  CHECK(std::all_of(c.table.begin(), c.table.end(), [](auto v) { return v == 3; }));
  CHECK(normalize(c) == trivial_cocycle(V, 5));
  CHECK(coboundary(V, 5, {0, 0, 0, 0}) == trivial_cocycle(V, 5));
}

TEST_CASE("perturbed cocycles against a triple-loop oracle") {
  std::mt19937_64 rng(11);
  for (const char* name : {"C2", "C3", "S3", "C2xC2", "Q8", "A4"}) {
    const auto G = shared(name);
    const std::uint64_t m = 6;
    std::vector<std::int64_t> lambda(G->order());
    for (auto& v : lambda) v = static_cast<std::int64_t>(rng() % m);
    const auto c = coboundary(G, m, lambda);
    CHECK(is_cocycle(c));
    CHECK(oracle_is_cocycle(*G, m, c.table));
    for (Elem x = 0; x < G->order(); ++x) {
      if (x == 0) continue;
      auto bad = c;
      bad.at(0, x) = static_cast<std::uint32_t>((bad.at(0, x) + 1) % m);
      CHECK_FALSE(is_cocycle(bad));
    }
    for (int trial = 0; trial < 40; ++trial) {
      auto t = c;
      const Elem x = static_cast<Elem>(rng() % G->order()), y = static_cast<Elem>(rng() % G->order());
      t.at(x, y) = static_cast<std::uint32_t>((t.at(x, y) + 1 + rng() % (m - 1)) % m);
      CHECK(is_cocycle(t) == oracle_is_cocycle(*G, m, t.table));
    }
  }
}

TEST_CASE("normalization") {
  std::mt19937_64 rng(5);
  for (const auto& e : catalog()) {
    if (e.group->order() > 24) continue;
    CAPTURE(e.name);
    const auto h2 = h2_classes(e.group, 12, 5);
    for (const auto& r : h2.representatives) {
      CHECK(normalize(r) == r);
      const auto s = random_shift(r, rng);
      const auto n = normalize(s);
      for (Elem x = 0; x < e.group->order(); ++x) {
        CHECK(n.at(0, x) == 0);
        CHECK(n.at(x, 0) == 0);
      }
      CHECK(is_cocycle(n));
      CHECK(is_cohomologous(n, r));
    }
  }
}

TEST_CASE("class groups match known Schur multipliers") {
  for (const auto& e : catalog()) {
    CAPTURE(e.name);
    const std::uint64_t n = e.group->order();
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const std::uint64_t m = default_m(*e.group, p);
      CHECK(m * (n / m) == n);
      CHECK(std::gcd(m, p) == 1);
      if (n > 24 && p != 2) continue;
      const auto h2 = h2_classes(e.group, m, p);
      CAPTURE(p);
      CHECK(h2.class_count == expected_classes(e.name, m));
      std::uint64_t prod = 1;
      for (auto d : h2.invariant_factors) prod *= d;
      CHECK(prod == h2.class_count);
      CHECK_FALSE(h2.truncated);
      REQUIRE(h2.representatives.size() == h2.class_count);
      CHECK(h2.representatives[0] == trivial_cocycle(e.group, m));
      for (std::size_t i = 0; i < h2.representatives.size(); ++i)
        for (std::size_t j = 0; j < h2.representatives.size(); ++j)
          CHECK(is_cohomologous(h2.representatives[i], h2.representatives[j]) == (i == j));
    }
  }
  CHECK(h2_classes(shared("C2xC2"), 3, 2).class_count == 1);
  CHECK(h2_classes(shared("C2xC2"), 2, 3).class_count == 2);
  CHECK(h2_classes(shared("C3xC3"), 3, 2).class_count == 3);
  CHECK(h2_classes(shared("C16"), 15, 2).class_count == 1);
  CHECK_THROWS_AS(h2_classes(shared("C3xC3"), 3, 3), std::invalid_argument);
}

TEST_CASE("class cap truncates the representative list") {
  const auto h2 = h2_classes(shared("C3xC3"), 3, 2, 2);
  CHECK(h2.class_count == 3);
  CHECK(h2.truncated);
  CHECK(h2.representatives.size() == 2);
}

TEST_CASE("class count does not depend on element labelling") {
  std::mt19937_64 rng(3);
  for (const char* name : {"C2xC2", "C3xC3", "A4", "D12", "Q8"}) {
    const auto G = shared(name);
    const std::size_t n = G->order();
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) t[perm[x]][perm[y]] = perm[G->mul(x, y)];
    const auto H = std::make_shared<const Group>(Group::from_table(std::string(name) + "'", t));
    for (std::uint64_t p : {2, 3, 5})
      CHECK(h2_classes(H, default_m(*H, p), p).class_count == h2_classes(G, default_m(*G, p), p).class_count);
  }
}

TEST_CASE("representatives: commuting powers and alpha-regular sets") {
  std::mt19937_64 rng(17);
  for (const auto& e : catalog()) {
    const Group& G = *e.group;
    if (G.order() > 24) continue;
    CAPTURE(e.name);
    const auto h2 = h2_classes(e.group, 12, 5);
    for (const auto& c : h2.representatives) {
      for (Elem x = 0; x < G.order(); ++x) {
        const std::uint64_t o = G.element_order(x);
        for (std::uint64_t a = 0; a < o; ++a)
          for (std::uint64_t b = 0; b < o; ++b) {
            const Elem xa = G.pow(x, static_cast<std::int64_t>(a)), xb = G.pow(x, static_cast<std::int64_t>(b));
            CHECK(c.at(xa, xb) == c.at(xb, xa));
          }
      }
      const auto reg = alpha_regular_set(c);
      CHECK(reg == oracle_alpha_regular(c));
      CHECK(std::binary_search(reg.begin(), reg.end(), Elem{0}));
      for (const auto& cl : bca::grp::conjugacy_classes(G)) {
        const bool in = std::binary_search(reg.begin(), reg.end(), cl.representative);
        for (Elem y : cl.members) CHECK(std::binary_search(reg.begin(), reg.end(), y) == in);
      }
      for (int k = 0; k < 3; ++k) {
        const auto s = random_shift(c, rng);
        CHECK(is_cohomologous(s, c));
        CHECK(alpha_regular_set(s) == reg);
      }
      if (c == h2.representatives[0]) CHECK(reg.size() == G.order());
    }
  }
}

TEST_CASE("p-groups in their own characteristic have everything regular") {
  for (const auto& e : catalog()) {
    if (!e.tags.p_group || e.group->order() == 1) continue;
    CAPTURE(e.name);
    const std::uint64_t p = *e.tags.p_group;
    const auto h2 = h2_classes(e.group, default_m(*e.group, p), p);
    for (const auto& c : h2.representatives) CHECK(alpha_regular_set(c).size() == e.group->order());
  }
}

TEST_CASE("nontrivial class of the Klein four group") {
  const auto V = shared("C2xC2");
  const auto h2 = h2_classes(V, 2, 3);
  REQUIRE(h2.representatives.size() == 2);
  // Only the identity is regular for the nontrivial class.
  CHECK(alpha_regular_set(h2.representatives[1]) == std::vector<Elem>{0});
}

TEST_CASE("evaluation in a field") {
  const auto C2 = shared("C2");
  const auto F3 = bca::ff::FqField::make(3, 1);
  const auto c = make_cocycle(C2, 2, {0, 0, 0, 1});
  CHECK(eval(c, F3, 0, 0) == F3.one());
  CHECK(eval(c, F3, 1, 1).code == 2);
  const auto t = trivial_cocycle(shared("S3"), 4);
  const auto F5 = bca::ff::FqField::make(5, 1);
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) CHECK(eval(t, F5, x, y) == F5.one());
  CHECK_THROWS_AS(eval(make_cocycle(shared("C3"), 3, std::vector<std::uint32_t>(9, 0)), F3, 0, 0),
                  std::domain_error);
}
