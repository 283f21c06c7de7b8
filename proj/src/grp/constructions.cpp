#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bca/grp/group.hpp"

namespace bca::grp {

Quotient quotient_group(const Group& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient_group: subgroup is not normal");
  const std::size_t n = G.order();
  std::vector<std::int64_t> coset(n, -1);
  std::vector<Elem> reps;
  for (Elem g = 0; g < n; ++g) {
    if (coset[g] >= 0) continue;
    for (Elem h : N.members) coset[G.mul(g, h)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(g);
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<Elem>> t(k, std::vector<Elem>(k));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("[" + G.element_name(reps[i]) + "]");
    for (std::size_t j = 0; j < k; ++j) t[i][j] = static_cast<Elem>(coset[G.mul(reps[i], reps[j])]);
  }
  GroupHom proj;
  for (auto c : coset) proj.image.push_back(static_cast<Elem>(c));
  return Quotient{Group::from_table(G.name() + "/N" + std::to_string(N.order()), t, std::move(names)),
                  std::move(proj), std::move(reps)};
}

std::vector<std::uint64_t> abelian_invariants(const Group& A) {
  const std::uint64_t n = A.order();
  if (!A.is_abelian()) throw std::invalid_argument("abelian_invariants: group is not abelian");
  // For each prime l, c_i = #{x : x^(l^i) = 1} = l^(sum_j min(i, a_j)).
  std::vector<std::vector<std::uint64_t>> parts;  // per prime: elementary divisors, descending
  std::uint64_t m = n;
  for (std::uint64_t l = 2; m > 1; ++l) {
    if (m % l) continue;
    while (m % l == 0) m /= l;
    std::vector<unsigned> r;  // r[i-1] = number of cyclic factors of exponent >= i
    std::uint64_t prev = 1, li = 1;
    for (;;) {
      li *= l;
      std::uint64_t c = 0;
      for (Elem x = 0; x < n; ++x)
        if (li % A.element_order(x) == 0) ++c;
      if (c == prev) break;
      unsigned k = 0;
      for (std::uint64_t q = c / prev; q > 1; q /= l) ++k;
      r.push_back(k);
      prev = c;
    }
    std::vector<std::uint64_t> divs;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const unsigned exact = r[i] - (i + 1 < r.size() ? r[i + 1] : 0);
      std::uint64_t pw = 1;
      for (std::size_t j = 0; j <= i; ++j) pw *= l;
      for (unsigned c = 0; c < exact; ++c) divs.push_back(pw);
    }
    std::sort(divs.rbegin(), divs.rend());
    parts.push_back(std::move(divs));
  }
  std::size_t len = 0;
  for (const auto& d : parts) len = std::max(len, d.size());
  std::vector<std::uint64_t> inv(len, 1);
  for (const auto& d : parts)
    for (std::size_t i = 0; i < d.size(); ++i) inv[i] *= d[i];
  std::reverse(inv.begin(), inv.end());
  return inv;
}

Abelianization abelianization(const Group& G) {
  Quotient q = quotient_group(G, derived_subgroup(G));
  auto inv = abelian_invariants(q.group);
  return Abelianization{std::move(inv), std::move(q)};
}

Group semidirect_product(const Group& P, const Group& E, const std::vector<std::vector<Elem>>& action,
                         std::string name) {
  const std::size_t np = P.order(), ne = E.order();
  if (action.size() != ne) throw std::invalid_argument("semidirect_product: need one automorphism per element of E");
  for (std::size_t x = 0; x < ne; ++x) {
    if (!is_homomorphism(P, P, GroupHom{action[x]}))
      throw std::invalid_argument("semidirect_product: image of element " + std::to_string(x) +
                                  " is not an endomorphism of P");
    std::vector<Elem> s = action[x];
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < np; ++i)
      if (s[i] != i)
        throw std::invalid_argument("semidirect_product: image of element " + std::to_string(x) +
                                    " is not bijective");
  }
  for (Elem x = 0; x < ne; ++x)
    for (Elem y = 0; y < ne; ++y)
      for (Elem b = 0; b < np; ++b)
        if (action[E.mul(x, y)][b] != action[x][action[y][b]])
          throw std::invalid_argument("semidirect_product: action is not a homomorphism E -> Aut(P)");
  const std::size_t n = np * ne;
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> names(n);
  for (Elem x = 0; x < ne; ++x)
    for (Elem a = 0; a < np; ++a) {
      const std::size_t i = x * np + a;
      names[i] = "(" + P.element_name(a) + "," + E.element_name(x) + ")";
      for (Elem y = 0; y < ne; ++y)
        for (Elem b = 0; b < np; ++b) t[i][y * np + b] = static_cast<Elem>(E.mul(x, y) * np + P.mul(a, action[x][b]));
    }
  if (name.empty()) name = P.name() + ":" + E.name();
  return Group::from_table(std::move(name), t, std::move(names));
}

Group direct_product(const Group& A, const Group& B, std::string name) {
  std::vector<std::vector<Elem>> id(B.order());
  for (auto& a : id) {
    a.resize(A.order());
    std::iota(a.begin(), a.end(), Elem{0});
  }
  if (name.empty()) name = A.name() + "x" + B.name();
  return semidirect_product(A, B, id, std::move(name));
}

Group cyclic_group(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> gens;
  if (n > 1) {
    std::vector<std::uint32_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n + 1);
    gens.push_back(c);
  }
  return Group::from_permutations("C" + std::to_string(n), n, gens);
}

GroupPredicates group_predicates(const Group& P) {
  GroupPredicates r;
  r.exponent = 1;
  for (Elem x = 0; x < P.order(); ++x) r.exponent = std::lcm(r.exponent, P.element_order(x));
  const Subgroup D = derived_subgroup(P);
  r.center_in_derived = is_subset(center(P), D);
  r.is_metacyclic = false;
  for (Elem g = 0; g < P.order() && !r.is_metacyclic; ++g) {
    const Subgroup N = subgroup_generated(P, {g});
    if (!is_normal(P, N)) continue;
    // Skip non-canonical generators of the same cyclic subgroup.
    bool least = true;
    for (Elem h : N.members)
      if (h < g && P.element_order(h) == N.order()) least = false;
    if (!least) continue;
    const std::size_t index = P.order() / N.order();
    for (Elem h = 0; h < P.order(); ++h) {
      std::size_t k = 1;
      Elem y = h;
      while (!N.contains(y)) {
        y = P.mul(y, h);
        ++k;
      }
      if (k == index) {
        r.is_metacyclic = true;
        break;
      }
    }
  }
  return r;
}

bool are_isomorphic(const Group& A, const Group& B) {
  if (A.order() != B.order()) return false;
  const auto& gens = A.generators();
  std::vector<Elem> img(gens.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      std::vector<std::int64_t> map(A.order(), -1);
      std::vector<bool> used(B.order(), false);
      map[0] = 0;
      used[0] = true;
      std::vector<Elem> queue{0};
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const Elem x = queue[h];
        for (std::size_t s = 0; s < gens.size(); ++s) {
          const Elem y = A.mul(x, gens[s]);
          const Elem fy = B.mul(static_cast<Elem>(map[x]), img[s]);
          if (map[y] < 0) {
            if (used[fy]) return false;
            map[y] = fy;
            used[fy] = true;
            queue.push_back(y);
          } else if (map[y] != fy) {
            return false;
          }
        }
      }
      for (Elem a = 0; a < A.order(); ++a)
        for (Elem b = 0; b < A.order(); ++b)
          if (map[A.mul(a, b)] != B.mul(static_cast<Elem>(map[a]), static_cast<Elem>(map[b]))) return false;
      return true;
    }
    for (Elem y = 0; y < B.order(); ++y) {
      if (B.element_order(y) != A.element_order(gens[k])) continue;
      img[k] = y;
      if (rec(k + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace bca::grp
