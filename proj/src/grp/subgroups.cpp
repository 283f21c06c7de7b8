#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bca/grp/group.hpp"

namespace bca::grp {

bool Subgroup::contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const Group& G) {
  Subgroup H;
  H.members.resize(G.order());
  std::iota(H.members.begin(), H.members.end(), Elem{0});
  return H;
}

Subgroup subgroup_generated(const Group& G, const std::vector<Elem>& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> members{0};
  in[0] = true;
  std::vector<Elem> gs;
  for (Elem s : gens)
    if (s != 0) gs.push_back(s);
  for (std::size_t h = 0; h < members.size(); ++h)
    for (Elem s : gs) {
      Elem p = G.mul(members[h], s);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

Subgroup make_subgroup(const Group& G, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup H{std::move(members)};
  if (H.members.empty() || H.members[0] != 0) throw std::invalid_argument("subgroup must contain the identity");
  for (Elem x : H.members) {
    if (x >= G.order()) throw std::invalid_argument("subgroup member out of range");
    if (!H.contains(G.inv(x))) throw std::invalid_argument("subgroup not closed under inverses");
    for (Elem y : H.members)
      if (!H.contains(G.mul(x, y))) throw std::invalid_argument("subgroup not closed under multiplication");
  }
  return H;
}

bool is_normal(const Group& G, const Subgroup& H) {
  for (Elem g : G.generators())
    for (Elem h : H.members)
      if (!H.contains(G.conj(g, h))) return false;
  return true;
}

bool is_subset(const Subgroup& A, const Subgroup& B) {
  return std::includes(B.members.begin(), B.members.end(), A.members.begin(), A.members.end());
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  Subgroup C;
  std::set_intersection(A.members.begin(), A.members.end(), B.members.begin(), B.members.end(),
                        std::back_inserter(C.members));
  return C;
}

Subgroup conjugate(const Group& G, const Subgroup& H, Elem g) {
  Subgroup C;
  for (Elem h : H.members) C.members.push_back(G.conj(g, h));
  std::sort(C.members.begin(), C.members.end());
  return C;
}

Subgroup normal_closure(const Group& G, const std::vector<Elem>& elems) {
  std::vector<Elem> gens;
  for (Elem x : elems)
    for (Elem g = 0; g < G.order(); ++g) gens.push_back(G.conj(g, x));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_generated(G, gens);
}

Subgroup product(const Group& G, const Subgroup& H, const Subgroup& K) {
  std::vector<bool> in(G.order(), false);
  Subgroup P;
  for (Elem h : H.members)
    for (Elem k : K.members) {
      Elem x = G.mul(h, k);
      if (!in[x]) {
        in[x] = true;
        P.members.push_back(x);
      }
    }
  std::sort(P.members.begin(), P.members.end());
  if (P.order() * intersect(H, K).order() != H.order() * K.order())
    throw std::logic_error("product: HK is not a subgroup");
  return P;
}

Group subgroup_as_group(const Group& G, const Subgroup& H, std::string name) {
  const std::size_t n = H.order();
  std::vector<Elem> pos(G.order(), 0);
  for (std::size_t i = 0; i < n; ++i) pos[H.members[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(G.element_name(H.members[i]));
    for (std::size_t j = 0; j < n; ++j) t[i][j] = pos[G.mul(H.members[i], H.members[j])];
  }
  if (name.empty()) name = G.name() + "_sub" + std::to_string(n);
  return Group::from_table(std::move(name), t, std::move(names));
}

std::vector<Elem> subgroup_generators(const Group& G, const Subgroup& H) {
  std::vector<Elem> gens;
  Subgroup cur = trivial_subgroup();
  for (Elem x : H.members) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = subgroup_generated(G, gens);
    if (cur.order() == H.order()) break;
  }
  return gens;
}

std::vector<ConjugacyClass> conjugacy_classes(const Group& G) {
  std::vector<ConjugacyClass> out;
  std::vector<bool> seen(G.order(), false);
  for (Elem x = 0; x < G.order(); ++x) {
    if (seen[x]) continue;
    ConjugacyClass c{x, {}};
    for (Elem g = 0; g < G.order(); ++g) {
      Elem y = G.conj(g, x);
      if (!seen[y]) {
        seen[y] = true;
        c.members.push_back(y);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> class_index(const Group& G, const std::vector<ConjugacyClass>& classes) {
  std::vector<std::size_t> idx(G.order(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Elem x : classes[i].members) idx[x] = i;
  return idx;
}

Subgroup centralizer(const Group& G, Elem x) {
  Subgroup C;
  for (Elem g = 0; g < G.order(); ++g)
    if (G.commute(g, x)) C.members.push_back(g);
  return C;
}

Subgroup centralizer_of(const Group& G, const Subgroup& H) {
  const auto gens = subgroup_generators(G, H);
  Subgroup C;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : gens) ok = ok && G.commute(g, h);
    if (ok) C.members.push_back(g);
  }
  return C;
}

Subgroup normalizer(const Group& G, const Subgroup& H) {
  const auto gens = subgroup_generators(G, H);
  Subgroup N;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : gens) ok = ok && H.contains(G.conj(g, h));
    if (ok) N.members.push_back(g);
  }
  return N;
}

Subgroup center(const Group& G) { return centralizer_of(G, whole_group(G)); }

Subgroup derived_subgroup(const Group& G, const Subgroup& H) {
  std::vector<Elem> comms;
  std::vector<bool> seen(G.order(), false);
  for (Elem a : H.members)
    for (Elem b : H.members) {
      Elem c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return subgroup_generated(G, comms);
}

Subgroup derived_subgroup(const Group& G) { return derived_subgroup(G, whole_group(G)); }

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_element(const Group& G, Elem x, std::uint64_t p) {
  const std::uint64_t o = G.element_order(x);
  return p_part(o, p) == o;
}

bool is_p_group(const Group& G, std::uint64_t p) { return p_part(G.order(), p) == G.order(); }

Subgroup sylow_subgroup(const Group& G, std::uint64_t p) {
  const std::uint64_t target = p_part(G.order(), p);
  Subgroup H = trivial_subgroup();
  while (H.order() < target) {
    bool grown = false;
    for (Elem g = 1; g < G.order(); ++g) {
      if (H.contains(g) || !is_p_element(G, g, p)) continue;
      bool normalizes = true;
      for (Elem h : H.members)
        if (!H.contains(G.conj(g, h))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      std::vector<Elem> gens = subgroup_generators(G, H);
      gens.push_back(g);
      Subgroup K = subgroup_generated(G, gens);
      if (p_part(K.order(), p) != K.order()) continue;
      H = std::move(K);
      grown = true;
      break;
    }
    if (!grown) break;
  }
  if (H.order() != target) {
    // Fallback: a p-subgroup that is not Sylow always has a normalizing
    // p-element outside it, so this is only reached on a logic error.
    for (const auto& S : all_subgroups(G))
      if (S.order() == target) return S;
    throw std::logic_error("sylow_subgroup: search failed");
  }
  return H;
}

Subgroup p_residual(const Group& G, std::uint64_t p) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < G.order(); ++x)
    if (G.element_order(x) % p != 0) gens.push_back(x);
  return subgroup_generated(G, gens);
}

bool is_p_perfect(const Group& G, std::uint64_t p) { return p_residual(G, p).order() == G.order(); }

Subgroup p_core(const Group& G, std::uint64_t p) {
  Subgroup S = sylow_subgroup(G, p);
  Subgroup core = S;
  for (Elem g = 0; g < G.order() && core.order() > 1; ++g) core = intersect(core, conjugate(G, S, g));
  return core;
}

Subgroup p_prime_core(const Group& G, std::uint64_t p) {
  std::vector<Elem> gens;
  for (Elem x = 1; x < G.order(); ++x) {
    if (G.element_order(x) % p == 0) continue;
    Subgroup N = normal_closure(G, {x});
    if (N.order() % p != 0) gens.push_back(x);
  }
  return normal_closure(G, gens);
}

bool is_p_solvable(const Group& G0, std::uint64_t p) {
  Group G = G0;
  while (G.order() > 1) {
    Subgroup N = p_prime_core(G, p);
    if (N.order() == 1) N = p_core(G, p);
    if (N.order() == 1) return false;
    G = quotient_group(G, N).group;
  }
  return true;
}

std::pair<Elem, Elem> element_p_decomposition(const Group& G, Elem g, std::uint64_t p) {
  const std::uint64_t n = G.element_order(g);
  const std::uint64_t pk = p_part(n, p), mp = n / pk;
  std::uint64_t u = 0;
  if (pk == 1) {
    u = 0;
  } else if (mp == 1) {
    u = 1;
  } else {
    std::uint64_t inv = 1;
    while ((mp * inv) % pk != 1) ++inv;
    u = mp * inv;
  }
  const Elem gp = G.pow(g, static_cast<std::int64_t>(u));
  const Elem gq = G.pow(g, static_cast<std::int64_t>(n + 1 - u % n));
  return {gp, gq};
}

std::vector<Subgroup> all_subgroups(const Group& G) {
  std::set<Subgroup> found;
  std::vector<Subgroup> frontier{trivial_subgroup()};
  found.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& H : frontier) {
      const auto gens = subgroup_generators(G, H);
      for (Elem x = 1; x < G.order(); ++x) {
        if (H.contains(x)) continue;
        auto g2 = gens;
        g2.push_back(x);
        Subgroup K = subgroup_generated(G, g2);
        if (found.insert(K).second) next.push_back(std::move(K));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

bool are_conjugate(const Group& G, const Subgroup& A, const Subgroup& B) {
  if (A.order() != B.order()) return false;
  for (Elem g = 0; g < G.order(); ++g)
    if (conjugate(G, A, g) == B) return true;
  return false;
}

std::vector<Subgroup> p_subgroups_up_to_conjugacy(const Group& G, std::uint64_t p) {
  const Subgroup P = sylow_subgroup(G, p);
  const Group PG = subgroup_as_group(G, P);
  std::vector<Subgroup> out;
  for (const auto& S : all_subgroups(PG)) {
    Subgroup inG;
    for (Elem i : S.members) inG.members.push_back(P.members[i]);
    std::sort(inG.members.begin(), inG.members.end());
    bool dup = false;
    for (auto& R : out)
      if (are_conjugate(G, R, inG)) {
        if (inG < R) R = inG;
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(inG));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bca::grp
