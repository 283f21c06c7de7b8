#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bca::grp {

/// Element index into a Group; the identity is always 0.
using Elem = std::uint32_t;

/// A finite group given by its Cayley table.
///
/// Construction validates the group law and throws std::invalid_argument
/// naming the failed axiom. Associativity is checked exhaustively below
/// order 64 and on a fixed pseudo-random sample of triples above that.
class Group {
 public:
  static constexpr std::size_t kDefaultOrderCap = 5000;

  static Group from_table(std::string name, const std::vector<std::vector<Elem>>& table,
                          std::vector<std::string> names = {});

  /// Closure of permutation generators (images of 1..degree, 1-indexed).
  /// Elements are numbered in breadth-first order from the identity,
  /// multiplying by the generators in input order. Products compose left to
  /// right: (x*y)(i) = y(x(i)).
  static Group from_permutations(std::string name, std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& generators,
                                 std::size_t order_cap = kDefaultOrderCap);

  const std::string& name() const { return name_; }
  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, std::int64_t k) const;
  /// g x g^{-1}
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  /// a^{-1} b^{-1} a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  std::size_t element_order(Elem a) const { return orders_[a]; }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  const std::string& element_name(Elem a) const { return names_[a]; }
  std::optional<Elem> find(const std::string& element_name) const;

  /// Generators recorded at construction (the permutation generators), or a
  /// greedy generating set for table input.
  const std::vector<Elem>& generators() const { return gens_; }
  bool is_abelian() const;

  std::vector<std::vector<Elem>> table() const;

  Group renamed(std::string name) const {
    Group g = *this;
    g.name_ = std::move(name);
    return g;
  }

 private:
  Group() = default;
  void finish(std::vector<Elem> gens);

  std::string name_;
  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> names_;
  std::vector<Elem> gens_;
};

/// A subgroup as its sorted member list (always containing 0).
struct Subgroup {
  std::vector<Elem> members;

  std::size_t order() const { return members.size(); }
  bool contains(Elem x) const;
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup& o) const {
    if (auto c = members.size() <=> o.members.size(); c != 0) return c;
    return members <=> o.members;
  }
};

/// Homomorphism given by the image of every source element.
struct GroupHom {
  std::vector<Elem> image;
};

bool is_homomorphism(const Group& source, const Group& target, const GroupHom& f);

struct ConjugacyClass {
  Elem representative;  // least member
  std::vector<Elem> members;
};

struct Quotient {
  Group group;
  GroupHom projection;
  std::vector<Elem> coset_representatives;  // least member of each coset
};

struct Abelianization {
  std::vector<std::uint64_t> invariant_factors;  // d1 | d2 | ..., all > 1
  Quotient quotient;
};

struct GroupPredicates {
  bool is_metacyclic = false;
  std::size_t exponent = 1;
  bool center_in_derived = false;
};

// --- subgroups and conjugacy ------------------------------------------------

Subgroup trivial_subgroup();
Subgroup whole_group(const Group& G);
Subgroup subgroup_generated(const Group& G, const std::vector<Elem>& gens);
/// Throws std::invalid_argument unless the set is a subgroup.
Subgroup make_subgroup(const Group& G, std::vector<Elem> members);
bool is_normal(const Group& G, const Subgroup& H);
bool is_subset(const Subgroup& A, const Subgroup& B);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
Subgroup conjugate(const Group& G, const Subgroup& H, Elem g);
Subgroup normal_closure(const Group& G, const std::vector<Elem>& elems);
/// Product HK of two subgroups when one normalizes the other.
Subgroup product(const Group& G, const Subgroup& H, const Subgroup& K);
/// Subgroup as a group in its own right; element i is H.members[i].
Group subgroup_as_group(const Group& G, const Subgroup& H, std::string name = {});
/// Greedy generating set of H, drawn from its members in increasing order.
std::vector<Elem> subgroup_generators(const Group& G, const Subgroup& H);

std::vector<ConjugacyClass> conjugacy_classes(const Group& G);
/// Index into conjugacy_classes(G) of every element.
std::vector<std::size_t> class_index(const Group& G, const std::vector<ConjugacyClass>& classes);
Subgroup centralizer(const Group& G, Elem x);
Subgroup centralizer_of(const Group& G, const Subgroup& H);
Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup center(const Group& G);
Subgroup derived_subgroup(const Group& G, const Subgroup& H);
Subgroup derived_subgroup(const Group& G);

// --- p-local structure --------------------------------------------------------

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_element(const Group& G, Elem x, std::uint64_t p);
bool is_p_group(const Group& G, std::uint64_t p);
Subgroup sylow_subgroup(const Group& G, std::uint64_t p);
/// O^p(G): generated by the elements of order prime to p.
Subgroup p_residual(const Group& G, std::uint64_t p);
bool is_p_perfect(const Group& G, std::uint64_t p);
/// O_p(G) and O_{p'}(G).
Subgroup p_core(const Group& G, std::uint64_t p);
Subgroup p_prime_core(const Group& G, std::uint64_t p);
bool is_p_solvable(const Group& G, std::uint64_t p);
/// (g_p, g_{p'}) with g = g_p g_{p'}, both powers of g.
std::pair<Elem, Elem> element_p_decomposition(const Group& G, Elem g, std::uint64_t p);
/// All subgroups of a group, sorted by (order, members). Intended for small groups.
std::vector<Subgroup> all_subgroups(const Group& G);
std::vector<Subgroup> p_subgroups_up_to_conjugacy(const Group& G, std::uint64_t p);
bool are_conjugate(const Group& G, const Subgroup& A, const Subgroup& B);

// --- constructions ------------------------------------------------------------

/// Throws std::invalid_argument when N is not normal.
Quotient quotient_group(const Group& G, const Subgroup& N);
Abelianization abelianization(const Group& G);
/// Invariant factors of an abelian group.
std::vector<std::uint64_t> abelian_invariants(const Group& A);
/// action[e] is the automorphism of P attached to e (an index map on P).
/// Elements are pairs (a, x), indexed x * |P| + a, with
/// (a, x)(b, y) = (a * action[x](b), x y).
Group semidirect_product(const Group& P, const Group& E, const std::vector<std::vector<Elem>>& action,
                         std::string name = {});
Group direct_product(const Group& A, const Group& B, std::string name = {});
Group cyclic_group(std::size_t n);
GroupPredicates group_predicates(const Group& P);
/// Brute-force isomorphism test for small groups (used by tests).
bool are_isomorphic(const Group& A, const Group& B);

}  // namespace bca::grp
