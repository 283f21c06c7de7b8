#pragma once

#include <cstdint>
#include <vector>

#include "bca/algebra/algebra.hpp"
#include "bca/cocycle/cocycle.hpp"

namespace bca::gcoh {

using algebra::GModule;
using ff::FqField;
using ff::Vec;
using grp::Elem;
using grp::Group;

struct CrossedHomSpace {
  std::size_t z1_dim = 0;
  std::size_t b1_dim = 0;
  std::size_t h1_dim = 0;
  /// When requested: crossed homomorphisms (one module vector per group
  /// element) whose classes form a basis of H^1.
  std::vector<std::vector<Vec>> basis;
};

/// H^1(G, M) from the crossed-homomorphism equations d(gs) = d(g) + g d(s)
/// over all g and the recorded generators s.
CrossedHomSpace h1(const GModule& M, bool want_basis = false);

/// p-rank of the abelianization.
std::size_t h1_trivial_dim(const Group& G, const FqField& F);

/// One-dimensional module over C(x) on which g acts by alpha(g, x) / alpha(x, g).
/// The module's group is C(x) as a group in its own right (element i is the
/// i-th member of the centralizer). Throws std::logic_error when the
/// character is not multiplicative.
GModule twist_character(const cocycle::Cocycle2& c, const FqField& F, Elem x);

struct ClassContribution {
  Elem representative = 0;
  std::size_t class_size = 0;
  std::size_t centralizer_order = 0;
  bool trivial_twist = true;
  std::size_t h1_dim = 0;
};

std::size_t hh1_twisted_via_centralizers(const Group& G, const cocycle::Cocycle2& c, const FqField& F,
                                         std::vector<ClassContribution>* breakdown = nullptr);
std::size_t hh1_group_algebra_via_centralizers(const Group& G, const FqField& F,
                                               std::vector<ClassContribution>* breakdown = nullptr);

/// Smallest field of characteristic p containing the m-th roots of unity.
FqField twisted_field(std::uint32_t p, std::uint64_t m);

}  // namespace bca::gcoh
