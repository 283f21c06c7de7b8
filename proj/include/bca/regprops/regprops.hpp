#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bca/cocycle/cocycle.hpp"
#include "bca/grp/group.hpp"

namespace bca::regprops {

using grp::Elem;
using grp::Group;

enum class SpVariant { centralizer, sylow };
std::string to_string(SpVariant v);

struct Prop25Flags {
  bool non_p_perfect = false;       // (i)
  bool sylow_normal = false;        // (ii)
  bool center_not_in_derived = false;  // (iii)
  bool derived_exponent_smaller = false;  // (iv)
  bool metacyclic = false;          // (v)

  bool any() const {
    return non_p_perfect || sylow_normal || center_not_in_derived || derived_exponent_smaller || metacyclic;
  }
};

struct PropertyReport {
  std::string group;
  std::uint64_t p = 0;
  std::vector<Elem> c_p_set;
  std::vector<Elem> s_p_centralizer;
  std::vector<Elem> s_p_sylow;
  Prop25Flags prop25;
  std::optional<Elem> criterion_witness;  // for the trivial cocycle
};

/// {x : p divides [C(x) : C(x)']}
std::vector<Elem> commutator_index_set(const Group& G, std::uint64_t p);

/// p-elements x with x outside C(x)' (centralizer) or outside S' for S a Sylow
/// p-subgroup of C(x) containing x (sylow).
std::vector<Elem> strong_nonschur_set(const Group& G, std::uint64_t p, SpVariant variant);

/// Least element of commutator_index_set meeting the alpha-regular set.
/// Throws std::invalid_argument when p does not divide |G|.
std::optional<Elem> thm12_criterion(const Group& G, std::uint64_t p, const cocycle::Cocycle2& c);
/// Same, from precomputed sets.
std::optional<Elem> first_common(const std::vector<Elem>& a, const std::vector<Elem>& b);

Prop25Flags prop25_conditions(const Group& G, std::uint64_t p);

PropertyReport property_report(const Group& G, std::uint64_t p);

}  // namespace bca::regprops
