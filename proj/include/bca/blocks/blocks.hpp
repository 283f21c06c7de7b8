#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "bca/algebra/algebra.hpp"
#include "bca/gcoh/gcoh.hpp"
#include "bca/grp/group.hpp"

namespace bca::blocks {

using algebra::GModule;
using algebra::StructAlgebra;
using ff::FqField;
using ff::Vec;
using grp::Elem;
using grp::Group;
using grp::Subgroup;

struct Block {
  Vec idempotent;          // coefficient of each group element
  std::vector<Vec> basis;  // reduced echelon basis of F[G] b
  std::shared_ptr<const StructAlgebra> algebra;
  bool is_principal = false;
  Subgroup defect_group;  // least representative of the defect class
  std::size_t defect_class_size = 1;

  ff::FqElem augmentation(const FqField& F) const;
  /// Least group element in the support of the idempotent.
  Elem least_support() const;
};

/// Primitive central idempotents of F[G], sorted by least supported element,
/// with block algebras and defect groups filled in. Throws std::logic_error
/// when the splitting does not reach the number of blocks predicted by the
/// Frobenius-fixed part of the center.
std::vector<Block> block_decomposition(const Group& G, const FqField& F, std::uint64_t seed);

/// Class sums, in the order of conjugacy_classes(G).
std::vector<Vec> class_sums(const Group& G, const FqField& F);
/// Dimension of {z in Z(F[G]) : z^q = z}, the number of blocks.
std::size_t frobenius_block_count(const Group& G, const FqField& F);

/// Throws std::logic_error unless exactly one block has augmentation 1 and
/// the others augmentation 0.
const Block& principal_block(const std::vector<Block>& blocks, const FqField& F);

/// Coefficients of a on C_G(D), indexed like centralizer_of(G, D).members.
/// Throws std::invalid_argument unless a is fixed under conjugation by D.
Vec brauer_map(const Group& G, const Subgroup& D, const Vec& a, const FqField& F);

struct DefectClass {
  Subgroup representative;
  std::size_t class_size = 1;
};
DefectClass defect_groups(const Group& G, const Vec& b, std::uint64_t p, const FqField& F);

struct BrauerPair {
  Subgroup P;
  Subgroup C;     // C_G(P)
  Vec e;          // block idempotent of F[C], indexed like C.members
  std::size_t block_index = 0;  // position among the blocks of F[C]
};
/// Throws std::invalid_argument when no block of F[C_G(P)] meets Br_P(b).
BrauerPair max_brauer_pair(const Group& G, const Vec& b, const Subgroup& P, const FqField& F, std::uint64_t seed);

struct InertialQuotient {
  Subgroup stabilizer;  // N_G(P, e)
  Subgroup pc;          // P C_G(P)
  std::size_t order = 1;
};
/// Throws std::logic_error when the order is divisible by p.
InertialQuotient inertial_quotient(const Group& G, const BrauerPair& pair, std::uint64_t p);

/// True iff k is a direct summand of M: some fixed vector pairs nontrivially
/// with some invariant functional.
bool trivial_summand_test(const GModule& M);
/// Permutation module F[G/P] on left cosets.
GModule permutation_module(std::shared_ptr<const Group> G, const Subgroup& P, const FqField& F);
/// trivial_summand_test on F[G/P]; throws std::logic_error if it disagrees
/// with the index criterion p does not divide [G:P].
bool scott_trivial_check(std::shared_ptr<const Group> G, const Subgroup& P, const FqField& F);

struct Thm14Report {
  std::size_t defect_order = 1;
  bool non_p_perfect = false;
  bool scott_trivial = false;
  bool conjugation_has_trivial_summand = false;
  std::size_t hh1_derivations = 0;
  std::size_t hh1_group_cohomology = 0;
  bool hypotheses_met = false;
  bool conclusion_confirmed = false;
};
Thm14Report thm14_pipeline(std::shared_ptr<const Group> G, const Block& b, std::uint64_t p, const FqField& F);

/// Field for block computations: p^e with e the order of p modulo the
/// p'-part of the exponent of G.
FqField splitting_field(const Group& G, std::uint32_t p);

}  // namespace bca::blocks
