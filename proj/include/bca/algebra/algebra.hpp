#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bca/cocycle/cocycle.hpp"
#include "bca/ff/linalg.hpp"
#include "bca/grp/group.hpp"

namespace bca::algebra {

using ff::FqElem;
using ff::FqField;
using ff::FqMatrix;
using ff::Vec;
using grp::Elem;
using grp::Group;

struct Term {
  std::uint32_t k;
  FqElem c;
};

/// Associative unital algebra over F_q given by structure constants
/// e_i e_j = sum_k sc(i, j)_k e_k.
///
/// Construction checks associativity (exhaustively up to dimension 64, on
/// 10 n^2 seeded random triples above, or exhaustively when paranoid) and the
/// unit laws, throwing std::invalid_argument on failure.
class StructAlgebra {
 public:
  struct Options {
    bool paranoid = false;
    std::uint64_t sample_seed = 0x5eed;
  };

  StructAlgebra(FqField F, std::size_t dim, std::vector<std::vector<Term>> sc, Vec unit,
                std::vector<std::string> labels, std::vector<Vec> generators, Options opt);
  StructAlgebra(FqField F, std::size_t dim, std::vector<std::vector<Term>> sc, Vec unit,
                std::vector<std::string> labels = {}, std::vector<Vec> generators = {})
      : StructAlgebra(std::move(F), dim, std::move(sc), std::move(unit), std::move(labels), std::move(generators),
                      Options{}) {}

  const FqField& field() const { return F_; }
  std::size_t dim() const { return n_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Generates the algebra as a unital algebra (the unit may be omitted).
  const std::vector<Vec>& generators() const { return gens_; }
  const std::vector<Term>& sc(std::size_t i, std::size_t j) const { return sc_[i * n_ + j]; }
  std::uint64_t sample_seed() const { return seed_; }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec basis_vector(std::size_t i) const;

 private:
  void validate(bool paranoid);

  FqField F_;
  std::size_t n_;
  std::vector<std::vector<Term>> sc_;
  Vec unit_;
  std::vector<std::string> labels_;
  std::vector<Vec> gens_;
  std::uint64_t seed_;
};

/// Representation of a group: one invertible matrix per element.
struct GModule {
  std::shared_ptr<const Group> group;
  FqField F;
  std::size_t dim = 0;
  std::vector<FqMatrix> action;

  /// Throws std::invalid_argument unless action is a homomorphism.
  void validate() const;
};

GModule trivial_module(std::shared_ptr<const Group> G, const FqField& F, std::size_t dim = 1);

StructAlgebra group_algebra(const Group& G, const FqField& F);
/// Throws std::domain_error unless m | q - 1; std::invalid_argument when c is
/// not normalized or not a cocycle (the algebra fails to be associative).
StructAlgebra twisted_group_algebra(const Group& G, const cocycle::Cocycle2& c, const FqField& F);

/// Basis (reduced echelon) of the center.
std::vector<Vec> algebra_center(const StructAlgebra& A);

struct DerivationSpace {
  std::size_t dim = 0;
  /// Present when requested: matrix with column k = D(e_k).
  std::vector<FqMatrix> basis;
};

DerivationSpace derivation_space(const StructAlgebra& A, bool want_basis = false,
                                 ff::Elimination method = ff::Elimination::automatic);
DerivationSpace inner_derivation_space(const StructAlgebra& A, bool want_basis = false);
std::size_t hh1_dim(const StructAlgebra& A, ff::Elimination method = ff::Elimination::automatic);

/// Matrix of a -> [x, a] for fixed x.
FqMatrix inner_derivation(const StructAlgebra& A, const Vec& x);
/// Checks the Leibniz rule on all basis pairs.
bool is_derivation(const StructAlgebra& A, const FqMatrix& D);

/// Reduced echelon basis of e A.
std::vector<Vec> ideal_basis(const StructAlgebra& A, const Vec& e);
/// The algebra e A with unit e, on the basis from ideal_basis. Throws
/// std::invalid_argument unless e is a central idempotent.
StructAlgebra ideal_algebra_on_idempotent(const StructAlgebra& A, const Vec& e);
/// Coordinates of v in a reduced echelon basis (v must lie in the span).
Vec echelon_coordinates(const std::vector<Vec>& basis, const Vec& v);

bool is_central(const StructAlgebra& A, const Vec& z);
bool is_idempotent(const StructAlgebra& A, const Vec& e);

/// Conjugation action a -> g a g^{-1} of G on a subspace of the group
/// algebra F[G] spanned by a reduced echelon basis. Throws
/// std::invalid_argument when the subspace is not stable.
GModule conjugation_module(std::shared_ptr<const Group> G, const FqField& F, const std::vector<Vec>& subspace);

}  // namespace bca::algebra
