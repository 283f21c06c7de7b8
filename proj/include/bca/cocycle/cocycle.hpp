#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bca/ff/field.hpp"
#include "bca/grp/group.hpp"

namespace bca::cocycle {

using grp::Elem;
using grp::Group;

/// Exponent table of a 2-cocycle with values in mu_m: alpha(x, y) = zeta^table[x][y].
/// The group is shared so cocycles stay valid independently of their source.
struct Cocycle2 {
  std::shared_ptr<const Group> group;
  std::uint64_t m = 1;
  std::vector<std::uint32_t> table;  // row-major n x n, entries in [0, m)

  std::size_t n() const { return group->order(); }
  std::uint32_t at(Elem x, Elem y) const { return table[static_cast<std::size_t>(x) * n() + y]; }
  std::uint32_t& at(Elem x, Elem y) { return table[static_cast<std::size_t>(x) * n() + y]; }
  bool operator==(const Cocycle2& o) const { return m == o.m && table == o.table; }
};

struct CocycleClassGroup {
  std::shared_ptr<const Group> group;
  std::uint64_t m = 1;
  std::vector<std::uint64_t> invariant_factors;  // d1 | d2 | ..., all > 1
  std::vector<Cocycle2> representatives;          // class 0 is the trivial class
  /// Total number of classes; representatives holds fewer when truncated.
  std::uint64_t class_count = 1;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultClassCap = 64;

Cocycle2 trivial_cocycle(std::shared_ptr<const Group> G, std::uint64_t m);
/// Throws std::invalid_argument on a shape or range error.
Cocycle2 make_cocycle(std::shared_ptr<const Group> G, std::uint64_t m, std::vector<std::uint32_t> table);

bool is_cocycle(const Cocycle2& c);
/// table[x][y] = lambda(x) + lambda(y) - lambda(xy) mod m
Cocycle2 coboundary(std::shared_ptr<const Group> G, std::uint64_t m, const std::vector<std::int64_t>& lambda);
/// Entry-wise sum of exponents (the product of the cocycles).
Cocycle2 add(const Cocycle2& a, const Cocycle2& b);
Cocycle2 normalize(const Cocycle2& c);

/// Classes of 2-cocycles with values in mu_m, taken modulo everything that
/// becomes a coboundary in k^x (for k algebraically closed of characteristic
/// p). Throws std::invalid_argument unless gcd(m, p) = 1.
CocycleClassGroup h2_classes(std::shared_ptr<const Group> G, std::uint64_t m, std::uint64_t p,
                             std::size_t cap = kDefaultClassCap);

/// True when a / b = delta(lambda) for some lambda: L -> k^x.
bool is_cohomologous(const Cocycle2& a, const Cocycle2& b);

/// {x : alpha(x, y) = alpha(y, x) for all y in C(x)}, sorted.
std::vector<Elem> alpha_regular_set(const Cocycle2& c);

/// zeta^table[x][y] with zeta = F.unity_root(m); throws std::domain_error unless m | q - 1.
ff::FqElem eval(const Cocycle2& c, const ff::FqField& F, Elem x, Elem y);

/// p'-part of |G|.
std::uint64_t default_m(const Group& G, std::uint64_t p);

}  // namespace bca::cocycle
