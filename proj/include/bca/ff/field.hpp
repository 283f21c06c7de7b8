#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bca::ff {

/// Element of a finite field, encoded as the integer sum c_i * p^i of the
/// coefficients of its residue-class representative. Codes 0 and 1 are always
/// the additive and multiplicative identities.
struct FqElem {
  std::uint32_t code = 0;

  constexpr auto operator<=>(const FqElem&) const = default;
  constexpr bool is_zero() const { return code == 0; }
};

/// The field F_{p^e}, presented as F_p[x]/(f) with f the lexicographically
/// least monic irreducible polynomial of degree e. Copies share the
/// precomputed log/exp tables and are cheap.
class FqField {
 public:
  /// Largest field order for which tables are built.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
  /// Largest extension field with a full addition table.
  static constexpr std::uint32_t kSumTableMax = 256;

  /// Throws std::invalid_argument when p is not prime, e < 1, or p^e is
  /// beyond kMaxOrder.
  static FqField make(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t e() const { return t_->e; }
  std::uint32_t q() const { return t_->q; }
  bool is_prime_field() const { return t_->e == 1; }

  /// Monic modulus, coefficients from x^0 upward (length e + 1).
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }
  std::string name() const;

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem from_int(std::int64_t v) const;
  FqElem from_coeffs(std::span<const std::uint32_t> c) const;
  std::vector<std::uint32_t> coeffs(FqElem a) const;

  FqElem add(FqElem a, FqElem b) const {
    if (t_->e == 1) {
      std::uint32_t s = a.code + b.code;
      return {s >= t_->p ? s - t_->p : s};
    }
    if (!t_->sum.empty()) return {t_->sum[a.code * t_->q + b.code]};
    return add_ext(a, b);
  }
  FqElem neg(FqElem a) const {
    if (t_->e == 1) return {a.code == 0 ? 0 : t_->p - a.code};
    return {t_->neg[a.code]};
  }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const {
    if (t_->e == 1)
      return {static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % t_->p)};
    if (a.code == 0 || b.code == 0) return {0};
    return {t_->exp[t_->log[a.code] + t_->log[b.code]]};
  }
  /// Throws std::domain_error on zero.
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t k) const;

  /// Least (by code) generator of the multiplicative group.
  FqElem generator() const { return {t_->exp[1]}; }
  /// generator()^((q-1)/m); throws std::domain_error unless m | q - 1.
  FqElem unity_root(std::uint64_t m) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(FqElem a) const;

  /// Row-major q x q addition table (codes), or null when q is large or prime.
  const std::uint32_t* sum_table() const { return t_->sum.empty() ? nullptr : t_->sum.data(); }

  bool operator==(const FqField& o) const { return p() == o.p() && e() == o.e(); }

 private:
  struct Tables {
    std::uint32_t p = 0, e = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;   // length 2(q-1), exp[i] = g^i
    std::vector<std::uint32_t> log;   // log[0] unused
    std::vector<std::int64_t> zech;   // log(1 + g^i), -1 when 1 + g^i = 0
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> sum;   // full addition table for small q
  };

  FqElem add_ext(FqElem a, FqElem b) const;

  std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace bca::ff
