#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bca/ff/field.hpp"

namespace bca::ff {

/// Univariate polynomial over F_q, coefficients from x^0 upward. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// nonzero.
using Poly = std::vector<FqElem>;

namespace poly {

void trim(Poly& f);
int degree(const Poly& f);  // -1 for zero
Poly monomial(const FqField& F, std::size_t k, FqElem c);
Poly add(const FqField& F, const Poly& a, const Poly& b);
Poly sub(const FqField& F, const Poly& a, const Poly& b);
Poly mul(const FqField& F, const Poly& a, const Poly& b);
Poly scale(const FqField& F, const Poly& a, FqElem c);
/// Quotient and remainder; throws std::domain_error for b = 0.
std::pair<Poly, Poly> divmod(const FqField& F, const Poly& a, const Poly& b);
Poly mod(const FqField& F, const Poly& a, const Poly& b);
Poly monic(const FqField& F, const Poly& a);
Poly gcd(const FqField& F, const Poly& a, const Poly& b);
/// Returns (g, s, t) with s a + t b = g = gcd(a, b), g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const FqField& F, const Poly& a, const Poly& b);
Poly derivative(const FqField& F, const Poly& f);
Poly powmod(const FqField& F, const Poly& base, std::uint64_t k, const Poly& m);
FqElem eval(const FqField& F, const Poly& f, FqElem x);

}  // namespace poly

struct Factor {
  Poly factor;  // monic irreducible
  unsigned multiplicity;
};

/// Complete factorization into monic irreducibles, sorted by (degree,
/// coefficients). Squarefree decomposition, then Berlekamp when q <= 16,
/// otherwise distinct-degree plus Cantor-Zassenhaus equal-degree splitting
/// driven by the given seed. Throws std::invalid_argument for f = 0.
std::vector<Factor> poly_factor(const FqField& F, const Poly& f, std::uint64_t seed);

/// Field order at or below which Berlekamp replaces randomized splitting.
inline constexpr std::uint32_t kBerlekampMaxOrder = 16;

enum class FactorMethod { automatic, berlekamp, cantor_zassenhaus };
std::vector<Factor> poly_factor(const FqField& F, const Poly& f, std::uint64_t seed, FactorMethod method);

}  // namespace bca::ff
