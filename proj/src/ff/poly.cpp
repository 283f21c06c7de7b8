#include "bca/ff/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "bca/ff/linalg.hpp"

namespace bca::ff {

namespace poly {

void trim(Poly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly monomial(const FqField&, std::size_t k, FqElem c) {
  if (c.is_zero()) return {};
  Poly f(k + 1, FqElem{0});
  f[k] = c;
  return f;
}

Poly add(const FqField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const FqField& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const FqField& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const FqField& F, const Poly& a, FqElem c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const FqField& F, const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("poly::divmod: division by zero polynomial");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly q(r.size() - b.size() + 1, F.zero());
  const FqElem li = F.inv(b.back());
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const FqElem c = F.mul(r.back(), li);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = F.sub(r[shift + j], F.mul(c, b[j]));
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const FqField& F, const Poly& a, const Poly& b) { return divmod(F, a, b).second; }

Poly monic(const FqField& F, const Poly& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

Poly gcd(const FqField& F, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = mod(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

Xgcd xgcd(const FqField& F, const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b, s0{F.one()}, s1{}, t0{}, t1{F.one()};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(F, r0, r1);
    Poly s2 = sub(F, s0, mul(F, q, s1));
    Poly t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  FqElem li = F.inv(r0.back());
  return {scale(F, r0, li), scale(F, s0, li), scale(F, t0, li)};
}

Poly derivative(const FqField& F, const Poly& f) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), f[i]);
  trim(d);
  return d;
}

Poly powmod(const FqField& F, const Poly& base, std::uint64_t k, const Poly& m) {
  Poly r = mod(F, Poly{F.one()}, m);
  Poly b = mod(F, base, m);
  while (k) {
    if (k & 1) r = mod(F, mul(F, r, b), m);
    k >>= 1;
    if (k) b = mod(F, mul(F, b, b), m);
  }
  return r;
}

FqElem eval(const FqField& F, const Poly& f, FqElem x) {
  FqElem r = F.zero();
  for (std::size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
  return r;
}

}  // namespace poly

namespace {

using namespace poly;

// p-th root of a polynomial in x^p: coefficients a -> a^(q/p).
Poly pth_root(const FqField& F, const Poly& f) {
  const std::uint32_t p = F.p();
  Poly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(F.pow(f[i], F.q() / p));
  trim(r);
  return r;
}

void squarefree(const FqField& F, const Poly& f, unsigned mult, std::vector<Factor>& out) {
  Poly c = gcd(F, f, derivative(F, f));
  Poly w = divmod(F, f, c).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(F, w, c);
    Poly z = divmod(F, w, y).first;
    if (degree(z) > 0) out.push_back({monic(F, z), i * mult});
    ++i;
    w = y;
    c = divmod(F, c, y).first;
  }
  if (degree(c) > 0) squarefree(F, monic(F, pth_root(F, c)), mult * F.p(), out);
}

std::vector<Poly> berlekamp(const FqField& F, const Poly& f) {
  const std::size_t d = static_cast<std::size_t>(degree(f));
  if (d <= 1) return {f};
  // Column i of M holds x^{qi} mod f minus x^i.
  FqMatrix M(F, d, d);
  const Poly xq = powmod(F, Poly{F.zero(), F.one()}, F.q(), f);
  Poly cur{F.one()};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) M.set(j, i, cur[j]);
    M.set(i, i, F.sub(M.at(i, i), F.one()));
    cur = mod(F, mul(F, cur, xq), f);
  }
  const auto kernel = kernel_basis(M);
  const std::size_t r = kernel.size();
  std::vector<Poly> factors{f};
  for (const auto& v : kernel) {
    if (factors.size() == r) break;
    Poly h(v.begin(), v.end());
    trim(h);
    if (degree(h) <= 0) continue;
    std::vector<Poly> next;
    for (const auto& g : factors) {
      if (degree(g) <= 1) {
        next.push_back(g);
        continue;
      }
      Poly rest = g;
      for (std::uint32_t c = 0; c < F.q() && degree(rest) > 0; ++c) {
        Poly hc = sub(F, h, Poly{FqElem{c}});
        Poly s = gcd(F, rest, hc);
        if (degree(s) > 0) {
          next.push_back(s);
          rest = divmod(F, rest, s).first;
        }
      }
      if (degree(rest) > 0) next.push_back(monic(F, rest));
    }
    factors = std::move(next);
  }
  return factors;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const FqField& F, const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f;
  const Poly x{F.zero(), F.one()};
  Poly h = x;
  for (unsigned i = 1; 2 * i <= static_cast<unsigned>(degree(rest)); ++i) {
    h = powmod(F, h, F.q(), rest);
    Poly g = gcd(F, rest, sub(F, h, x));
    if (degree(g) > 0) {
      out.emplace_back(g, i);
      rest = divmod(F, rest, g).first;
      h = mod(F, h, rest);
    }
  }
  if (degree(rest) > 0) out.emplace_back(monic(F, rest), static_cast<unsigned>(degree(rest)));
  return out;
}

void equal_degree(const FqField& F, const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(f);
  if (n <= static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.q() - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = FqElem{coeff(rng)};
    trim(a);
    if (degree(a) <= 0) continue;
    Poly b;
    if (F.p() == 2) {
      // Absolute trace to F_2: sum of a^{2^k}, k < e*d.
      Poly t = mod(F, a, f), acc = t;
      for (unsigned k = 1; k < F.e() * d; ++k) {
        t = mod(F, mul(F, t, t), f);
        acc = add(F, acc, t);
      }
      b = acc;
    } else {
      // a^{(q^d-1)/2} = (prod_{i<d} a^{q^i})^{(q-1)/2}
      Poly t = mod(F, a, f), norm = t;
      for (unsigned k = 1; k < d; ++k) {
        t = powmod(F, t, F.q(), f);
        norm = mod(F, mul(F, norm, t), f);
      }
      b = sub(F, powmod(F, norm, (F.q() - 1) / 2, f), Poly{F.one()});
    }
    Poly g = gcd(F, f, b);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, divmod(F, f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> poly_factor(const FqField& F, const Poly& f, std::uint64_t seed) {
  return poly_factor(F, f, seed, FactorMethod::automatic);
}

std::vector<Factor> poly_factor(const FqField& F, const Poly& f_in, std::uint64_t seed, FactorMethod method) {
  Poly f = f_in;
  trim(f);
  if (f.empty()) throw std::invalid_argument("poly_factor: zero polynomial");
  if (method == FactorMethod::automatic)
    method = F.q() <= kBerlekampMaxOrder ? FactorMethod::berlekamp : FactorMethod::cantor_zassenhaus;

  std::vector<Factor> sqf;
  if (degree(f) > 0) squarefree(F, monic(F, f), 1, sqf);

  std::mt19937_64 rng(seed);
  std::map<std::vector<std::uint32_t>, Factor> merged;
  auto key = [](const Poly& g) {
    std::vector<std::uint32_t> k{static_cast<std::uint32_t>(g.size())};
    for (auto c : g) k.push_back(c.code);
    return k;
  };
  for (const auto& [part, mult] : sqf) {
    std::vector<Poly> irreducibles;
    if (method == FactorMethod::berlekamp) {
      irreducibles = berlekamp(F, part);
    } else {
      for (const auto& [g, d] : distinct_degree(F, part)) equal_degree(F, g, d, rng, irreducibles);
    }
    for (auto& g : irreducibles) {
      g = monic(F, g);
      auto [it, fresh] = merged.try_emplace(key(g), Factor{g, 0});
      it->second.multiplicity += mult;
    }
  }
  std::vector<Factor> out;
  for (auto& [k, fac] : merged) out.push_back(std::move(fac));
  return out;
}

}  // namespace bca::ff
