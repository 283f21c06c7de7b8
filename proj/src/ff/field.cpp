#include "bca/ff/field.hpp"

#include <stdexcept>

namespace bca::ff {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * (a % m) % m;
    ++k;
    if (k > m) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
  }
  return k;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Dense F_p[x] helpers used only while searching for a modulus.
void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  const std::size_t d = f.size() - 1;  // f monic
  for (std::size_t k = r.size(); k-- > d;) {
    std::uint32_t c = r[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      r[k - d + j] = static_cast<std::uint32_t>((r[k - d + j] + std::uint64_t{p - c} * f[j]) % p);
  }
  r.resize(std::min(r.size(), d));
  trim(r);
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, k = p - 2;
  while (k) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t li = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a.back()} * li % p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t{p - c} * b[j]) % p);
    trim(a);
  }
  return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // f has no factor of degree k <= d/2 iff gcd(x^{p^k} - x, f) = 1 for all such k.
  Coeffs xp{0, 1};
  for (std::size_t k = 1; k <= d / 2; ++k) {
    Coeffs acc{1};
    Coeffs base = xp;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xp = acc;
    Coeffs h = xp;
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    if (poly_gcd(f, h, p).size() > 1) return false;
  }
  return true;
}

Coeffs digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  Coeffs c(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t undigits(const Coeffs& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

}  // namespace

FqField FqField::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw std::invalid_argument("fq_make: p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("fq_make: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("fq_make: field order exceeds table limit");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);

  if (e == 1) {
    t->modulus = {0, 1};
  } else {
    // Lex order with the x^{e-1} coefficient most significant: enumerate the
    // lower coefficients as the base-p digits of k.
    for (std::uint32_t k = 0; k < t->q; ++k) {
      Coeffs f = digits(k, p, e);
      f.push_back(1);
      if (f[0] != 0 && is_irreducible(f, p)) {
        t->modulus = f;
        break;
      }
    }
  }

  const std::uint32_t n = t->q - 1;
  auto raw_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    Coeffs r = poly_mulmod(digits(a, p, e), digits(b, p, e), t->modulus, p);
    r.resize(e, 0);
    return undigits(r, p);
  };
  auto raw_pow = [&](std::uint32_t a, std::uint64_t k) {
    std::uint32_t r = 1;
    while (k) {
      if (k & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      k >>= 1;
    }
    return r;
  };

  std::uint32_t g = 1;
  if (n > 1) {
    const auto primes = prime_divisors(n);
    for (g = 2; g < t->q; ++g) {
      bool ok = true;
      for (auto r : primes)
        if (raw_pow(g, n / r) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
  }

  t->exp.assign(2 * static_cast<std::size_t>(n), 0);
  t->log.assign(t->q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    t->exp[i] = t->exp[i + n] = x;
    t->log[x] = i;
    x = raw_mul(x, g);
  }

  t->neg.assign(t->q, 0);
  for (std::uint32_t c = 0; c < t->q; ++c) {
    Coeffs d = digits(c, p, e);
    for (auto& v : d) v = v == 0 ? 0 : p - v;
    t->neg[c] = undigits(d, p);
  }

  t->zech.assign(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t c = t->exp[i];
    std::uint32_t c0 = c % p;
    std::uint32_t s = c - c0 + (c0 + 1) % p;
    if (s != 0) t->zech[i] = t->log[s];
  }

  FqField F;
  F.t_ = std::move(t);
  if (e > 1 && F.q() <= kSumTableMax) {
    std::vector<std::uint32_t> sum(std::size_t{F.q()} * F.q());
    for (std::uint32_t a = 0; a < F.q(); ++a)
      for (std::uint32_t b = 0; b < F.q(); ++b) sum[std::size_t{a} * F.q() + b] = F.add_ext({a}, {b}).code;
    auto t2 = std::make_shared<Tables>(*F.t_);
    t2->sum = std::move(sum);
    F.t_ = std::move(t2);
  }
  return F;
}

std::string FqField::name() const { return "F_" + std::to_string(q()); }

FqElem FqField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p());
  if (r < 0) r += p();
  return {static_cast<std::uint32_t>(r)};
}

FqElem FqField::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > e()) throw std::invalid_argument("from_coeffs: too many coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p()) throw std::invalid_argument("from_coeffs: coefficient out of range");
    code = code * p() + c[i];
  }
  return {code};
}

std::vector<std::uint32_t> FqField::coeffs(FqElem a) const { return digits(a.code, p(), e()); }

FqElem FqField::add_ext(FqElem a, FqElem b) const {
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint32_t n = q() - 1;
  std::uint32_t la = t_->log[a.code], lb = t_->log[b.code];
  std::uint32_t d = lb >= la ? lb - la : lb + n - la;
  std::int64_t z = t_->zech[d];
  if (z < 0) return {0};
  return {t_->exp[la + static_cast<std::uint32_t>(z)]};
}

FqElem FqField::inv(FqElem a) const {
  if (a.code == 0) throw std::domain_error("FqField::inv: zero has no inverse");
  const std::uint32_t n = q() - 1;
  std::uint32_t l = t_->log[a.code];
  return {t_->exp[l == 0 ? 0 : n - l]};
}

FqElem FqField::pow(FqElem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t n = q() - 1;
  return {t_->exp[static_cast<std::uint32_t>((t_->log[a.code] % n) * (k % n) % n)]};
}

FqElem FqField::unity_root(std::uint64_t m) const {
  if (m == 0 || (q() - 1) % m != 0)
    throw std::domain_error("unity_root: " + std::to_string(m) + " does not divide " +
                            std::to_string(q() - 1) + "; field too small for the requested twist values");
  return pow(generator(), (q() - 1) / m);
}

std::uint64_t FqField::order(FqElem a) const {
  if (a.code == 0) throw std::domain_error("FqField::order: zero");
  const std::uint64_t n = q() - 1;
  std::uint64_t l = t_->log[a.code];
  std::uint64_t g = n;
  for (std::uint64_t x = l; x;) {
    std::uint64_t r = g % x;
    g = x;
    x = r;
  }
  return n / g;
}

}  // namespace bca::ff
