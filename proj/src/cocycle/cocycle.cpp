#include "bca/cocycle/cocycle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bca/ff/snf.hpp"

namespace bca::cocycle {

namespace {

std::uint32_t red(std::int64_t v, std::uint64_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r);
}

std::vector<Elem> distinct_generators(const Group& G) {
  std::vector<Elem> S;
  for (Elem s : G.generators())
    if (s != 0 && std::find(S.begin(), S.end(), s) == S.end()) S.push_back(s);
  return S;
}

// A cocycle f is determined by the values f(x, s), s in S, and the constant
// f(x, 1): walking the breadth-first tree w = parent(w) * s(w), the cocycle
// identity at (x, parent(w), s(w)) gives
//   f(x, w) = f(x parent(w), s(w)) + f(x, parent(w)) - f(parent(w), s(w)).
// expand[x * n + w] stores f(x, w) as an integer combination of those
// K = n |S| + 1 unknowns: u(x, k) = x |S| + k, and the constant at n |S|.
struct Parametrization {
  std::size_t n = 0, s = 0, K = 0;
  std::vector<Elem> S;
  std::vector<std::int32_t> expand;  // n * n * K

  const std::int32_t* at(Elem x, Elem w) const { return &expand[(static_cast<std::size_t>(x) * n + w) * K]; }
  std::size_t u(Elem x, std::size_t k) const { return static_cast<std::size_t>(x) * s + k; }
};

Parametrization parametrize(const Group& G) {
  Parametrization P;
  P.n = G.order();
  P.S = distinct_generators(G);
  P.s = P.S.size();
  P.K = P.n * P.s + 1;
  const std::size_t n = P.n, K = P.K;
  std::vector<Elem> order{0}, parent(n, 0);
  std::vector<std::size_t> via(n, 0);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (std::size_t k = 0; k < P.s; ++k) {
      Elem w = G.mul(order[h], P.S[k]);
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = order[h];
      via[w] = k;
      order.push_back(w);
    }
  P.expand.assign(n * n * K, 0);
  auto row = [&](Elem x, Elem w) { return &P.expand[(static_cast<std::size_t>(x) * n + w) * K]; };
  for (Elem x = 0; x < n; ++x) row(x, 0)[K - 1] = 1;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Elem w = order[i], pw = parent[w];
    const std::size_t k = via[w];
    for (Elem x = 0; x < n; ++x) {
      std::int32_t* r = row(x, w);
      if (pw == 0) {
        r[P.u(x, k)] = 1;
        continue;
      }
      const std::int32_t* base = row(x, pw);
      std::copy(base, base + K, r);
      r[P.u(G.mul(x, pw), k)] += 1;
      r[P.u(pw, k)] -= 1;
    }
  }
  return P;
}

// Row span of A over Z/l^a, as at most cols rows.
ff::IntMatrixModM compress(const ff::IntMatrixModM& A, std::uint64_t ell, unsigned a) {
  const ff::LocalSnf s = ff::local_snf(A, ell, a);
  ff::IntMatrixModM out(0, A.cols(), A.modulus());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (s.valuation[j] >= a) continue;
    std::uint64_t scale = 1;
    for (unsigned i = 0; i < s.valuation[j]; ++i) scale *= ell;
    const std::size_t r = out.push_row();
    for (std::size_t c = 0; c < A.cols(); ++c)
      out.set(r, c, static_cast<std::int64_t>(scale * s.dual[j][c] % A.modulus()));
  }
  return out;
}

// Generators of Hom(G, Z/m), one value per element.
std::vector<std::vector<std::uint64_t>> hom_generators(const Group& G, const std::vector<Elem>& S, std::uint64_t m) {
  const std::size_t n = G.order();
  ff::IntMatrixModM A(0, n, m);
  for (Elem x = 0; x < n; ++x)
    for (Elem s : S) {
      const std::size_t r = A.push_row();
      A.add_to(r, G.mul(x, s), 1);
      A.add_to(r, x, -1);
      A.add_to(r, s, -1);
    }
  {
    const std::size_t r = A.push_row();
    A.add_to(r, 0, 1);
  }
  return ff::snf_solution_space(A).generators;
}

}  // namespace

std::uint64_t default_m(const Group& G, std::uint64_t p) { return G.order() / grp::p_part(G.order(), p); }

Cocycle2 trivial_cocycle(std::shared_ptr<const Group> G, std::uint64_t m) {
  const std::size_t n = G->order();
  return Cocycle2{std::move(G), m, std::vector<std::uint32_t>(n * n, 0)};
}

Cocycle2 make_cocycle(std::shared_ptr<const Group> G, std::uint64_t m, std::vector<std::uint32_t> table) {
  if (m == 0) throw std::invalid_argument("cocycle: m must be >= 1");
  if (table.size() != G->order() * G->order()) throw std::invalid_argument("cocycle: table must be n x n");
  for (auto v : table)
    if (v >= m) throw std::invalid_argument("cocycle: entry outside [0, m)");
  return Cocycle2{std::move(G), m, std::move(table)};
}

bool is_cocycle(const Cocycle2& c) {
  const Group& G = *c.group;
  const std::size_t n = G.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem xy = G.mul(x, y);
      const std::uint64_t cxy = c.at(x, y);
      for (Elem z = 0; z < n; ++z)
        if ((c.at(xy, z) + cxy) % c.m != (c.at(x, G.mul(y, z)) + c.at(y, z)) % c.m) return false;
    }
  return true;
}

Cocycle2 coboundary(std::shared_ptr<const Group> G, std::uint64_t m, const std::vector<std::int64_t>& lambda) {
  const std::size_t n = G->order();
  if (lambda.size() != n) throw std::invalid_argument("coboundary: lambda needs one value per element");
  Cocycle2 c = trivial_cocycle(G, m);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) c.at(x, y) = red(lambda[x] + lambda[y] - lambda[G->mul(x, y)], m);
  return c;
}

Cocycle2 add(const Cocycle2& a, const Cocycle2& b) {
  if (a.m != b.m || a.table.size() != b.table.size()) throw std::invalid_argument("cocycle add: shape mismatch");
  Cocycle2 c = a;
  for (std::size_t i = 0; i < c.table.size(); ++i) c.table[i] = static_cast<std::uint32_t>((a.table[i] + b.table[i]) % a.m);
  return c;
}

Cocycle2 normalize(const Cocycle2& c) {
  Cocycle2 r = c;
  const std::int64_t a = c.at(0, 0);
  for (auto& v : r.table) v = red(static_cast<std::int64_t>(v) - a, c.m);
  return r;
}

CocycleClassGroup h2_classes(std::shared_ptr<const Group> Gp, std::uint64_t m, std::uint64_t p, std::size_t cap) {
  if (m == 0) throw std::invalid_argument("h2_classes: m must be >= 1");
  if (std::gcd(m, p) != 1)
    throw std::invalid_argument("h2_classes: m = " + std::to_string(m) + " is not coprime to p = " + std::to_string(p));
  const Group& G = *Gp;
  const std::size_t n = G.order();
  CocycleClassGroup out;
  out.group = Gp;
  out.m = m;
  out.representatives.push_back(trivial_cocycle(Gp, m));
  if (m == 1 || n == 1) return out;

  const Parametrization P = parametrize(G);
  const std::size_t K = P.K, s = P.s;
  const auto homs = hom_generators(G, P.S, m);

  struct Gen {
    std::vector<std::uint32_t> table;
    std::uint64_t order;
  };
  std::vector<Gen> gens;
  std::vector<std::uint64_t> elementary;

  for (const auto& [ell, a] : ff::factor_prime_powers(m)) {
    std::uint64_t M = 1;
    for (unsigned i = 0; i < a; ++i) M *= ell;
    auto redM = [&](std::int64_t v) { return static_cast<std::int64_t>(red(v, M)); };

    // Z^2 in U-coordinates: cocycle identity at (x, y, s) for s in S.
    ff::IntMatrixModM rows(0, K, M);
    std::vector<std::int64_t> acc(K);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (std::size_t k = 0; k < s; ++k) {
          const std::int32_t* fxy = P.at(x, y);
          const std::int32_t* fxys = P.at(x, G.mul(y, P.S[k]));
          bool nonzero = false;
          for (std::size_t c = 0; c < K; ++c) acc[c] = fxy[c] - fxys[c];
          acc[P.u(G.mul(x, y), k)] += 1;
          acc[P.u(y, k)] -= 1;
          for (std::size_t c = 0; c < K; ++c) nonzero |= redM(acc[c]) != 0;
          if (!nonzero) continue;
          const std::size_t r = rows.push_row();
          for (std::size_t c = 0; c < K; ++c) rows.set(r, c, acc[c]);
          if (rows.rows() >= 2 * K + 64) rows = compress(rows, ell, a);
        }
    const ff::LocalSnf Z = ff::local_snf(rows, ell, a);
    std::vector<std::size_t> J;
    for (std::size_t j = 0; j < K; ++j)
      if (Z.valuation[j] > 0) J.push_back(j);
    if (J.empty()) continue;

    // Effective coboundaries in U-coordinates.
    std::vector<std::vector<std::int64_t>> B;
    for (Elem g = 0; g < n; ++g) {
      std::vector<std::int64_t> b(K, 0);
      for (Elem x = 0; x < n; ++x)
        for (std::size_t k = 0; k < s; ++k)
          b[P.u(x, k)] = (x == g) + (P.S[k] == g) - (G.mul(x, P.S[k]) == g);
      b[K - 1] = (g == 0);
      B.push_back(std::move(b));
    }
    for (const auto& phi : homs) {
      std::vector<std::int64_t> b(K, 0);
      for (Elem x = 0; x < n; ++x)
        for (std::size_t k = 0; k < s; ++k) {
          const std::int64_t carry =
              static_cast<std::int64_t>(phi[x] + phi[P.S[k]] - phi[G.mul(x, P.S[k])]) / static_cast<std::int64_t>(m);
          b[P.u(x, k)] = carry;
        }
      b[K - 1] = static_cast<std::int64_t>(2 * phi[0] - phi[0]) / static_cast<std::int64_t>(m);
      B.push_back(std::move(b));
    }

    // H^2 = (sum over J of Z/l^v_j) / image of B, as a quotient of (Z/l^a)^J.
    ff::IntMatrixModM R(0, J.size(), M);
    for (std::size_t i = 0; i < J.size(); ++i) {
      std::uint64_t lv = 1;
      for (unsigned t = 0; t < Z.valuation[J[i]]; ++t) lv *= ell;
      R.set(R.push_row(), i, static_cast<std::int64_t>(lv % M));
    }
    for (const auto& b : B) {
      const std::size_t r = R.push_row();
      for (std::size_t i = 0; i < J.size(); ++i) {
        const auto& dual = Z.dual[J[i]];
        unsigned __int128 y = 0;
        for (std::size_t c = 0; c < K; ++c) y += static_cast<unsigned __int128>(dual[c]) * static_cast<std::uint64_t>(redM(b[c]));
        const std::uint64_t yj = static_cast<std::uint64_t>(y % M);
        std::uint64_t shift = 1;
        for (unsigned t = Z.valuation[J[i]]; t < a; ++t) shift *= ell;
        if (yj % shift != 0) throw std::logic_error("h2_classes: coboundary outside the cocycle module");
        R.set(r, i, static_cast<std::int64_t>(yj / shift));
      }
    }
    const ff::LocalSnf Q = ff::local_snf(R, ell, a);
    for (std::size_t i = 0; i < J.size(); ++i) {
      const unsigned w = Q.valuation[i];
      if (w == 0) continue;
      std::uint64_t order = 1;
      for (unsigned t = 0; t < w; ++t) order *= ell;
      // Generator in U-coordinates: sum_j l^(a - v_j) t_j basis_j.
      std::vector<std::uint64_t> xu(K, 0);
      for (std::size_t j = 0; j < J.size(); ++j) {
        const std::uint64_t t = Q.dual[i][j] % M;
        if (t == 0) continue;
        std::uint64_t shift = 1;
        for (unsigned e = Z.valuation[J[j]]; e < a; ++e) shift *= ell;
        const std::uint64_t coef = t * shift % M;
        for (std::size_t c = 0; c < K; ++c) xu[c] = (xu[c] + coef * Z.basis[J[j]][c]) % M;
      }
      Gen gen{std::vector<std::uint32_t>(n * n), order};
      const std::uint64_t embed = m / M;
      for (Elem x = 0; x < n; ++x)
        for (Elem w2 = 0; w2 < n; ++w2) {
          const std::int32_t* e = P.at(x, w2);
          std::int64_t v = 0;
          for (std::size_t c = 0; c < K; ++c)
            if (e[c]) v = (v + static_cast<std::int64_t>(e[c]) * static_cast<std::int64_t>(xu[c])) % static_cast<std::int64_t>(M);
          gen.table[static_cast<std::size_t>(x) * n + w2] = red(redM(v) * static_cast<std::int64_t>(embed), m);
        }
      gens.push_back(std::move(gen));
      elementary.push_back(order);
    }
  }

  // Invariant factors from the elementary divisors.
  {
    std::vector<std::vector<std::uint64_t>> byprime;
    std::vector<std::uint64_t> primes;
    for (auto d : elementary) {
      const std::uint64_t l = ff::prime_divisors(d).front();
      auto it = std::find(primes.begin(), primes.end(), l);
      if (it == primes.end()) {
        primes.push_back(l);
        byprime.emplace_back();
        it = primes.end() - 1;
      }
      byprime[static_cast<std::size_t>(it - primes.begin())].push_back(d);
    }
    std::size_t len = 0;
    for (auto& v : byprime) {
      std::sort(v.rbegin(), v.rend());
      len = std::max(len, v.size());
    }
    std::vector<std::uint64_t> inv(len, 1);
    for (const auto& v : byprime)
      for (std::size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
    std::reverse(inv.begin(), inv.end());
    out.invariant_factors = std::move(inv);
  }

  out.class_count = 1;
  for (const auto& g : gens) out.class_count *= g.order;
  out.representatives.clear();
  std::vector<std::uint64_t> digit(gens.size(), 0);
  for (;;) {
    if (out.representatives.size() >= cap) {
      out.truncated = true;
      break;
    }
    Cocycle2 c = trivial_cocycle(Gp, m);
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (digit[g])
        for (std::size_t i = 0; i < c.table.size(); ++i)
          c.table[i] = static_cast<std::uint32_t>((c.table[i] + digit[g] * gens[g].table[i]) % m);
    out.representatives.push_back(normalize(c));
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == gens[k].order) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return out;
}

bool is_cohomologous(const Cocycle2& a, const Cocycle2& b) {
  if (a.m != b.m || a.table.size() != b.table.size()) throw std::invalid_argument("is_cohomologous: shape mismatch");
  const Group& G = *a.group;
  const std::size_t n = G.order();
  const std::uint64_t m = a.m, M = m * m;
  const auto S = distinct_generators(G);
  // Solve lambda(x) + lambda(s) - lambda(xs) = m (a - b)(x, s) mod m^2: the
  // right side must be orthogonal to the left kernel of the system.
  ff::IntMatrixModM At(n, n * S.size() + 1, M);
  std::vector<std::int64_t> rhs;
  std::size_t r = 0;
  for (Elem x = 0; x < n; ++x)
    for (Elem s : S) {
      At.add_to(x, r, 1);
      At.add_to(s, r, 1);
      At.add_to(G.mul(x, s), r, -1);
      rhs.push_back(static_cast<std::int64_t>(m) * (static_cast<std::int64_t>(a.at(x, s)) - b.at(x, s)));
      ++r;
    }
  At.add_to(0, r, 1);
  rhs.push_back(static_cast<std::int64_t>(m) * (static_cast<std::int64_t>(a.at(0, 0)) - b.at(0, 0)));
  const auto left = ff::snf_solution_space(At);
  for (const auto& w : left.generators) {
    unsigned __int128 dot = 0;
    for (std::size_t i = 0; i < rhs.size(); ++i) dot += static_cast<unsigned __int128>(w[i]) * red(rhs[i], M);
    if (dot % M != 0) return false;
  }
  return true;
}

std::vector<Elem> alpha_regular_set(const Cocycle2& c) {
  const Group& G = *c.group;
  const std::size_t n = G.order();
  std::vector<bool> reg(n, true);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n && reg[x]; ++y)
      if (G.commute(x, y) && c.at(x, y) != c.at(y, x)) reg[x] = false;
  for (Elem x = 0; x < n; ++x)
    for (Elem g : G.generators())
      if (reg[G.conj(g, x)] != reg[x]) throw std::logic_error("alpha_regular_set: set is not closed under conjugation");
  std::vector<Elem> out;
  for (Elem x = 0; x < n; ++x)
    if (reg[x]) out.push_back(x);
  return out;
}

ff::FqElem eval(const Cocycle2& c, const ff::FqField& F, Elem x, Elem y) {
  return F.pow(F.unity_root(c.m), c.at(x, y));
}

}  // namespace bca::cocycle
