#include "bca/ff/snf.hpp"

#include <stdexcept>

namespace bca::ff {

IntMatrixModM::IntMatrixModM(std::size_t rows, std::size_t cols, std::uint64_t m)
    : rows_(rows), cols_(cols), m_(m), data_(rows * cols, 0) {
  if (m == 0) throw std::invalid_argument("IntMatrixModM: modulus must be >= 1");
}

void IntMatrixModM::set(std::size_t r, std::size_t c, std::int64_t v) {
  std::int64_t x = v % static_cast<std::int64_t>(m_);
  if (x < 0) x += static_cast<std::int64_t>(m_);
  data_[r * cols_ + c] = static_cast<std::uint64_t>(x);
}

void IntMatrixModM::add_to(std::size_t r, std::size_t c, std::int64_t v) {
  std::int64_t x = v % static_cast<std::int64_t>(m_);
  if (x < 0) x += static_cast<std::int64_t>(m_);
  data_[r * cols_ + c] = (data_[r * cols_ + c] + static_cast<std::uint64_t>(x)) % m_;
}

std::size_t IntMatrixModM::push_row() {
  data_.resize(data_.size() + cols_, 0);
  return rows_++;
}

std::uint64_t SolutionModule::size() const {
  std::uint64_t s = 1;
  for (auto o : orders) s *= o;
  return s;
}

std::vector<std::vector<std::uint64_t>> SolutionModule::enumerate() const {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> digit(orders.size(), 0);
  for (;;) {
    std::vector<std::uint64_t> x(length, 0);
    for (std::size_t g = 0; g < generators.size(); ++g)
      for (std::size_t i = 0; i < length; ++i) x[i] = (x[i] + digit[g] * generators[g][i]) % m;
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == orders[k]) digit[k++] = 0;
    if (k == digit.size()) break;
  }
  return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_prime_powers(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned a = 0;
    while (n % d == 0) {
      n /= d;
      ++a;
    }
    if (a) out.emplace_back(d, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("inverse_mod: not invertible");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

LocalSnf local_snf(const IntMatrixModM& A, std::uint64_t ell, unsigned a) {
  LocalSnf out;
  out.ell = ell;
  out.a = a;
  std::uint64_t M = 1;
  for (unsigned i = 0; i < a; ++i) M *= ell;
  out.modulus = M;

  const std::size_t rows = A.rows(), cols = A.cols();
  std::vector<std::uint64_t> W(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) W[r * cols + c] = A.at(r, c) % M;
  auto w = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return W[r * cols + c]; };
  auto val = [&](std::uint64_t x) {
    if (x == 0) return a;
    unsigned v = 0;
    while (x % ell == 0) {
      x /= ell;
      ++v;
    }
    return v;
  };

  out.basis.assign(cols, std::vector<std::uint64_t>(cols, 0));
  out.dual.assign(cols, std::vector<std::uint64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) out.basis[j][j] = out.dual[j][j] = 1;
  out.valuation.assign(cols, a);

  // Rows that are already zero in the active block are dropped from the scan.
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < rows; ++r) live.push_back(r);

  for (std::size_t k = 0; k < cols && !live.empty(); ++k) {
    unsigned best = a;
    std::size_t bi = 0, bj = 0, bli = 0;
    for (std::size_t li = 0; li < live.size() && best > 0; ++li) {
      const std::size_t r = live[li];
      for (std::size_t c = k; c < cols; ++c) {
        std::uint64_t x = w(r, c);
        if (x == 0) continue;
        unsigned v = val(x);
        if (v < best) {
          best = v;
          bi = r;
          bj = c;
          bli = li;
          if (v == 0) break;
        }
      }
    }
    if (best == a) break;

    if (bj != k) {
      for (std::size_t r : live) std::swap(w(r, k), w(r, bj));
      std::swap(out.basis[k], out.basis[bj]);
      std::swap(out.dual[k], out.dual[bj]);
    }
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(bli));

    std::uint64_t pl = 1;
    for (unsigned i = 0; i < best; ++i) pl *= ell;
    const std::uint64_t unit = w(bi, k) / pl;
    const std::uint64_t uinv = inverse_mod(unit % M, M);
    for (std::size_t c = k; c < cols; ++c) w(bi, c) = static_cast<std::uint64_t>((unsigned __int128)w(bi, c) * uinv % M);

    std::vector<std::size_t> still;
    still.reserve(live.size());
    for (std::size_t r : live) {
      std::uint64_t x = w(r, k);
      bool nonzero = false;
      if (x != 0) {
        const std::uint64_t t = x / pl;
        for (std::size_t c = k; c < cols; ++c) {
          std::uint64_t sub = static_cast<std::uint64_t>((unsigned __int128)t * w(bi, c) % M);
          w(r, c) = (w(r, c) + M - sub) % M;
          nonzero |= w(r, c) != 0;
        }
      } else {
        for (std::size_t c = k + 1; c < cols && !nonzero; ++c) nonzero = w(r, c) != 0;
      }
      if (nonzero) still.push_back(r);
    }
    live = std::move(still);

    for (std::size_t c = k + 1; c < cols; ++c) {
      std::uint64_t x = w(bi, c);
      if (x == 0) continue;
      const std::uint64_t t = x / pl;
      w(bi, c) = 0;
      for (std::size_t i = 0; i < cols; ++i) {
        out.basis[c][i] = (out.basis[c][i] + M - static_cast<std::uint64_t>((unsigned __int128)t * out.basis[k][i] % M)) % M;
        out.dual[k][i] = (out.dual[k][i] + static_cast<std::uint64_t>((unsigned __int128)t * out.dual[c][i] % M)) % M;
      }
    }
    out.valuation[k] = best;
  }
  return out;
}

SolutionModule snf_solution_space(const IntMatrixModM& A) {
  SolutionModule sol;
  sol.m = A.modulus();
  sol.length = A.cols();
  const std::uint64_t m = sol.m;
  for (const auto& [ell, a] : factor_prime_powers(m)) {
    LocalSnf s = local_snf(A, ell, a);
    const std::uint64_t M = s.modulus;
    const std::uint64_t cof = m / M;
    const std::uint64_t idem = static_cast<std::uint64_t>((unsigned __int128)cof * inverse_mod(cof % M, M) % m);
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const unsigned v = s.valuation[j];
      if (v == 0) continue;
      std::uint64_t lift = 1, order = 1;
      for (unsigned i = v; i < a; ++i) lift *= ell;
      for (unsigned i = 0; i < v; ++i) order *= ell;
      std::vector<std::uint64_t> g(A.cols());
      for (std::size_t i = 0; i < A.cols(); ++i) {
        std::uint64_t local = static_cast<std::uint64_t>((unsigned __int128)lift * s.basis[j][i] % M);
        g[i] = static_cast<std::uint64_t>((unsigned __int128)local * idem % m);
      }
      sol.generators.push_back(std::move(g));
      sol.orders.push_back(order);
    }
  }
  return sol;
}

}  // namespace bca::ff
