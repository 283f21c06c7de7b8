#include "bca/algebra/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace bca::algebra {

namespace {

// Dense accumulator that remembers which coordinates it touched.
struct Acc {
  const FqField& F;
  std::vector<FqElem> v;
  std::vector<std::uint32_t> touched;

  Acc(const FqField& F_, std::size_t n) : F(F_), v(n, FqElem{0}) {}
  void add(std::uint32_t k, FqElem c) {
    if (c.is_zero()) return;
    if (v[k].is_zero()) touched.push_back(k);
    v[k] = F.add(v[k], c);
  }
  void clear() {
    for (auto k : touched) v[k] = FqElem{0};
    touched.clear();
  }
};

std::vector<Vec> generators_or_basis(const StructAlgebra& A) {
  if (!A.generators().empty()) return A.generators();
  std::vector<Vec> all;
  for (std::size_t i = 0; i < A.dim(); ++i) all.push_back(A.basis_vector(i));
  return all;
}

}  // namespace

StructAlgebra::StructAlgebra(FqField F, std::size_t dim, std::vector<std::vector<Term>> sc, Vec unit,
                             std::vector<std::string> labels, std::vector<Vec> generators, Options opt)
    : F_(std::move(F)),
      n_(dim),
      sc_(std::move(sc)),
      unit_(std::move(unit)),
      labels_(std::move(labels)),
      gens_(std::move(generators)),
      seed_(opt.sample_seed) {
  if (sc_.size() != n_ * n_) throw std::invalid_argument("StructAlgebra: need dim^2 structure-constant entries");
  if (unit_.size() != n_) throw std::invalid_argument("StructAlgebra: unit has wrong length");
  for (const auto& g : gens_)
    if (g.size() != n_) throw std::invalid_argument("StructAlgebra: generator has wrong length");
  for (auto& terms : sc_)
    for (const auto& t : terms)
      if (t.k >= n_) throw std::invalid_argument("StructAlgebra: structure constant index out of range");
  if (labels_.empty())
    for (std::size_t i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i));
  if (labels_.size() != n_) throw std::invalid_argument("StructAlgebra: wrong number of labels");
  validate(opt.paranoid);
}

void StructAlgebra::validate(bool paranoid) {
  const std::size_t n = n_;
  Acc left(F_, n), right(F_, n);
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    for (const auto& a : sc(i, j))
      for (const auto& b : sc(a.k, k)) left.add(b.k, F_.mul(a.c, b.c));
    for (const auto& a : sc(j, k))
      for (const auto& b : sc(i, a.k)) right.add(b.k, F_.mul(a.c, b.c));
    bool ok = true;
    for (auto t : left.touched) ok = ok && left.v[t] == right.v[t];
    for (auto t : right.touched) ok = ok && left.v[t] == right.v[t];
    left.clear();
    right.clear();
    if (!ok)
      throw std::invalid_argument("StructAlgebra: associativity fails at (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
  };
  if (n <= 64 || paranoid) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) check(i, j, k);
  } else {
    std::mt19937_64 rng(seed_);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < 10 * n * n; ++s) check(pick(rng), pick(rng), pick(rng));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = basis_vector(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e)
      throw std::invalid_argument("StructAlgebra: unit law fails at basis element " + std::to_string(i));
  }
}

Vec StructAlgebra::basis_vector(std::size_t i) const {
  Vec v(n_, F_.zero());
  v[i] = F_.one();
  return v;
}

Vec StructAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r(n_, F_.zero());
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      const FqElem c = F_.mul(a[i], b[j]);
      for (const auto& t : sc(i, j)) r[t.k] = F_.add(r[t.k], F_.mul(c, t.c));
    }
  }
  return r;
}

StructAlgebra group_algebra(const Group& G, const FqField& F) {
  const std::size_t n = G.order();
  std::vector<std::vector<Term>> sc(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) sc[g * n + h] = {Term{G.mul(g, h), F.one()}};
  Vec unit(n, F.zero());
  unit[0] = F.one();
  std::vector<std::string> labels;
  for (Elem g = 0; g < n; ++g) labels.push_back(G.element_name(g));
  std::vector<Vec> gens;
  for (Elem s : G.generators()) {
    Vec v(n, F.zero());
    v[s] = F.one();
    gens.push_back(std::move(v));
  }
  return StructAlgebra(F, n, std::move(sc), std::move(unit), std::move(labels), std::move(gens));
}

StructAlgebra twisted_group_algebra(const Group& G, const cocycle::Cocycle2& c, const FqField& F) {
  const std::size_t n = G.order();
  if (c.table.size() != n * n) throw std::invalid_argument("twisted_group_algebra: cocycle is for another group");
  if (c.at(0, 0) != 0) throw std::invalid_argument("twisted_group_algebra: cocycle is not normalized");
  const FqElem zeta = F.unity_root(c.m);
  std::vector<FqElem> powers(c.m);
  powers[0] = F.one();
  for (std::size_t i = 1; i < c.m; ++i) powers[i] = F.mul(powers[i - 1], zeta);
  std::vector<std::vector<Term>> sc(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) sc[g * n + h] = {Term{G.mul(g, h), powers[c.at(g, h)]}};
  Vec unit(n, F.zero());
  unit[0] = F.one();
  std::vector<std::string> labels;
  for (Elem g = 0; g < n; ++g) labels.push_back(G.element_name(g));
  std::vector<Vec> gens;
  for (Elem s : G.generators()) {
    Vec v(n, F.zero());
    v[s] = F.one();
    gens.push_back(std::move(v));
  }
  return StructAlgebra(F, n, std::move(sc), std::move(unit), std::move(labels), std::move(gens));
}

std::vector<Vec> algebra_center(const StructAlgebra& A) {
  const std::size_t n = A.dim();
  const FqField& F = A.field();
  ff::SparseMatrix S(F, n);
  for (const Vec& b : generators_or_basis(A)) {
    // Row t: sum_i z_i ((e_i b)_t - (b e_i)_t)
    std::vector<ff::SparseRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = A.basis_vector(i);
      const Vec l = A.mul(e, b), r = A.mul(b, e);
      for (std::size_t t = 0; t < n; ++t) {
        const FqElem d = F.sub(l[t], r[t]);
        if (!d.is_zero()) rows[t].push_back({static_cast<std::uint32_t>(i), d});
      }
    }
    for (auto& row : rows)
      if (!row.empty()) S.add_row(std::move(row));
  }
  return ff::nullspace(S, true).basis;
}

DerivationSpace derivation_space(const StructAlgebra& A, bool want_basis, ff::Elimination method) {
  const std::size_t n = A.dim();
  const FqField& F = A.field();
  DerivationSpace out;
  if (n == 0) return out;
  // Unknown D[t][k] (coefficient of e_t in D(e_k)) sits in column k * n + t.
  // Leibniz on (e_i, b) for b in a generating set plus the unit suffices.
  std::vector<Vec> bs = generators_or_basis(A);
  bs.push_back(A.unit());
  ff::SparseMatrix S(F, n * n);
  std::vector<Vec> right(n);  // right[k] = e_k b
  for (const Vec& b : bs) {
    for (std::size_t k = 0; k < n; ++k) right[k] = A.mul(A.basis_vector(k), b);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<ff::SparseRow> rows(n);
      const Vec& w = right[i];
      for (std::size_t k = 0; k < n; ++k) {
        if (w[k].is_zero()) continue;
        for (std::size_t t = 0; t < n; ++t) rows[t].push_back({static_cast<std::uint32_t>(k * n + t), w[k]});
      }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t t = 0; t < n; ++t)
          if (!right[k][t].is_zero()) rows[t].push_back({static_cast<std::uint32_t>(i * n + k), F.neg(right[k][t])});
      for (std::size_t l = 0; l < n; ++l) {
        if (b[l].is_zero()) continue;
        const FqElem nb = F.neg(b[l]);
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& term : A.sc(i, k))
            rows[term.k].push_back({static_cast<std::uint32_t>(l * n + k), F.mul(nb, term.c)});
      }
      for (auto& row : rows)
        if (!row.empty()) S.add_row(std::move(row));
    }
  }
  const auto ns = ff::nullspace(S, want_basis, method);
  out.dim = ns.dim;
  for (const auto& v : ns.basis) {
    FqMatrix D(F, n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t t = 0; t < n; ++t) D.set(t, k, v[k * n + t]);
    out.basis.push_back(std::move(D));
  }
  return out;
}

FqMatrix inner_derivation(const StructAlgebra& A, const Vec& x) {
  const std::size_t n = A.dim();
  const FqField& F = A.field();
  FqMatrix D(F, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Vec e = A.basis_vector(k);
    const Vec l = A.mul(x, e), r = A.mul(e, x);
    for (std::size_t t = 0; t < n; ++t) D.set(t, k, F.sub(l[t], r[t]));
  }
  return D;
}

DerivationSpace inner_derivation_space(const StructAlgebra& A, bool want_basis) {
  const std::size_t n = A.dim();
  DerivationSpace out;
  if (!want_basis) {
    out.dim = n - algebra_center(A).size();
    return out;
  }
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < n; ++i) {
    const FqMatrix D = inner_derivation(A, A.basis_vector(i));
    Vec v(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t t = 0; t < n; ++t) v[k * n + t] = D.at(t, k);
    flat.push_back(std::move(v));
  }
  const auto span = ff::span_basis(A.field(), n * n, flat);
  out.dim = span.size();
  for (const auto& v : span) {
    FqMatrix D(A.field(), n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t t = 0; t < n; ++t) D.set(t, k, v[k * n + t]);
    out.basis.push_back(std::move(D));
  }
  return out;
}

std::size_t hh1_dim(const StructAlgebra& A, ff::Elimination method) {
  const std::size_t der = derivation_space(A, false, method).dim;
  const std::size_t inn = inner_derivation_space(A).dim;
  if (inn > der) throw std::logic_error("hh1_dim: inner derivations exceed derivations");
  return der - inn;
}

bool is_derivation(const StructAlgebra& A, const FqMatrix& D) {
  const std::size_t n = A.dim();
  const FqField& F = A.field();
  std::vector<Vec> img(n);
  for (std::size_t k = 0; k < n; ++k) {
    img[k].resize(n);
    for (std::size_t t = 0; t < n; ++t) img[k][t] = D.at(t, k);
  }
  auto apply = [&](const Vec& v) {
    Vec r(n, F.zero());
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero())
        for (std::size_t t = 0; t < n; ++t) r[t] = F.add(r[t], F.mul(v[k], img[k][t]));
    return r;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ei = A.basis_vector(i), ej = A.basis_vector(j);
      const Vec lhs = apply(A.mul(ei, ej));
      const Vec a = A.mul(img[i], ej), b = A.mul(ei, img[j]);
      for (std::size_t t = 0; t < n; ++t)
        if (lhs[t] != F.add(a[t], b[t])) return false;
    }
  return true;
}

bool is_central(const StructAlgebra& A, const Vec& z) {
  for (const Vec& b : generators_or_basis(A))
    if (A.mul(z, b) != A.mul(b, z)) return false;
  return true;
}

bool is_idempotent(const StructAlgebra& A, const Vec& e) { return A.mul(e, e) == e; }

std::vector<Vec> ideal_basis(const StructAlgebra& A, const Vec& e) {
  std::vector<Vec> span;
  for (std::size_t i = 0; i < A.dim(); ++i) span.push_back(A.mul(e, A.basis_vector(i)));
  return ff::span_basis(A.field(), A.dim(), span);
}

Vec echelon_coordinates(const std::vector<Vec>& basis, const Vec& v) {
  Vec c(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::size_t piv = 0;
    while (basis[j][piv].is_zero()) ++piv;
    c[j] = v[piv];
  }
  return c;
}

StructAlgebra ideal_algebra_on_idempotent(const StructAlgebra& A, const Vec& e) {
  if (!is_idempotent(A, e)) throw std::invalid_argument("ideal_algebra_on_idempotent: e is not idempotent");
  if (!is_central(A, e)) throw std::invalid_argument("ideal_algebra_on_idempotent: e is not central");
  const FqField& F = A.field();
  const auto B = ideal_basis(A, e);
  const std::size_t d = B.size();
  std::vector<std::vector<Term>> sc(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vec c = echelon_coordinates(B, A.mul(B[i], B[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero()) sc[i * d + j].push_back({static_cast<std::uint32_t>(k), c[k]});
    }
  std::vector<Vec> gens;
  for (const Vec& g : generators_or_basis(A)) gens.push_back(echelon_coordinates(B, A.mul(e, g)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i));
  return StructAlgebra(F, d, std::move(sc), echelon_coordinates(B, e), std::move(labels), std::move(gens));
}

}  // namespace bca::algebra
