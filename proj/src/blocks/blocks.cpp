#include "bca/blocks/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bca/ff/poly.hpp"

namespace bca::blocks {

namespace {

using ff::FqElem;
using ff::Poly;

Vec gmul(const Group& G, const FqField& F, const Vec& a, const Vec& b) {
  Vec r(G.order(), F.zero());
  for (Elem g = 0; g < G.order(); ++g) {
    if (a[g].is_zero()) continue;
    for (Elem h = 0; h < G.order(); ++h)
      if (!b[h].is_zero()) r[G.mul(g, h)] = F.add(r[G.mul(g, h)], F.mul(a[g], b[h]));
  }
  return r;
}

Vec axpy(const FqField& F, Vec y, const Vec& x, FqElem c) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(c, x[i]));
  return y;
}

Vec eval_at(const Group& G, const FqField& F, const Poly& f, const Vec& y, const Vec& unit) {
  Vec r(G.order(), F.zero());
  for (std::size_t i = f.size(); i-- > 0;) r = axpy(F, gmul(G, F, r, y), unit, f[i]);
  return r;
}

// Minimal polynomial of y inside the algebra with unit e.
Poly minimal_polynomial(const Group& G, const FqField& F, const Vec& y, const Vec& e) {
  ff::Echelon E(F, G.order());
  std::vector<Vec> powers{e};
  E.insert(e);
  for (;;) {
    Vec next = gmul(G, F, powers.back(), y);
    if (!E.insert(next)) {
      powers.push_back(std::move(next));
      break;
    }
    powers.push_back(std::move(next));
  }
  const std::size_t k = powers.size();
  ff::FqMatrix M(F, G.order(), k);
  for (std::size_t j = 0; j < k; ++j)
    for (Elem g = 0; g < G.order(); ++g) M.set(g, j, powers[j][g]);
  const auto ker = ff::kernel_basis(M);
  if (ker.size() != 1 || ker[0][k - 1].is_zero()) throw std::logic_error("minimal_polynomial: unexpected kernel");
  return ff::poly::monic(F, Poly(ker[0].begin(), ker[0].end()));
}

// Splits e along the primary decomposition of the minimal polynomial of z e.
std::vector<Vec> try_split(const Group& G, const FqField& F, const Vec& e, const Vec& z, std::uint64_t seed) {
  const Vec y = gmul(G, F, z, e);
  const Poly f = minimal_polynomial(G, F, y, e);
  const auto factors = ff::poly_factor(F, f, seed);
  if (factors.size() <= 1) return {};
  std::vector<Vec> pieces;
  for (const auto& fac : factors) {
    Poly q{F.one()};
    for (unsigned i = 0; i < fac.multiplicity; ++i) q = ff::poly::mul(F, q, fac.factor);
    const Poly Q = ff::poly::divmod(F, f, q).first;
    const auto x = ff::poly::xgcd(F, Q, q);
    if (x.g != Poly{F.one()}) throw std::logic_error("try_split: primary factors are not coprime");
    const Poly idem = ff::poly::mod(F, ff::poly::mul(F, x.s, Q), f);
    pieces.push_back(eval_at(G, F, idem, y, e));
  }
  return pieces;
}

Elem least_support_of(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<Elem>(i);
  return static_cast<Elem>(v.size());
}

// z -> z^q - z on the center, in class-sum coordinates.
ff::FqMatrix frobenius_matrix(const Group& G, const FqField& F, const std::vector<Vec>& sums) {
  const auto classes = grp::conjugacy_classes(G);
  const std::size_t r = sums.size();
  ff::FqMatrix Fr(F, r, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vec acc(G.order(), F.zero()), base = sums[j];
    acc[0] = F.one();
    for (std::uint64_t k = F.q(); k; k >>= 1) {
      if (k & 1) acc = gmul(G, F, acc, base);
      if (k > 1) base = gmul(G, F, base, base);
    }
    for (std::size_t i = 0; i < r; ++i)
      Fr.set(i, j, F.sub(acc[classes[i].representative], i == j ? F.one() : F.zero()));
  }
  return Fr;
}

std::vector<Vec> primitive_central_idempotents(const Group& G, const FqField& F, std::uint64_t seed,
                                               std::size_t expected) {
  const auto sums = class_sums(G, F);
  std::vector<Vec> candidates = sums;
  // A basis of the Frobenius-fixed part of the center separates all blocks.
  for (const auto& c : ff::kernel_basis(frobenius_matrix(G, F, sums))) {
    Vec z(G.order(), F.zero());
    for (std::size_t j = 0; j < sums.size(); ++j) z = axpy(F, z, sums[j], c[j]);
    candidates.push_back(std::move(z));
  }
  Vec one(G.order(), F.zero());
  one[0] = F.one();
  std::vector<Vec> work{one}, done;
  while (!work.empty()) {
    Vec e = std::move(work.back());
    work.pop_back();
    bool split = false;
    for (const auto& z : candidates) {
      auto pieces = try_split(G, F, e, z, seed);
      if (pieces.empty()) continue;
      for (auto& p : pieces) work.push_back(std::move(p));
      split = true;
      break;
    }
    if (!split) done.push_back(std::move(e));
  }
  if (done.size() != expected)
    throw std::logic_error("block_decomposition: found " + std::to_string(done.size()) + " blocks, expected " +
                           std::to_string(expected));
  std::sort(done.begin(), done.end(),
            [](const Vec& a, const Vec& b) { return least_support_of(a) < least_support_of(b); });
  return done;
}

}  // namespace

ff::FqElem Block::augmentation(const FqField& F) const {
  FqElem s = F.zero();
  for (auto c : idempotent) s = F.add(s, c);
  return s;
}

Elem Block::least_support() const { return least_support_of(idempotent); }

std::vector<Vec> class_sums(const Group& G, const FqField& F) {
  std::vector<Vec> out;
  for (const auto& c : grp::conjugacy_classes(G)) {
    Vec z(G.order(), F.zero());
    for (Elem x : c.members) z[x] = F.one();
    out.push_back(std::move(z));
  }
  return out;
}

std::size_t frobenius_block_count(const Group& G, const FqField& F) {
  const auto sums = class_sums(G, F);
  return sums.size() - ff::rank(frobenius_matrix(G, F, sums));
}

std::vector<Block> block_decomposition(const Group& G, const FqField& F, std::uint64_t seed) {
  const auto idems = primitive_central_idempotents(G, F, seed, frobenius_block_count(G, F));
  const algebra::StructAlgebra A = algebra::group_algebra(G, F);
  std::vector<Block> out;
  for (const auto& e : idems) {
    Block b;
    b.idempotent = e;
    b.basis = algebra::ideal_basis(A, e);
    b.algebra = std::make_shared<const StructAlgebra>(algebra::ideal_algebra_on_idempotent(A, e));
    b.is_principal = b.augmentation(F) == F.one();
    const DefectClass d = defect_groups(G, e, F.p(), F);
    b.defect_group = d.representative;
    b.defect_class_size = d.class_size;
    out.push_back(std::move(b));
  }
  principal_block(out, F);
  return out;
}

const Block& principal_block(const std::vector<Block>& blocks, const FqField& F) {
  const Block* found = nullptr;
  for (const auto& b : blocks) {
    const FqElem a = b.augmentation(F);
    if (a == F.one()) {
      if (found) throw std::logic_error("principal_block: two blocks with augmentation 1");
      found = &b;
    } else if (!a.is_zero()) {
      throw std::logic_error("principal_block: block with augmentation other than 0 or 1");
    }
  }
  if (!found) throw std::logic_error("principal_block: no block with augmentation 1");
  return *found;
}

Vec brauer_map(const Group& G, const Subgroup& D, const Vec& a, const FqField&) {
  for (Elem d : grp::subgroup_generators(G, D))
    for (Elem g = 0; g < G.order(); ++g)
      if (a[G.conj(d, g)] != a[g]) throw std::invalid_argument("brauer_map: element is not fixed by D");
  const Subgroup C = grp::centralizer_of(G, D);
  Vec out;
  for (Elem c : C.members) out.push_back(a[c]);
  return out;
}

DefectClass defect_groups(const Group& G, const Vec& b, std::uint64_t p, const FqField& F) {
  std::vector<Subgroup> hits;
  for (const auto& D : grp::p_subgroups_up_to_conjugacy(G, p))
    if (!ff::is_zero(brauer_map(G, D, b, F))) hits.push_back(D);
  std::vector<Subgroup> maximal;
  for (const auto& D : hits) {
    bool below = false;
    for (const auto& E : hits) {
      if (E.order() <= D.order()) continue;
      for (Elem g = 0; g < G.order() && !below; ++g) below = grp::is_subset(grp::conjugate(G, D, g), E);
      if (below) break;
    }
    if (!below) maximal.push_back(D);
  }
  if (maximal.size() != 1)
    throw std::logic_error("defect_groups: " + std::to_string(maximal.size()) + " non-conjugate maximal subgroups");
  DefectClass out;
  out.representative = maximal[0];
  out.class_size = G.order() / grp::normalizer(G, maximal[0]).order();
  return out;
}

BrauerPair max_brauer_pair(const Group& G, const Vec& b, const Subgroup& P, const FqField& F, std::uint64_t seed) {
  BrauerPair pair;
  pair.P = P;
  pair.C = grp::centralizer_of(G, P);
  const Group CG = grp::subgroup_as_group(G, pair.C);
  const Vec br = brauer_map(G, P, b, F);
  const auto idems = primitive_central_idempotents(CG, F, seed, frobenius_block_count(CG, F));
  for (std::size_t i = 0; i < idems.size(); ++i)
    if (!ff::is_zero(gmul(CG, F, idems[i], br))) {
      pair.e = idems[i];
      pair.block_index = i;
      return pair;
    }
  throw std::invalid_argument("max_brauer_pair: no block of the centralizer meets Br_P(b)");
}

InertialQuotient inertial_quotient(const Group& G, const BrauerPair& pair, std::uint64_t p) {
  const Subgroup N = grp::normalizer(G, pair.P);
  InertialQuotient out;
  for (Elem g : N.members) {
    bool fixes = true;
    for (std::size_t i = 0; i < pair.C.order() && fixes; ++i) {
      const Elem c = pair.C.members[i];
      const Elem gc = G.conj(g, c);
      const auto pos = static_cast<std::size_t>(
          std::lower_bound(pair.C.members.begin(), pair.C.members.end(), gc) - pair.C.members.begin());
      fixes = pair.e[pos] == pair.e[i];
    }
    if (fixes) out.stabilizer.members.push_back(g);
  }
  out.pc = grp::product(G, pair.P, pair.C);
  if (!grp::is_subset(out.pc, out.stabilizer)) throw std::logic_error("inertial_quotient: PC_G(P) not in N_G(P,e)");
  out.order = out.stabilizer.order() / out.pc.order();
  if (out.order % p == 0) throw std::logic_error("inertial_quotient: order divisible by p");
  return out;
}

bool trivial_summand_test(const GModule& M) {
  const FqField& F = M.F;
  const std::size_t d = M.dim;
  if (d == 0) return false;
  ff::SparseMatrix fix(F, d), dual(F, d);
  for (Elem s : M.group->generators())
    for (std::size_t t = 0; t < d; ++t) {
      ff::SparseRow r1, r2;
      for (std::size_t k = 0; k < d; ++k) {
        FqElem a = M.action[s].at(t, k), b = M.action[s].at(k, t);
        if (t == k) {
          a = F.sub(a, F.one());
          b = F.sub(b, F.one());
        }
        if (!a.is_zero()) r1.push_back({static_cast<std::uint32_t>(k), a});
        if (!b.is_zero()) r2.push_back({static_cast<std::uint32_t>(k), b});
      }
      if (!r1.empty()) fix.add_row(std::move(r1));
      if (!r2.empty()) dual.add_row(std::move(r2));
    }
  const auto V = ff::nullspace(fix, true).basis;
  const auto Phi = ff::nullspace(dual, true).basis;
  for (const auto& v : V)
    for (const auto& phi : Phi) {
      FqElem s = F.zero();
      for (std::size_t i = 0; i < d; ++i) s = F.add(s, F.mul(v[i], phi[i]));
      if (!s.is_zero()) return true;
    }
  return false;
}

GModule permutation_module(std::shared_ptr<const Group> Gp, const Subgroup& P, const FqField& F) {
  const Group& G = *Gp;
  std::vector<std::int64_t> coset(G.order(), -1);
  std::vector<Elem> reps;
  for (Elem g = 0; g < G.order(); ++g) {
    if (coset[g] >= 0) continue;
    for (Elem h : P.members) coset[G.mul(g, h)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(g);
  }
  const std::size_t d = reps.size();
  GModule M{Gp, F, d, {}};
  for (Elem g = 0; g < G.order(); ++g) {
    ff::FqMatrix A(F, d, d);
    for (std::size_t j = 0; j < d; ++j) A.set(static_cast<std::size_t>(coset[G.mul(g, reps[j])]), j, F.one());
    M.action.push_back(std::move(A));
  }
  return M;
}

bool scott_trivial_check(std::shared_ptr<const Group> G, const Subgroup& P, const FqField& F) {
  const bool pairing = trivial_summand_test(permutation_module(G, P, F));
  const bool index = (G->order() / P.order()) % F.p() != 0;
  if (pairing != index) throw std::logic_error("scott_trivial_check: pairing test disagrees with the index criterion");
  return pairing;
}

Thm14Report thm14_pipeline(std::shared_ptr<const Group> G, const Block& b, std::uint64_t p, const FqField& F) {
  Thm14Report r;
  r.defect_order = b.defect_group.order();
  r.non_p_perfect = !grp::is_p_perfect(*G, p);
  r.scott_trivial = scott_trivial_check(G, b.defect_group, F);
  const GModule conj = algebra::conjugation_module(G, F, b.basis);
  r.conjugation_has_trivial_summand = trivial_summand_test(conj);
  r.hh1_derivations = algebra::hh1_dim(*b.algebra);
  r.hh1_group_cohomology = gcoh::h1(conj).h1_dim;
  r.hypotheses_met = r.defect_order > 1 && r.non_p_perfect && r.scott_trivial;
  r.conclusion_confirmed = r.hypotheses_met && r.hh1_derivations >= 1;
  return r;
}

FqField splitting_field(const Group& G, std::uint32_t p) {
  std::uint64_t exp = 1;
  for (Elem x = 0; x < G.order(); ++x) exp = std::lcm(exp, static_cast<std::uint64_t>(G.element_order(x)));
  const std::uint64_t m = exp / grp::p_part(exp, p);
  return gcoh::twisted_field(p, m);
}

}  // namespace bca::blocks
