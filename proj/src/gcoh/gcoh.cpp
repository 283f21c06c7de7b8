#include "bca/gcoh/gcoh.hpp"

#include <stdexcept>

namespace bca::gcoh {

CrossedHomSpace h1(const GModule& M, bool want_basis) {
  const Group& G = *M.group;
  const FqField& F = M.F;
  const std::size_t n = G.order(), d = M.dim;
  CrossedHomSpace out;
  if (d == 0) return out;
  // Unknown d(g)_t in column g * d + t.
  ff::SparseMatrix S(F, n * d);
  for (std::size_t t = 0; t < d; ++t) S.add_row({{static_cast<std::uint32_t>(t), F.one()}});
  for (Elem g = 0; g < n; ++g)
    for (Elem s : G.generators()) {
      const Elem gs = G.mul(g, s);
      for (std::size_t t = 0; t < d; ++t) {
        ff::SparseRow row;
        row.push_back({static_cast<std::uint32_t>(gs * d + t), F.one()});
        row.push_back({static_cast<std::uint32_t>(g * d + t), F.neg(F.one())});
        for (std::size_t k = 0; k < d; ++k) {
          const auto a = M.action[g].at(t, k);
          if (!a.is_zero()) row.push_back({static_cast<std::uint32_t>(s * d + k), F.neg(a)});
        }
        S.add_row(std::move(row));
      }
    }
  const auto Z = ff::nullspace(S, want_basis);
  out.z1_dim = Z.dim;

  // Fixed points M^G: kernel of the stacked (rho(s) - I).
  ff::SparseMatrix fix(F, d);
  for (Elem s : G.generators())
    for (std::size_t t = 0; t < d; ++t) {
      ff::SparseRow row;
      for (std::size_t k = 0; k < d; ++k) {
        auto a = M.action[s].at(t, k);
        if (t == k) a = F.sub(a, F.one());
        if (!a.is_zero()) row.push_back({static_cast<std::uint32_t>(k), a});
      }
      if (!row.empty()) fix.add_row(std::move(row));
    }
  const auto fixed = ff::nullspace(fix, want_basis);
  out.b1_dim = d - fixed.dim;
  if (out.b1_dim > out.z1_dim) throw std::logic_error("h1: coboundaries exceed cocycles");
  out.h1_dim = out.z1_dim - out.b1_dim;

  if (want_basis) {
    ff::Echelon E(F, n * d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec m(d, F.zero());
      m[j] = F.one();
      Vec b(n * d);
      for (Elem g = 0; g < n; ++g) {
        const Vec gm = M.action[g].apply(m);
        for (std::size_t t = 0; t < d; ++t) b[g * d + t] = F.sub(gm[t], m[t]);
      }
      E.insert(b);
    }
    for (const auto& z : Z.basis)
      if (E.insert(z)) {
        std::vector<Vec> cross(n);
        for (Elem g = 0; g < n; ++g) cross[g] = Vec(z.begin() + g * d, z.begin() + (g + 1) * d);
        out.basis.push_back(std::move(cross));
      }
  }
  return out;
}

std::size_t h1_trivial_dim(const Group& G, const FqField& F) {
  std::size_t r = 0;
  for (auto d : grp::abelianization(G).invariant_factors)
    if (d % F.p() == 0) ++r;
  return r;
}

GModule twist_character(const cocycle::Cocycle2& c, const FqField& F, Elem x) {
  const Group& G = *c.group;
  const grp::Subgroup C = grp::centralizer(G, x);
  auto CG = std::make_shared<const Group>(grp::subgroup_as_group(G, C, G.name() + "_C" + std::to_string(x)));
  const auto zeta = F.unity_root(c.m);
  GModule M{CG, F, 1, {}};
  std::vector<std::uint64_t> expo(C.order());
  for (std::size_t i = 0; i < C.order(); ++i) {
    const Elem g = C.members[i];
    expo[i] = (c.at(g, x) + c.m - c.at(x, g)) % c.m;
    ff::FqMatrix a(F, 1, 1);
    a.set(0, 0, F.pow(zeta, expo[i]));
    M.action.push_back(std::move(a));
  }
  for (Elem i = 0; i < C.order(); ++i)
    for (Elem j = 0; j < C.order(); ++j)
      if ((expo[i] + expo[j]) % c.m != expo[CG->mul(i, j)])
        throw std::logic_error("twist_character: character is not multiplicative (corrupted cocycle table?)");
  return M;
}

std::size_t hh1_twisted_via_centralizers(const Group& G, const cocycle::Cocycle2& c, const FqField& F,
                                         std::vector<ClassContribution>* breakdown) {
  std::size_t total = 0;
  for (const auto& cls : grp::conjugacy_classes(G)) {
    const GModule chi = twist_character(c, F, cls.representative);
    bool trivial = true;
    for (const auto& a : chi.action) trivial = trivial && a.at(0, 0) == F.one();
    const std::size_t h = trivial ? h1_trivial_dim(*chi.group, F) : h1(chi).h1_dim;
    total += h;
    if (breakdown)
      breakdown->push_back({cls.representative, cls.members.size(), chi.group->order(), trivial, h});
  }
  return total;
}

std::size_t hh1_group_algebra_via_centralizers(const Group& G, const FqField& F,
                                               std::vector<ClassContribution>* breakdown) {
  std::size_t total = 0;
  for (const auto& cls : grp::conjugacy_classes(G)) {
    const grp::Subgroup C = grp::centralizer(G, cls.representative);
    const std::size_t h = h1_trivial_dim(grp::subgroup_as_group(G, C), F);
    total += h;
    if (breakdown) breakdown->push_back({cls.representative, cls.members.size(), C.order(), true, h});
  }
  return total;
}

FqField twisted_field(std::uint32_t p, std::uint64_t m) {
  const std::uint64_t e = m <= 1 ? 1 : ff::multiplicative_order(p % m, m);
  return FqField::make(p, static_cast<std::uint32_t>(e));
}

}  // namespace bca::gcoh
