#include <stdexcept>

#include "bca/algebra/algebra.hpp"

namespace bca::algebra {

void GModule::validate() const {
  const Group& G = *group;
  if (action.size() != G.order()) throw std::invalid_argument("GModule: need one matrix per group element");
  for (const auto& M : action)
    if (M.rows() != dim || M.cols() != dim) throw std::invalid_argument("GModule: matrix has wrong shape");
  if (!action[0].is_identity()) throw std::invalid_argument("GModule: identity does not act trivially");
  for (Elem g = 0; g < G.order(); ++g)
    for (Elem s : G.generators())
      if (!(action[g] * action[s] == action[G.mul(g, s)]))
        throw std::invalid_argument("GModule: action is not multiplicative at (" + std::to_string(g) + "," +
                                    std::to_string(s) + ")");
}

GModule trivial_module(std::shared_ptr<const Group> G, const FqField& F, std::size_t dim) {
  GModule M{G, F, dim, {}};
  M.action.assign(G->order(), FqMatrix::identity(F, dim));
  return M;
}

GModule conjugation_module(std::shared_ptr<const Group> Gp, const FqField& F, const std::vector<Vec>& subspace) {
  const Group& G = *Gp;
  const std::size_t n = G.order(), d = subspace.size();
  GModule M{Gp, F, d, {}};
  M.action.reserve(n);
  for (Elem g = 0; g < n; ++g) {
    FqMatrix A(F, d, d);
    for (std::size_t j = 0; j < d; ++j) {
      Vec img(n, F.zero());
      for (Elem h = 0; h < n; ++h) img[G.conj(g, h)] = subspace[j][h];
      const Vec c = echelon_coordinates(subspace, img);
      Vec back(n, F.zero());
      for (std::size_t k = 0; k < d; ++k)
        if (!c[k].is_zero())
          for (std::size_t t = 0; t < n; ++t) back[t] = F.add(back[t], F.mul(c[k], subspace[k][t]));
      if (back != img) throw std::invalid_argument("conjugation_module: subspace is not stable under conjugation");
      for (std::size_t k = 0; k < d; ++k) A.set(k, j, c[k]);
    }
    M.action.push_back(std::move(A));
  }
  return M;
}

}  // namespace bca::algebra
