#include "bca/grp/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace bca::grp {

namespace {

std::string cycle_name(const std::vector<std::uint32_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

Group Group::from_table(std::string name, const std::vector<std::vector<Elem>>& table,
                        std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group '" + name + "': empty table");
  Group g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw std::invalid_argument("group '" + g.name_ + "': table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n)
        throw std::invalid_argument("group '" + g.name_ + "': closure fails, entry out of range at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      g.table_[i * n + j] = table[i][j];
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (g.mul(0, static_cast<Elem>(x)) != x || g.mul(static_cast<Elem>(x), 0) != x)
      throw std::invalid_argument("group '" + g.name_ + "': identity axiom fails at element " + std::to_string(x) +
                                  " (index 0 must be the identity)");
  g.inv_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t found = n;
    for (std::size_t y = 0; y < n; ++y)
      if (g.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == 0) {
        found = y;
        break;
      }
    if (found == n || g.mul(static_cast<Elem>(found), static_cast<Elem>(x)) != 0)
      throw std::invalid_argument("group '" + g.name_ + "': inverse axiom fails at element " + std::to_string(x));
    g.inv_[x] = static_cast<Elem>(found);
  }
  auto assoc = [&](Elem a, Elem b, Elem c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw std::invalid_argument("group '" + g.name_ + "': associativity fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n < 64) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    const std::size_t samples = std::max<std::size_t>(20000, 10 * n * n);
    for (std::size_t s = 0; s < samples; ++s) assoc(pick(rng), pick(rng), pick(rng));
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  } else if (names.size() != n) {
    throw std::invalid_argument("group '" + g.name_ + "': expected " + std::to_string(n) + " element names");
  }
  g.names_ = std::move(names);
  if (std::set<std::string>(g.names_.begin(), g.names_.end()).size() != n)
    throw std::invalid_argument("group '" + g.name_ + "': element names are not unique");
  g.finish({});
  return g;
}

Group Group::from_permutations(std::string name, std::size_t degree,
                               const std::vector<std::vector<std::uint32_t>>& generators, std::size_t order_cap) {
  std::vector<std::vector<std::uint32_t>> gens;
  for (const auto& img : generators) {
    if (img.size() != degree)
      throw std::invalid_argument("group '" + name + "': generator has " + std::to_string(img.size()) +
                                  " images, expected degree " + std::to_string(degree));
    std::vector<std::uint32_t> p(degree);
    std::vector<bool> hit(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      if (img[i] < 1 || img[i] > degree || hit[img[i] - 1])
        throw std::invalid_argument("group '" + name + "': generator is not a bijection on 1.." +
                                    std::to_string(degree));
      hit[img[i] - 1] = true;
      p[i] = img[i] - 1;
    }
    gens.push_back(std::move(p));
  }

  std::vector<std::vector<std::uint32_t>> elems;
  std::unordered_map<std::vector<std::uint32_t>, Elem, VecHash> index;
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::uint32_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  elems.push_back(id);
  index.emplace(id, 0);
  // rmul[x * |S| + s] = x * gens[s]
  std::vector<Elem> rmul;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::vector<std::uint32_t> prod(degree);
      for (std::size_t i = 0; i < degree; ++i) prod[i] = gens[s][elems[head][i]];
      auto it = index.find(prod);
      if (it == index.end()) {
        if (elems.size() >= order_cap)
          throw std::invalid_argument("group '" + name + "': closure exceeds the order cap " +
                                      std::to_string(order_cap));
        it = index.emplace(prod, static_cast<Elem>(elems.size())).first;
        elems.push_back(std::move(prod));
        parent.push_back(static_cast<Elem>(head));
        via.push_back(s);
      }
      rmul.push_back(it->second);
    }
  }

  const std::size_t n = elems.size(), ns = gens.size();
  Group g;
  g.name_ = std::move(name);
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) g.table_[i * n] = static_cast<Elem>(i);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) g.table_[i * n + j] = rmul[g.table_[i * n + parent[j]] * ns + via[j]];
  g.inv_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.table_[i * n + j] == 0) {
        g.inv_[i] = static_cast<Elem>(j);
        break;
      }
  for (const auto& e : elems) g.names_.push_back(cycle_name(e));
  std::vector<Elem> gen_idx;
  for (const auto& s : gens) gen_idx.push_back(index.at(s));
  g.finish(std::move(gen_idx));
  return g;
}

void Group::finish(std::vector<Elem> gens) {
  orders_.assign(n_, 0);
  for (std::size_t x = 0; x < n_; ++x) {
    Elem y = static_cast<Elem>(x);
    std::size_t k = 1;
    while (y != 0) {
      y = mul(y, static_cast<Elem>(x));
      ++k;
    }
    orders_[x] = k;
  }
  std::vector<Elem> kept;
  std::vector<bool> in(n_, false);
  in[0] = true;
  std::vector<Elem> members{0};
  auto add_generator = [&](Elem s) {
    kept.push_back(s);
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
    for (std::size_t h = 0; h < members.size(); ++h)
      for (Elem t : kept) {
        Elem p = mul(members[h], t);
        if (!in[p]) {
          in[p] = true;
          members.push_back(p);
        }
      }
  };
  if (!gens.empty()) {
    for (Elem s : gens)
      if (s != 0) add_generator(s);
    if (members.size() != n_) throw std::logic_error("Group: recorded generators do not generate");
  } else {
    for (Elem x = 1; x < n_; ++x)
      if (!in[x]) add_generator(x);
  }
  gens_ = std::move(kept);
}

Elem Group::pow(Elem a, std::int64_t k) const {
  const std::int64_t o = static_cast<std::int64_t>(orders_[a]);
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::optional<Elem> Group::find(const std::string& element_name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == element_name) return static_cast<Elem>(i);
  return std::nullopt;
}

bool Group::is_abelian() const {
  for (Elem a : gens_)
    for (Elem b : gens_)
      if (!commute(a, b)) return false;
  return true;
}

std::vector<std::vector<Elem>> Group::table() const {
  std::vector<std::vector<Elem>> t(n_, std::vector<Elem>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t[i][j] = table_[i * n_ + j];
  return t;
}

bool is_homomorphism(const Group& source, const Group& target, const GroupHom& f) {
  if (f.image.size() != source.order() || f.image[0] != 0) return false;
  for (Elem x : f.image)
    if (x >= target.order()) return false;
  for (Elem a = 0; a < source.order(); ++a)
    for (Elem b = 0; b < source.order(); ++b)
      if (f.image[source.mul(a, b)] != target.mul(f.image[a], f.image[b])) return false;
  return true;
}

}  // namespace bca::grp
