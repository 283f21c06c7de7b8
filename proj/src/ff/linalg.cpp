#include "bca/ff/linalg.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "bca/ff/kernels.hpp"

namespace bca::ff {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](FqElem x) { return x.is_zero(); });
}

// ---------------------------------------------------------------------------
// FqMatrix

FqMatrix::FqMatrix(FqField F, std::size_t rows, std::size_t cols)
    : F_(std::move(F)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(FqField F, std::size_t n) {
  FqMatrix M(std::move(F), n, n);
  for (std::size_t i = 0; i < n; ++i) M.set(i, i, M.F_.one());
  return M;
}

FqMatrix FqMatrix::from_rows(FqField F, std::size_t cols, const std::vector<Vec>& rows) {
  FqMatrix M(std::move(F), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("FqMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) M.set(r, c, rows[r][c]);
  }
  return M;
}

Vec FqMatrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FqMatrix: dimension mismatch");
  FqMatrix R(F_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      FqElem a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        FqElem b = o.at(k, j);
        if (!b.is_zero()) R.set(i, j, F_.add(R.at(i, j), F_.mul(a, b)));
      }
    }
  return R;
}

Vec FqMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("FqMatrix::apply: dimension mismatch");
  Vec r(rows_, F_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!v[k].is_zero()) r[i] = F_.add(r[i], F_.mul(at(i, k), v[k]));
  return r;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix T(F_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.set(j, i, at(i, j));
  return T;
}

bool FqMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (data_[i * cols_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// SparseMatrix

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseMatrix::add_row(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    if (e.col >= cols_) throw std::out_of_range("SparseMatrix::add_row: column index out of range");
    if (!out.empty() && out.back().col == e.col)
      out.back().val = F_.add(out.back().val, e.val);
    else
      out.push_back(e);
    if (!out.empty() && out.back().val.is_zero()) out.pop_back();
  }
  if (!out.empty()) rows_.push_back(std::move(out));
}

FqMatrix SparseMatrix::to_dense() const {
  FqMatrix M(F_, rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& e : rows_[r]) M.set(r, e.col, e.val);
  return M;
}

// ---------------------------------------------------------------------------
// Echelon

Echelon::Echelon(FqField F, std::size_t cols) : F_(std::move(F)), cols_(cols), row_of_col_(cols, -1) {}

void Echelon::axpy(std::vector<std::uint32_t>& y, const std::vector<std::uint32_t>& x, std::uint32_t c,
                   std::size_t from) const {
  if (c == 0) return;
  if (F_.is_prime_field()) {
    const auto& k = kernels::active_kernels(F_.p());
    k.axpy(std::span<std::uint32_t>(y).subspan(from), std::span<const std::uint32_t>(x).subspan(from), c,
           F_.p());
    return;
  }
  const FqElem cc{c};
  const std::uint32_t* sum = F_.sum_table();
  if (sum == nullptr) {
    for (std::size_t i = from; i < y.size(); ++i)
      if (x[i] != 0) y[i] = F_.add(FqElem{y[i]}, F_.mul(cc, FqElem{x[i]})).code;
    return;
  }
  const std::uint32_t q = F_.q();
  std::array<std::uint32_t, FqField::kSumTableMax> times{};
  for (std::uint32_t v = 1; v < q; ++v) times[v] = F_.mul(cc, FqElem{v}).code;
  if (F_.p() == 2) {
    for (std::size_t i = from; i < y.size(); ++i) y[i] ^= times[x[i]];
    return;
  }
  for (std::size_t i = from; i < y.size(); ++i) y[i] = sum[std::size_t{y[i]} * q + times[x[i]]];
}

bool Echelon::insert_raw(std::vector<std::uint32_t> row) {
  std::size_t lead = 0;
  while (lead < cols_ && row[lead] == 0) ++lead;
  if (lead == cols_) return false;

  const FqElem inv = F_.inv(FqElem{row[lead]});
  if (inv != F_.one()) {
    std::span<std::uint32_t> tail = std::span<std::uint32_t>(row).subspan(lead);
    if (F_.is_prime_field()) {
      kernels::active_kernels(F_.p()).scale(tail, inv.code, F_.p());
    } else {
      for (auto& v : tail) v = F_.mul(inv, FqElem{v}).code;
    }
  }
  for (auto& other : rows_) {
    std::uint32_t c = other[lead];
    if (c != 0) axpy(other, row, F_.neg(FqElem{c}).code, lead);
  }
  row_of_col_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  pivot_of_row_.push_back(lead);
  rows_.push_back(std::move(row));
  return true;
}

bool Echelon::insert(const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("Echelon::insert: wrong length");
  std::vector<std::uint32_t> row(cols_);
  for (std::size_t i = 0; i < cols_; ++i) row[i] = v[i].code;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t pc = pivot_of_row_[r];
    if (row[pc] != 0) axpy(row, rows_[r], F_.neg(FqElem{row[pc]}).code, pc);
  }
  return insert_raw(std::move(row));
}

bool Echelon::insert(const SparseRow& r) {
  std::vector<std::uint32_t> row(cols_, 0);
  for (const auto& e : r) {
    if (e.col >= cols_) throw std::out_of_range("Echelon::insert: column out of range");
    row[e.col] = F_.add(FqElem{row[e.col]}, e.val).code;
  }
  // Stored rows are fully reduced, so only the original support can meet
  // pivot columns.
  for (const auto& e : r) {
    std::ptrdiff_t pr = row_of_col_[e.col];
    if (pr >= 0 && row[e.col] != 0)
      axpy(row, rows_[static_cast<std::size_t>(pr)], F_.neg(FqElem{row[e.col]}).code, e.col);
  }
  return insert_raw(std::move(row));
}

Vec Echelon::reduce(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Echelon::reduce: wrong length");
  std::vector<std::uint32_t> row(cols_);
  for (std::size_t i = 0; i < cols_; ++i) row[i] = v[i].code;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t pc = pivot_of_row_[r];
    if (row[pc] != 0) axpy(row, rows_[r], F_.neg(FqElem{row[pc]}).code, pc);
  }
  Vec out(cols_);
  for (std::size_t i = 0; i < cols_; ++i) out[i] = FqElem{row[i]};
  return out;
}

bool Echelon::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<std::size_t> Echelon::pivot_columns() const {
  std::vector<std::size_t> pc = pivot_of_row_;
  std::sort(pc.begin(), pc.end());
  return pc;
}

std::vector<Vec> Echelon::basis() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (std::size_t c : pivot_columns()) {
    const auto& row = rows_[static_cast<std::size_t>(row_of_col_[c])];
    Vec v(cols_);
    for (std::size_t i = 0; i < cols_; ++i) v[i] = FqElem{row[i]};
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> Echelon::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c;
  for (std::size_t pc : pivot_columns()) c.push_back(v[pc]);
  return c;
}

std::vector<Vec> Echelon::kernel_basis() const {
  Echelon canon(F_, cols_);
  for (std::size_t f = 0; f < cols_; ++f) {
    if (row_of_col_[f] >= 0) continue;
    Vec v(cols_, F_.zero());
    v[f] = F_.one();
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivot_of_row_[r]] = F_.neg(FqElem{rows_[r][f]});
    canon.insert(v);
  }
  return canon.basis();
}

// ---------------------------------------------------------------------------
// Sparse engine: plain (non-reduced) echelon form keyed by leading column.

namespace {

class SparseEchelon {
 public:
  SparseEchelon(FqField F, std::size_t cols) : F_(std::move(F)), cols_(cols), pivot_(cols) {}

  std::size_t rank() const { return rank_; }

  void insert(SparseRow row) {
    while (!row.empty()) {
      const std::uint32_t lead = row.front().col;
      auto& piv = pivot_[lead];
      if (piv.empty()) {
        const FqElem inv = F_.inv(row.front().val);
        for (auto& e : row) e.val = F_.mul(inv, e.val);
        piv = std::move(row);
        ++rank_;
        return;
      }
      row = combine(row, piv, F_.neg(row.front().val));
    }
  }

  // Back substitution for one kernel vector per free column.
  std::vector<Vec> kernel_vectors() const {
    std::vector<Vec> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (!pivot_[f].empty()) continue;
      Vec x(cols_, F_.zero());
      x[f] = F_.one();
      for (std::size_t c = cols_; c-- > 0;) {
        const auto& row = pivot_[c];
        if (row.empty()) continue;
        FqElem s = F_.zero();
        for (std::size_t k = 1; k < row.size(); ++k)
          if (!x[row[k].col].is_zero()) s = F_.add(s, F_.mul(row[k].val, x[row[k].col]));
        x[c] = F_.neg(s);
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  SparseRow combine(const SparseRow& a, const SparseRow& b, FqElem c) const {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].col < a[i].col) {
        out.push_back({b[j].col, F_.mul(c, b[j].val)});
        ++j;
      } else {
        FqElem v = F_.add(a[i].val, F_.mul(c, b[j].val));
        if (!v.is_zero()) out.push_back({a[i].col, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  FqField F_;
  std::size_t cols_;
  std::vector<SparseRow> pivot_;
  std::size_t rank_ = 0;
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

NullspaceResult nullspace(const SparseMatrix& A, bool want_basis, Elimination method) {
  const FqField& F = A.field();
  const std::size_t n = A.cols();
  UnionFind uf(n);
  for (const auto& row : A.row_list())
    for (std::size_t k = 1; k < row.size(); ++k) uf.unite(row[0].col, row[k].col);

  // Components are labelled by their least column, so iteration order is fixed.
  std::vector<std::vector<std::uint32_t>> comp_cols(n);
  for (std::uint32_t c = 0; c < n; ++c) comp_cols[uf.find(c)].push_back(c);
  std::vector<std::vector<const SparseRow*>> comp_rows(n);
  for (const auto& row : A.row_list()) comp_rows[uf.find(row[0].col)].push_back(&row);

  NullspaceResult res;
  res.cols = n;
  std::vector<std::uint32_t> local(n, 0);
  for (std::uint32_t root = 0; root < n; ++root) {
    const auto& cols = comp_cols[root];
    if (cols.empty()) continue;
    const auto& rows = comp_rows[root];
    if (rows.empty()) {
      if (want_basis) {
        Vec v(n, F.zero());
        v[root] = F.one();
        res.basis.push_back(std::move(v));
      }
      continue;
    }
    for (std::uint32_t i = 0; i < cols.size(); ++i) local[cols[i]] = i;
    const std::size_t m = cols.size();
    const bool dense = method == Elimination::dense || (method == Elimination::automatic && m <= kDenseColumnLimit);

    std::vector<Vec> kernel_local;
    if (dense) {
      Echelon ech(F, m);
      for (const SparseRow* r : rows) {
        SparseRow lr;
        lr.reserve(r->size());
        for (const auto& e : *r) lr.push_back({local[e.col], e.val});
        ech.insert(lr);
        if (ech.rank() == m) break;
      }
      res.rank += ech.rank();
      if (want_basis) kernel_local = ech.kernel_basis();
    } else {
      // Pivot on the sparsest columns first.
      std::vector<std::size_t> count(m, 0);
      for (const SparseRow* r : rows)
        for (const auto& e : *r) ++count[local[e.col]];
      std::vector<std::uint32_t> order(m);
      std::iota(order.begin(), order.end(), 0u);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return count[a] < count[b]; });
      std::vector<std::uint32_t> rank_of(m);
      for (std::uint32_t i = 0; i < m; ++i) rank_of[order[i]] = i;

      SparseEchelon ech(F, m);
      for (const SparseRow* r : rows) {
        SparseRow lr;
        lr.reserve(r->size());
        for (const auto& e : *r) lr.push_back({rank_of[local[e.col]], e.val});
        std::sort(lr.begin(), lr.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
        ech.insert(std::move(lr));
      }
      res.rank += ech.rank();
      if (want_basis) {
        Echelon canon(F, m);
        for (const auto& x : ech.kernel_vectors()) {
          Vec y(m);
          for (std::uint32_t i = 0; i < m; ++i) y[order[i]] = x[i];
          canon.insert(y);
        }
        kernel_local = canon.basis();
      }
    }
    for (const auto& kv : kernel_local) {
      Vec v(n, F.zero());
      for (std::size_t i = 0; i < m; ++i) v[cols[i]] = kv[i];
      res.basis.push_back(std::move(v));
    }
  }
  res.dim = n - res.rank;
  if (want_basis) {
    auto lead = [](const Vec& v) {
      return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](FqElem x) { return !x.is_zero(); }) -
                                      v.begin());
    };
    std::sort(res.basis.begin(), res.basis.end(), [&](const Vec& a, const Vec& b) { return lead(a) < lead(b); });
  }
  return res;
}

std::size_t rank(const FqMatrix& M) {
  Echelon ech(M.field(), M.cols());
  for (std::size_t r = 0; r < M.rows() && ech.rank() < M.cols(); ++r) ech.insert(M.row(r));
  return ech.rank();
}

std::vector<Vec> kernel_basis(const FqMatrix& M) {
  Echelon ech(M.field(), M.cols());
  for (std::size_t r = 0; r < M.rows() && ech.rank() < M.cols(); ++r) ech.insert(M.row(r));
  return ech.kernel_basis();
}

std::vector<Vec> span_basis(const FqField& F, std::size_t cols, const std::vector<Vec>& vectors) {
  Echelon ech(F, cols);
  for (const auto& v : vectors) {
    if (ech.rank() == cols) break;
    ech.insert(v);
  }
  return ech.basis();
}

}  // namespace bca::ff
