#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bca/ff/field.hpp"

namespace bca::ff {

using Vec = std::vector<FqElem>;

/// Dense row-major matrix over F_q.
class FqMatrix {
 public:
  FqMatrix(FqField F, std::size_t rows, std::size_t cols);
  static FqMatrix identity(FqField F, std::size_t n);
  static FqMatrix from_rows(FqField F, std::size_t cols, const std::vector<Vec>& rows);

  const FqField& field() const { return F_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FqElem at(std::size_t r, std::size_t c) const { return {data_[r * cols_ + c]}; }
  void set(std::size_t r, std::size_t c, FqElem v) { data_[r * cols_ + c] = v.code; }
  Vec row(std::size_t r) const;

  FqMatrix operator*(const FqMatrix& o) const;
  /// Matrix-vector product M v.
  Vec apply(const Vec& v) const;
  FqMatrix transpose() const;
  bool operator==(const FqMatrix& o) const {
    return F_ == o.F_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_identity() const;

 private:
  FqField F_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> data_;
};

struct SparseEntry {
  std::uint32_t col;
  FqElem val;
};
using SparseRow = std::vector<SparseEntry>;

/// Sparse triplet system, one row per equation. Rows are normalized on
/// insertion: sorted by column, duplicates merged, zeros dropped.
class SparseMatrix {
 public:
  SparseMatrix(FqField F, std::size_t cols) : F_(std::move(F)), cols_(cols) {}

  const FqField& field() const { return F_; }
  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<SparseRow>& row_list() const { return rows_; }
  std::size_t nonzeros() const;

  void add_row(SparseRow row);
  FqMatrix to_dense() const;

 private:
  FqField F_;
  std::size_t cols_;
  std::vector<SparseRow> rows_;
};

/// Incremental reduced row echelon form. Every inserted row is reduced
/// against the current basis; independent rows become new pivots and are
/// back-substituted so the stored rows stay fully reduced.
class Echelon {
 public:
  Echelon(FqField F, std::size_t cols);

  const FqField& field() const { return F_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when the row was independent of the rows so far.
  bool insert(const Vec& v);
  bool insert(const SparseRow& r);

  bool contains(const Vec& v) const;
  /// v minus its projection onto the span; zero iff v is in the span.
  Vec reduce(const Vec& v) const;
  /// Coefficients expressing v in the basis returned by basis(); nullopt when
  /// v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Reduced basis rows ordered by pivot column.
  std::vector<Vec> basis() const;
  std::vector<std::size_t> pivot_columns() const;
  /// Null space of the matrix whose rows were inserted, in canonical form.
  std::vector<Vec> kernel_basis() const;

 private:
  bool insert_raw(std::vector<std::uint32_t> row);
  void axpy(std::vector<std::uint32_t>& y, const std::vector<std::uint32_t>& x, std::uint32_t c,
            std::size_t from) const;

  FqField F_;
  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivot_of_row_;
  std::vector<std::ptrdiff_t> row_of_col_;
};

enum class Elimination { automatic, dense, sparse };

/// Column count above which automatic elimination switches to the sparse
/// engine (applied per connected component of the system).
inline constexpr std::size_t kDenseColumnLimit = 4096;

struct NullspaceResult {
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::vector<Vec> basis;  // empty unless requested
};

/// Null space of a sparse system. The system is split into connected
/// components (columns linked by a shared row); each component is eliminated
/// independently. When a basis is requested it is returned in reduced
/// echelon form, so the result does not depend on the elimination engine.
NullspaceResult nullspace(const SparseMatrix& A, bool want_basis,
                          Elimination method = Elimination::automatic);

std::size_t rank(const FqMatrix& M);
std::vector<Vec> kernel_basis(const FqMatrix& M);
/// Reduced echelon basis of the span of the given vectors.
std::vector<Vec> span_basis(const FqField& F, std::size_t cols, const std::vector<Vec>& vectors);

bool is_zero(const Vec& v);

}  // namespace bca::ff
