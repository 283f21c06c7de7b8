#pragma once

#include <cstdint>
#include <vector>

namespace bca::ff {

/// Integer matrix with entries reduced modulo m.
class IntMatrixModM {
 public:
  IntMatrixModM(std::size_t rows, std::size_t cols, std::uint64_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return m_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  void add_to(std::size_t r, std::size_t c, std::int64_t v);
  /// Appends a zero row and returns its index.
  std::size_t push_row();

 private:
  std::size_t rows_, cols_;
  std::uint64_t m_;
  std::vector<std::uint64_t> data_;
};

/// Finite Z/m-module given by generators and the additive order of each.
/// The module is the direct sum of the cyclic groups they generate.
struct SolutionModule {
  std::uint64_t m = 1;
  std::size_t length = 0;
  std::vector<std::vector<std::uint64_t>> generators;
  std::vector<std::uint64_t> orders;

  /// Product of the orders.
  std::uint64_t size() const;
  /// Every member, mixed-radix over the generators; intended for small modules.
  std::vector<std::vector<std::uint64_t>> enumerate() const;
};

/// { x in (Z/m)^cols : A x = 0 mod m }, via Smith normal form over each
/// prime-power component of m; components are recombined by CRT.
SolutionModule snf_solution_space(const IntMatrixModM& A);

/// Smith form over the local ring Z/l^a: A * C = U * diag(l^v_j) with U
/// invertible. C is kept as its list of columns and C^{-1} as its list of
/// rows, so x = sum_j y_j basis[j] and y_j = <dual[j], x>.
struct LocalSnf {
  std::uint64_t ell = 0;
  unsigned a = 0;
  std::uint64_t modulus = 1;  // ell^a
  /// Valuation of each diagonal entry, one per column; a where the column
  /// carries no constraint.
  std::vector<unsigned> valuation;
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<std::vector<std::uint64_t>> dual;
};
LocalSnf local_snf(const IntMatrixModM& A, std::uint64_t ell, unsigned a);

/// Prime-power decomposition (l, a) of n, l increasing.
std::vector<std::pair<std::uint64_t, unsigned>> factor_prime_powers(std::uint64_t n);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace bca::ff
