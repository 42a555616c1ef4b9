#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace qhb {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMat identity(std::size_t n);
  /// Throws Error(Shape) on ragged input.
  static IntMat from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec row_sums() const;
  IntMat transposed() const;
  bool is_identity() const;

  bool operator==(const IntMat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

IntVec matvec_exact(const IntMat& m, std::span<const Int> v);
IntMat matmul_exact(const IntMat& a, const IntMat& b);

/// Exact solution of V x = b where V, after the simultaneous row/column
/// permutation `order` (order[p] = original index placed at position p), is
/// lower triangular with unit diagonal. The solution is returned in the
/// original index order.
///
/// Throws Error(Shape) if the extents disagree and Error(NotUnitriangular)
/// if the permuted matrix has a nonzero entry above the diagonal or a
/// diagonal entry other than one.
RatVec unitriangular_solve(const IntMat& v, std::span<const Int> b,
                           std::span<const std::size_t> order);

bool is_integral(const Rat& q);

}  // namespace qhb
