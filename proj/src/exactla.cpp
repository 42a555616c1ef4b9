#include "qhborel/exactla.hpp"

#include <string>

#include "qhborel/errors.hpp"

namespace qhb {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::Shape, "ragged matrix: row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::row_sums() const {
  IntVec s(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[i] += (*this)(i, j);
  return s;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMat::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntVec matvec_exact(const IntMat& m, std::span<const Int> v) {
  if (m.cols() != v.size())
    throw Error(ErrorCode::Shape, "matvec: matrix has " + std::to_string(m.cols()) +
                                      " columns but vector has " + std::to_string(v.size()) +
                                      " entries");
  IntVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) out[i] += m(i, j) * v[j];
  return out;
}

IntMat matmul_exact(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::Shape, "matmul: inner extents " + std::to_string(a.cols()) +
                                      " and " + std::to_string(b.rows()) + " differ");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatVec unitriangular_solve(const IntMat& v, std::span<const Int> b,
                           std::span<const std::size_t> order) {
  const std::size_t n = v.rows();
  if (!v.square() || b.size() != n || order.size() != n)
    throw Error(ErrorCode::Shape, "unitriangular_solve: need a square matrix, a right-hand "
                                  "side and an ordering of equal size");
  std::vector<bool> seen(n, false);
  for (std::size_t p : order) {
    if (p >= n || seen[p]) throw Error(ErrorCode::Shape, "ordering is not a permutation");
    seen[p] = true;
  }

  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t i = order[p];
    if (v(i, i) != 1)
      throw Error(ErrorCode::NotUnitriangular,
                  "diagonal entry " + std::to_string(i) + " is " + v(i, i).get_str());
    for (std::size_t q = p + 1; q < n; ++q)
      if (sgn(v(i, order[q])) != 0)
        throw Error(ErrorCode::NotUnitriangular,
                    "entry (" + std::to_string(i) + "," + std::to_string(order[q]) +
                        ") lies above the diagonal in the given order");
  }

  RatVec x(n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t i = order[p];
    Rat acc = b[i];
    for (std::size_t q = 0; q < p; ++q) {
      const std::size_t j = order[q];
      if (sgn(v(i, j)) != 0) acc -= Rat(v(i, j)) * x[j];
    }
    acc /= Rat(v(i, i));
    acc.canonicalize();
    x[i] = acc;
  }
  return x;
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

}  // namespace qhb
