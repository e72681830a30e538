#ifndef AUTOSEQ_MATRIX_HPP
#define AUTOSEQ_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "autoseq/rational.hpp"

namespace autoseq {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;
using RowVector = RowVectorX<Rational>;

/// Structural hash over the exact entries (and shape).
template <typename Derived>
std::size_t hash_dense(const Eigen::MatrixBase<Derived>& m) {
  std::size_t seed = static_cast<std::size_t>(m.rows()) * 31 + static_cast<std::size_t>(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) hash_combine(seed, m(i, j).hash());
  }
  return seed;
}

template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

/// Builds a matrix from nested rows; all rows must have equal length.
Matrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows);

/// Row-major nested vector of exact strings, for JSON and diagnostics.
std::vector<std::vector<std::string>> to_string_rows(const Matrix& m);

/// "[[1,0],[0,1]]"
std::string to_string(const Matrix& m);

}  // namespace autoseq

#endif  // AUTOSEQ_MATRIX_HPP
