#ifndef AUTOSEQ_LINALG_HPP
#define AUTOSEQ_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "autoseq/matrix.hpp"

namespace autoseq {

/// Reduced row echelon form over the rationals, built one row at a time.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  /// Reduces the row against the current basis; returns false if it was
  /// already in the span (nothing added).
  bool add_row(RowVector row);

  /// The reduced form of `row` against the current basis.
  [[nodiscard]] RowVector reduce(RowVector row) const;

  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t columns() const { return columns_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] std::vector<std::size_t> free_columns() const;

  /// Null-space basis vector for a free column: 1 there, minus the RREF
  /// entries in the pivot columns.
  [[nodiscard]] Vector null_vector(std::size_t free_column) const;

 private:
  std::size_t columns_;
  std::vector<RowVector> rows_;       // sorted by pivot column
  std::vector<std::size_t> pivots_;   // pivots_[i] is the pivot column of rows_[i]
};

/// Scales a rational vector to coprime integers with a positive first
/// nonzero entry. The zero vector is returned unchanged.
Vector normalize_integer(const Vector& v);

}  // namespace autoseq

#endif  // AUTOSEQ_LINALG_HPP
