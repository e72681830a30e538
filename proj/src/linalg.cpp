#include "autoseq/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoseq {

RowVector RowEchelon::reduce(RowVector row) const {
  if (static_cast<std::size_t>(row.size()) != columns_) throw std::invalid_argument("row width mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto p = static_cast<Eigen::Index>(pivots_[i]);
    if (row(p).is_zero()) continue;
    const Rational factor = row(p);
    for (Eigen::Index j = p; j < row.size(); ++j) {
      if (!rows_[i](j).is_zero()) row(j) -= factor * rows_[i](j);
    }
  }
  return row;
}

bool RowEchelon::add_row(RowVector row) {
  row = reduce(std::move(row));
  Eigen::Index pivot = -1;
  for (Eigen::Index j = 0; j < row.size(); ++j) {
    if (!row(j).is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  const Rational lead = row(pivot);
  for (Eigen::Index j = pivot; j < row.size(); ++j) row(j) /= lead;
  // Keep the form reduced: clear the new pivot column in existing rows.
  for (auto& r : rows_) {
    if (r(pivot).is_zero()) continue;
    const Rational factor = r(pivot);
    for (Eigen::Index j = pivot; j < row.size(); ++j) {
      if (!row(j).is_zero()) r(j) -= factor * row(j);
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<std::size_t>(pivot));
  const auto at = pos - pivots_.begin();
  pivots_.insert(pos, static_cast<std::size_t>(pivot));
  rows_.insert(rows_.begin() + at, std::move(row));
  return true;
}

std::vector<std::size_t> RowEchelon::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < columns_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vector RowEchelon::null_vector(std::size_t free_column) const {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(columns_));
  v(static_cast<Eigen::Index>(free_column)) = Rational(1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    v(static_cast<Eigen::Index>(pivots_[i])) = -rows_[i](static_cast<Eigen::Index>(free_column));
  }
  return v;
}

Vector normalize_integer(const Vector& v) {
  mpz_class den_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v(i).denominator().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  Eigen::Index first = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    if (first < 0) first = i;
    mpz_class scaled = v(i).numerator() * (den_lcm / v(i).denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (first < 0) return v;
  Rational scale(den_lcm, num_gcd);
  if (v(first).sign() < 0) scale = -scale;
  Vector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * scale;
  return out;
}

}  // namespace autoseq
