#include "autoseq/matrix.hpp"

#include <stdexcept>

namespace autoseq {

Matrix matrix_from_rows(const std::vector<std::vector<Rational>>& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

std::vector<std::vector<std::string>> to_string_rows(const Matrix& m) {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out[static_cast<std::size_t>(i)].push_back(m(i, j).to_string());
    }
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i != 0) out += ',';
    out += '[';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j != 0) out += ',';
      out += m(i, j).to_string();
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace autoseq
