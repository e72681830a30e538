#ifndef AUTOSEQ_TRANSITION_HPP
#define AUTOSEQ_TRANSITION_HPP

#include <cstddef>
#include <vector>

#include "autoseq/expansion.hpp"
#include "autoseq/matrix.hpp"

namespace autoseq {

/// Linear representation of a sequence over base-q digits: the state at n is
/// the coefficient window V(n) = (c_n, ..., c_{n-W+1}), V(0) = e_1 and
/// V(qn + r) = matrices[r] * V(n). The sequence is the first component.
struct TransitionSystem {
  std::size_t q = 2;
  std::vector<Matrix> matrices;
  Vector initial;
  std::vector<int> window;

  [[nodiscard]] std::size_t dimension() const { return static_cast<std::size_t>(initial.size()); }

  /// Ingests arbitrary digit matrices and initial vector, checking shapes.
  static TransitionSystem from_matrices(std::vector<Matrix> matrices, Vector initial);
};

TransitionSystem build_transition_system(const ProductSpec& spec, WindowMode mode);
TransitionSystem build_transition_system(const ProductSpec& spec, std::size_t window);

/// Materialises the rules as W x W matrices.
TransitionSystem to_transition_system(const RecurrenceSystem& rec);

/// Checks matrices[r] * V(n) == V(qn + r) for every r and n <= max_n against
/// the given coefficients; returns the first failing (n, r) as n * q + r, or
/// -1 when every check passes.
long first_action_mismatch(const TransitionSystem& ts, const TruncatedSeries& c, std::size_t max_n);

}  // namespace autoseq

#endif  // AUTOSEQ_TRANSITION_HPP
