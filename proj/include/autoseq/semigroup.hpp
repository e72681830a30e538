#ifndef AUTOSEQ_SEMIGROUP_HPP
#define AUTOSEQ_SEMIGROUP_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "autoseq/matrix.hpp"
#include "autoseq/transition.hpp"

namespace autoseq {

enum class ClosureStatus { Finite, CapExceeded };

/// Products of the digit matrices, deduplicated by exact equality, in BFS
/// order (word length, then digit order). The empty product is not included
/// unless some nonempty word evaluates to the identity.
struct SemigroupClosure {
  ClosureStatus status = ClosureStatus::Finite;
  std::vector<Matrix> elements;
  /// words[i] = (d_1, ..., d_k) with elements[i] = G_{d_1} G_{d_2} ... G_{d_k}.
  std::vector<std::vector<std::size_t>> words;
  /// Number of matrix products formed.
  std::size_t products = 0;
  /// Set when the optional deadline stopped the search.
  bool timed_out = false;

  [[nodiscard]] std::size_t size() const { return elements.size(); }
  [[nodiscard]] bool finite() const { return status == ClosureStatus::Finite; }
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Breadth-first right-multiplication closure from the generators; stops
/// with CapExceeded once more than `cap` distinct elements are found.
SemigroupClosure semigroup_closure(const TransitionSystem& ts, std::size_t cap,
                                   Deadline deadline = std::nullopt);

/// Index n with base-q digits (LSD first) equal to the word, so that
/// element(1,1) = c_n per the first-row property.
std::size_t word_index(const std::vector<std::size_t>& word, std::size_t q);

}  // namespace autoseq

#endif  // AUTOSEQ_SEMIGROUP_HPP
