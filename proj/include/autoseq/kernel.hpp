#ifndef AUTOSEQ_KERNEL_HPP
#define AUTOSEQ_KERNEL_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "autoseq/semigroup.hpp"
#include "autoseq/transition.hpp"

namespace autoseq {

/// (l, b) names the subsequence n -> c_{q^l n + b}.
using KernelPair = std::pair<std::size_t, std::size_t>;

struct KernelDescription {
  std::vector<KernelPair> representatives;  // lexicographically smallest per class
  std::size_t class_count = 0;
  std::map<KernelPair, std::size_t> pairing_table;
  /// Deepest level l explored.
  std::size_t levels = 0;
};

inline constexpr std::size_t kDefaultKernelLevels = 12;

/// Classes of the q-kernel. Each (l, b) has the row functional
/// w = e_1^T G_{b_0} ... G_{b_{l-1}} (digits of b, least significant first),
/// and c_{q^l n + b} = w V(n); pairs are equivalent when their functionals
/// agree on the whole orbit of the initial vector. Levels are explored until
/// one adds no class, or until l_max.
KernelDescription compute_kernel(const TransitionSystem& ts, const SemigroupClosure& closure,
                                 std::size_t l_max = kDefaultKernelLevels);

}  // namespace autoseq

#endif  // AUTOSEQ_KERNEL_HPP
