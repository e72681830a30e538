#ifndef AUTOSEQ_CLASSIFY_HPP
#define AUTOSEQ_CLASSIFY_HPP

#include <chrono>
#include <cstddef>
#include <string>
#include <variant>

#include "autoseq/dfao.hpp"
#include "autoseq/expansion.hpp"

namespace autoseq {

inline constexpr std::size_t kDefaultSemigroupCap = 100000;
inline constexpr std::size_t kDefaultCheckOrder = 2048;
inline constexpr std::size_t kDefaultEvidenceThreshold = 100;

/// Finite closure and a DFAO that reproduces the expansion on [0, N_check].
struct AutomaticCertified {
  DFAO dfao;
  std::size_t semigroup_size = 0;
  std::size_t kernel_count = 0;
};

/// Closure hit the cap and the prefix takes at least `threshold` distinct
/// values. Evidence only, not a proof.
struct NotAutomaticEvidence {
  std::size_t distinct_value_count = 0;
};

/// Closure hit the cap (or the time limit) without value-growth evidence.
struct Undetermined {
  std::size_t cap = 0;
  bool timed_out = false;
};

using ClassificationVerdict = std::variant<AutomaticCertified, NotAutomaticEvidence, Undetermined>;

struct ClassifyOptions {
  std::size_t cap = kDefaultSemigroupCap;
  std::size_t check_order = kDefaultCheckOrder;
  std::size_t evidence_threshold = kDefaultEvidenceThreshold;
  WindowMode window = WindowMode::Minimal;
  /// Zero disables the wall-clock limit.
  std::chrono::milliseconds time_limit{0};
};

struct ClassificationResult {
  ClassificationVerdict verdict;
  std::size_t matrices_explored = 0;

  [[nodiscard]] bool automatic() const { return std::holds_alternative<AutomaticCertified>(verdict); }
};

/// Decision pipeline for forward products: transition system, semigroup
/// closure, DFAO extraction and agreement check, kernel count.
ClassificationResult classify(const ProductSpec& spec, const ClassifyOptions& options = {});

/// "AutomaticCertified", "NotAutomaticEvidence" or "Undetermined".
std::string verdict_name(const ClassificationVerdict& v);

/// Number of distinct values among c_0..c_N.
std::size_t distinct_values(const TruncatedSeries& c);

}  // namespace autoseq

#endif  // AUTOSEQ_CLASSIFY_HPP
