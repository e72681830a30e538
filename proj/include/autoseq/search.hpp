#ifndef AUTOSEQ_SEARCH_HPP
#define AUTOSEQ_SEARCH_HPP

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/classify.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/polynomial.hpp"

namespace autoseq {

struct SearchConfig {
  std::size_t degree = 1;
  std::size_t q = 2;
  std::size_t coeff_bound = 1;
  std::size_t semigroup_cap = 10000;
  std::size_t check_order = kDefaultCheckOrder;
  /// Coefficients range over multiples of 1/grid_denominator in [-B, B].
  bool include_rationals = false;
  std::size_t grid_denominator = 2;
  /// Classify pruned (non-integer) grid points too, to confirm none of them
  /// is certified automatic.
  bool verify_integrality = false;
  /// Per-candidate soft limit; zero disables it.
  std::chrono::milliseconds time_limit{0};
  std::size_t workers = 1;
  /// Fresh indices past check_order on which automatic hits are re-verified.
  std::size_t reverify_count = 512;

  /// Throws std::invalid_argument unless d >= 1, q >= 2, B >= 1 and the grid
  /// denominator is >= 1.
  void validate() const;
  std::size_t values_per_coefficient() const;
};

/// (2B+1)^{d-1} * 2B for the integer grid; with rationals every count is
/// taken over the finer grid.
std::size_t enumeration_size(const SearchConfig& config);

/// Candidate at a position of the enumeration: constant term 1, coefficients
/// a_1..a_d from +B down to -B with a_1 most significant, a_d != 0.
Polynomial enumerated_polynomial(const SearchConfig& config, std::size_t index);
std::vector<Polynomial> enumerate_polynomials(const SearchConfig& config);

/// True iff every coefficient is an integer.
bool integrality_filter(const Polynomial& p);

struct CandidateRecord {
  std::size_t index = 0;
  Polynomial poly;
  std::string verdict;  // classification verdict name, or "Pruned"
  std::optional<std::string> pruned_verdict;  // set under verify_integrality
  std::optional<std::size_t> semigroup_size;
  std::optional<std::size_t> dfao_states;
  std::optional<std::size_t> kernel_classes;
  std::optional<std::size_t> distinct_values;
  std::optional<Polynomial> rational_Q;
  std::size_t matrices_explored = 0;
  std::optional<DFAO> dfao;

  [[nodiscard]] bool automatic() const { return verdict == "AutomaticCertified"; }
};

struct SearchCounts {
  std::size_t automatic = 0;
  std::size_t not_automatic = 0;
  std::size_t undetermined = 0;
  std::size_t pruned = 0;
  std::size_t rational = 0;  // not exclusive of the verdict counts
  std::size_t integrality_violations = 0;

  [[nodiscard]] std::size_t total() const { return automatic + not_automatic + undetermined + pruned; }
};

struct SearchReport {
  SearchConfig config;
  std::size_t space_size = 0;
  std::vector<CandidateRecord> records;  // by index
  SearchCounts counts;
  std::size_t matrices_explored = 0;
  double wall_seconds = 0;  // not serialized: reports must not depend on timing
};

/// Classifies one candidate (classify plus rationality_test) and re-verifies
/// automatic hits.
CandidateRecord evaluate_candidate(const SearchConfig& config, std::size_t index);

/// Re-evaluates a hit's DFAO on config.reverify_count indices past the
/// certification range.
bool reverify_hit(const SearchConfig& config, const CandidateRecord& record);

/// Called in index order as records complete.
using RecordSink = std::function<void(const CandidateRecord&)>;

/// Sweeps the enumeration with config.workers threads. Records listed in
/// `resumed` are taken as already done and not recomputed.
SearchReport run_search(const SearchConfig& config, const RecordSink& sink = {},
                        const std::vector<CandidateRecord>& resumed = {});

std::string record_to_json(const CandidateRecord& record);
CandidateRecord record_from_json(const std::string& line);
std::string summary_to_json(const SearchReport& report);
/// One record per line followed by the summary record.
std::string report_to_jsonl(const SearchReport& report);

}  // namespace autoseq

#endif  // AUTOSEQ_SEARCH_HPP
