#include "autoseq/classify.hpp"

#include <stdexcept>
#include <unordered_set>

#include "autoseq/kernel.hpp"
#include "autoseq/semigroup.hpp"
#include "autoseq/transition.hpp"

namespace autoseq {

std::size_t distinct_values(const TruncatedSeries& c) {
  std::unordered_set<Rational, RationalHash> values(c.coefficients().begin(),
                                                    c.coefficients().end());
  return values.size();
}

ClassificationResult classify(const ProductSpec& spec, const ClassifyOptions& options) {
  if (spec.inverse()) throw std::invalid_argument("classify handles forward products only");
  const TransitionSystem ts = build_transition_system(spec, options.window);
  Deadline deadline;
  if (options.time_limit.count() > 0) deadline = std::chrono::steady_clock::now() + options.time_limit;
  const SemigroupClosure closure = semigroup_closure(ts, options.cap, deadline);

  ClassificationResult result;
  result.matrices_explored = closure.products;
  const TruncatedSeries c = expand_product(spec, options.check_order);

  if (closure.finite()) {
    AutomaticCertified cert;
    cert.dfao = extract_dfao(ts, closure);
    for (std::size_t n = 0; n <= options.check_order; ++n) {
      if (dfao_eval(cert.dfao, n) != c[n]) {
        throw std::logic_error("extracted DFAO disagrees with the expansion at n = " +
                               std::to_string(n));
      }
    }
    cert.semigroup_size = closure.size();
    cert.kernel_count = compute_kernel(ts, closure).class_count;
    result.verdict = std::move(cert);
    return result;
  }
  if (closure.timed_out) {
    result.verdict = Undetermined{options.cap, true};
    return result;
  }
  const std::size_t distinct = distinct_values(c);
  if (distinct >= options.evidence_threshold) {
    result.verdict = NotAutomaticEvidence{distinct};
  } else {
    result.verdict = Undetermined{options.cap, false};
  }
  return result;
}

std::string verdict_name(const ClassificationVerdict& v) {
  struct Namer {
    std::string operator()(const AutomaticCertified&) const { return "AutomaticCertified"; }
    std::string operator()(const NotAutomaticEvidence&) const { return "NotAutomaticEvidence"; }
    std::string operator()(const Undetermined&) const { return "Undetermined"; }
  };
  return std::visit(Namer{}, v);
}

}  // namespace autoseq
