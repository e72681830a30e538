#include "autoseq/transition.hpp"

#include <stdexcept>

namespace autoseq {

namespace {

constexpr std::size_t kValidationRange = 64;

TransitionSystem validated(TransitionSystem ts, const ProductSpec& spec) {
  const std::size_t top = ts.q * kValidationRange + ts.q - 1;
  if (first_action_mismatch(ts, expand_product(spec, top), kValidationRange) >= 0) {
    throw std::logic_error("transition matrices disagree with the expansion");
  }
  return ts;
}

}  // namespace

TransitionSystem TransitionSystem::from_matrices(std::vector<Matrix> matrices, Vector initial) {
  if (matrices.size() < 2) throw std::invalid_argument("need one matrix per digit, q >= 2");
  const auto w = initial.size();
  for (const auto& m : matrices) {
    if (m.rows() != w || m.cols() != w) throw std::invalid_argument("matrix shape mismatch");
  }
  TransitionSystem ts;
  ts.q = matrices.size();
  ts.matrices = std::move(matrices);
  ts.initial = std::move(initial);
  ts.window.resize(static_cast<std::size_t>(w));
  for (std::size_t o = 0; o < ts.window.size(); ++o) ts.window[o] = -static_cast<int>(o);
  return ts;
}

TransitionSystem to_transition_system(const RecurrenceSystem& rec) {
  const auto w = static_cast<Eigen::Index>(rec.window);
  TransitionSystem ts;
  ts.q = rec.q;
  ts.window = rec.offsets();
  ts.initial = Vector::Zero(w);
  ts.initial(0) = Rational(1);
  for (std::size_t r = 0; r < rec.q; ++r) {
    Matrix m = Matrix::Zero(w, w);
    for (std::size_t o = 0; o < rec.window; ++o) {
      for (const auto& term : rec.rule(r, o)) {
        m(static_cast<Eigen::Index>(o), -term.offset) += term.coefficient;
      }
    }
    ts.matrices.push_back(std::move(m));
  }
  return ts;
}

TransitionSystem build_transition_system(const ProductSpec& spec, WindowMode mode) {
  return validated(to_transition_system(build_recurrence(spec, mode)), spec);
}

TransitionSystem build_transition_system(const ProductSpec& spec, std::size_t window) {
  return validated(to_transition_system(build_recurrence(spec, window)), spec);
}

long first_action_mismatch(const TransitionSystem& ts, const TruncatedSeries& c,
                           std::size_t max_n) {
  const std::size_t w = ts.dimension();
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Vector here = window_vector(c, n, w);
    for (std::size_t r = 0; r < ts.q; ++r) {
      const Vector image = ts.matrices[r] * here;
      if (!exactly_equal(image, window_vector(c, ts.q * n + r, w))) {
        return static_cast<long>(n * ts.q + r);
      }
    }
  }
  return -1;
}

}  // namespace autoseq
