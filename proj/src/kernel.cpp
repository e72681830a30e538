#include "autoseq/kernel.hpp"

#include <stdexcept>
#include <unordered_map>

namespace autoseq {

namespace {

constexpr std::size_t kMaxPairsPerLevel = std::size_t{1} << 22;

std::vector<Vector> orbit_states(const TransitionSystem& ts, const SemigroupClosure& closure) {
  std::vector<Vector> states{ts.initial};
  std::unordered_multimap<std::size_t, std::size_t> seen;
  seen.emplace(hash_dense(ts.initial), 0);
  for (const auto& g : closure.elements) {
    Vector v = g * ts.initial;
    const std::size_t h = hash_dense(v);
    bool present = false;
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi && !present; ++it) present = exactly_equal(states[it->second], v);
    if (present) continue;
    seen.emplace(h, states.size());
    states.push_back(std::move(v));
  }
  return states;
}

struct Functional {
  std::size_t b;
  RowVector w;
};

}  // namespace

KernelDescription compute_kernel(const TransitionSystem& ts, const SemigroupClosure& closure,
                                 std::size_t l_max) {
  if (!closure.finite()) throw std::invalid_argument("kernel needs a finite semigroup closure");
  const std::vector<Vector> states = orbit_states(ts, closure);

  KernelDescription out;
  std::vector<std::vector<Rational>> signatures;
  std::unordered_multimap<std::size_t, std::size_t> by_hash;

  // Returns true if the pair opened a new class.
  auto classify = [&](std::size_t l, const Functional& f) -> bool {
    std::vector<Rational> sig;
    sig.reserve(states.size());
    std::size_t h = 0;
    for (const auto& s : states) {
      sig.push_back((f.w * s).value());
      hash_combine(h, sig.back().hash());
    }
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (signatures[it->second] == sig) {
        out.pairing_table.emplace(KernelPair{l, f.b}, it->second);
        return false;
      }
    }
    const std::size_t id = signatures.size();
    by_hash.emplace(h, id);
    signatures.push_back(std::move(sig));
    out.representatives.emplace_back(l, f.b);
    out.pairing_table.emplace(KernelPair{l, f.b}, id);
    return true;
  };

  RowVector e1 = RowVector::Zero(static_cast<Eigen::Index>(ts.dimension()));
  e1(0) = Rational(1);
  std::vector<Functional> level{{0, e1}};
  classify(0, level.front());
  std::size_t step = 1;  // q^l
  for (std::size_t l = 0; l < l_max; ++l) {
    if (level.size() * ts.q > kMaxPairsPerLevel) break;
    std::vector<Functional> next;
    next.reserve(level.size() * ts.q);
    bool grew = false;
    for (std::size_t d = 0; d < ts.q; ++d) {
      for (const auto& f : level) {
        Functional g{f.b + step * d, f.w * ts.matrices[d]};
        grew = classify(l + 1, g) || grew;
        next.push_back(std::move(g));
      }
    }
    out.levels = l + 1;
    level = std::move(next);
    step *= ts.q;
    if (!grew) break;
  }
  out.class_count = signatures.size();
  return out;
}

}  // namespace autoseq
