#include "autoseq/semigroup.hpp"

#include <stdexcept>
#include <unordered_map>

namespace autoseq {

namespace {

class MatrixIndex {
 public:
  explicit MatrixIndex(const std::vector<Matrix>& store) : store_(store) {}

  /// True if an equal matrix is already stored.
  bool find(const Matrix& m, std::size_t h) const {
    auto [lo, hi] = buckets_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (exactly_equal(store_[it->second], m)) return true;
    }
    return false;
  }
  void add(std::size_t h, std::size_t idx) { buckets_.emplace(h, idx); }

 private:
  const std::vector<Matrix>& store_;
  std::unordered_multimap<std::size_t, std::size_t> buckets_;
};

}  // namespace

SemigroupClosure semigroup_closure(const TransitionSystem& ts, std::size_t cap, Deadline deadline) {
  if (cap < ts.q) throw std::invalid_argument("semigroup cap must be at least q");
  SemigroupClosure out;
  MatrixIndex index(out.elements);

  auto try_insert = [&](Matrix m, std::vector<std::size_t> word) -> bool {
    const std::size_t h = hash_dense(m);
    if (index.find(m, h)) return true;
    if (out.elements.size() >= cap) {
      out.status = ClosureStatus::CapExceeded;
      return false;
    }
    index.add(h, out.elements.size());
    out.elements.push_back(std::move(m));
    out.words.push_back(std::move(word));
    return true;
  };

  for (std::size_t d = 0; d < ts.q; ++d) {
    if (!try_insert(ts.matrices[d], {d})) return out;
  }
  for (std::size_t next = 0; next < out.elements.size(); ++next) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      out.status = ClosureStatus::CapExceeded;
      out.timed_out = true;
      return out;
    }
    for (std::size_t d = 0; d < ts.q; ++d) {
      Matrix product = out.elements[next] * ts.matrices[d];
      ++out.products;
      std::vector<std::size_t> word = out.words[next];
      word.push_back(d);
      if (!try_insert(std::move(product), std::move(word))) return out;
    }
  }
  return out;
}

std::size_t word_index(const std::vector<std::size_t>& word, std::size_t q) {
  std::size_t n = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) n = n * q + *it;
  return n;
}

}  // namespace autoseq
