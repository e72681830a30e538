#ifndef AUTOSEQ_EXPANSION_HPP
#define AUTOSEQ_EXPANSION_HPP

#include <cstddef>
#include <vector>

#include "autoseq/matrix.hpp"
#include "autoseq/polynomial.hpp"
#include "autoseq/series.hpp"

namespace autoseq {

/// The infinite product prod_{s>=0} p(x^{q^s}), or prod 1/p(x^{q^s}) when
/// `inverse` is set. Construction enforces p(0) = 1 and q >= 2.
class ProductSpec {
 public:
  ProductSpec(Polynomial p, std::size_t q, bool inverse = false);

  [[nodiscard]] const Polynomial& p() const { return p_; }
  [[nodiscard]] std::size_t q() const { return q_; }
  [[nodiscard]] bool inverse() const { return inverse_; }
  [[nodiscard]] std::size_t degree() const { return static_cast<std::size_t>(p_.degree()); }

 private:
  Polynomial p_;
  std::size_t q_;
  bool inverse_;
};

/// Coefficient of c_{n+offset} in a linear rule; offset <= 0.
struct RecurrenceTerm {
  int offset;
  Rational coefficient;
  friend bool operator==(const RecurrenceTerm&, const RecurrenceTerm&) = default;
};

/// For each digit r and each window offset -o, the rule
///   c_{qn+r-o} = sum_k coefficient_k * c_{n+offset_k},
/// with every offset inside the window {0, -1, ..., -(window-1)}.
struct RecurrenceSystem {
  std::size_t q = 2;
  std::size_t window = 1;
  /// rules[r][o] for digit r and offset -o, terms sorted by descending offset.
  std::vector<std::vector<std::vector<RecurrenceTerm>>> rules;

  [[nodiscard]] const std::vector<RecurrenceTerm>& rule(std::size_t digit, std::size_t o) const {
    return rules.at(digit).at(o);
  }
  /// {0, -1, ..., -(window-1)}
  [[nodiscard]] std::vector<int> offsets() const;
};

enum class WindowMode { Minimal, Full };

/// Least contiguous window closed under the index rewriting.
std::size_t minimal_window(const ProductSpec& spec);
/// 2 q^k + 1 with q^{k-1} < deg p <= q^k.
std::size_t full_window(const ProductSpec& spec);

RecurrenceSystem build_recurrence(const ProductSpec& spec, WindowMode mode);
/// Explicit window size; must be at least minimal_window(spec).
RecurrenceSystem build_recurrence(const ProductSpec& spec, std::size_t window);

/// c_0..c_N by the digit recurrence (forward) or via the reciprocal series
/// (inverse product).
TruncatedSeries expand_product(const ProductSpec& spec, std::size_t order);

/// c_0..c_N by multiplying the factors p(x^{q^s}) (or their truncated
/// reciprocals) explicitly; independent of the recurrence.
TruncatedSeries oracle_truncated_product(const ProductSpec& spec, std::size_t order);

/// (c_n, c_{n-1}, ..., c_{n-W+1}) with zeros for negative indices.
Vector window_vector(const TruncatedSeries& c, std::size_t n, std::size_t window);

}  // namespace autoseq

#endif  // AUTOSEQ_EXPANSION_HPP
