#ifndef AUTOSEQ_RATIONALITY_HPP
#define AUTOSEQ_RATIONALITY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/polynomial.hpp"

namespace autoseq {

enum class RationalityVerdict { Rational, NotRational };

struct RationalityResult {
  RationalityVerdict verdict = RationalityVerdict::NotRational;
  std::optional<Polynomial> Q;
  std::optional<std::size_t> witness;  // first inconsistent coefficient index
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> closure_certificate;
  std::string reason;

  [[nodiscard]] bool rational() const { return verdict == RationalityVerdict::Rational; }
};

/// Decides whether prod_s p(x^{q^s}) = 1/Q(x) for a polynomial Q by solving
/// Q(x^q) = p(x) Q(x) with Q(0) = 1, deg Q = deg p / (q - 1). Equations are
/// eliminated from the top coefficient x^{q deg Q} down to x^1.
/// Requires p(0) = 1 and deg p >= 1.
RationalityResult rationality_test(const Polynomial& p, std::size_t q);

struct InverseRegularityReport {
  bool all_roots_roots_of_unity = false;
  bool all_orders_multiple_of_q = false;
  bool modulus_one_necessary = false;  // exact surrogate: same as the first flag
  std::map<std::size_t, unsigned> cyclotomic_indices;
  std::vector<std::size_t> bad_orders;  // indices n with q not dividing n

  [[nodiscard]] bool passes() const { return all_roots_roots_of_unity && all_orders_multiple_of_q; }
};

/// Necessary root conditions for prod_s 1/p(x^{q^s}) to be q-regular.
/// Requires p(0) = 1.
InverseRegularityReport inverse_regularity_necessary(const Polynomial& p, std::size_t q);

struct CofactorBounds {
  std::size_t max_index = 24;
  unsigned max_mult = 3;
};

struct Cofactor {
  Polynomial Q;  // Q(0) = 1
  Polynomial R;  // Q(x^q) / (Q(x) p(x))
};

/// Q = prod_{n <= max_index} Phi_n^{e_n} with e_n <= max_mult and p Q | Q(x^q),
/// taking the lexicographically first exponent vector. Absent when none exists
/// within the bounds. Throws std::invalid_argument when p fails the root
/// conditions unless `override_precondition` is set.
std::optional<Cofactor> find_cofactor(const Polynomial& p, std::size_t q,
                                      const CofactorBounds& bounds = {},
                                      bool override_precondition = false);

}  // namespace autoseq

#endif  // AUTOSEQ_RATIONALITY_HPP
