#ifndef AUTOSEQ_CYCLOTOMIC_HPP
#define AUTOSEQ_CYCLOTOMIC_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "autoseq/polynomial.hpp"

namespace autoseq {

/// Euler's totient.
std::size_t euler_phi(std::size_t n);

/// The n-th cyclotomic polynomial, n >= 1. Results are memoised.
const Polynomial& cyclotomic(std::size_t n);

/// p = unit * remainder * prod Phi_n^m, remainder monic and free of
/// cyclotomic divisors within the search bound.
struct CyclotomicFactorization {
  std::map<std::size_t, unsigned> factors;  // index n -> multiplicity
  Polynomial remainder;
  Rational unit;

  [[nodiscard]] bool fully_cyclotomic() const { return remainder == Polynomial::one(); }
  [[nodiscard]] Polynomial reconstruct() const;
  [[nodiscard]] unsigned multiplicity(std::size_t n) const {
    auto it = factors.find(n);
    return it == factors.end() ? 0U : it->second;
  }
};

/// Trial division by every Phi_n with phi(n) <= deg p and n <= 2 deg(p)^2.
CyclotomicFactorization cyclotomic_factorize(const Polynomial& p);

/// Order of zeta^q for a primitive n-th root of unity zeta: n / gcd(n, q).
std::size_t power_order(std::size_t n, std::size_t q);

}  // namespace autoseq

#endif  // AUTOSEQ_CYCLOTOMIC_HPP
