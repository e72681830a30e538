// Independent reference computations for the test suites. None of these call
// the library's expansion, series or automaton code.
#ifndef AUTOSEQ_TESTS_ORACLES_HPP
#define AUTOSEQ_TESTS_ORACLES_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "autoseq/polynomial.hpp"
#include "autoseq/rational.hpp"

namespace oracle {

using autoseq::Polynomial;
using autoseq::Rational;

/// Thue-Morse signs: (-1)^{popcount(n)}.
inline int thue_morse(std::uint64_t n) { return std::popcount(n) % 2 == 0 ? 1 : -1; }

/// sum_{3i <= n} b_i with b the Thue-Morse signs.
inline long f1_partial_sum(std::uint64_t n) {
  long s = 0;
  for (std::uint64_t i = 0; 3 * i <= n; ++i) s += thue_morse(i);
  return s;
}

/// Naive product of p(x^{q^s}) for q^s <= N, each factor expanded term by term.
inline std::vector<Rational> naive_product(const Polynomial& p, std::size_t q, std::size_t N) {
  std::vector<Rational> acc(N + 1, Rational(0));
  acc[0] = Rational(1);
  for (std::size_t step = 1; step <= N; step *= q) {
    std::vector<Rational> next(N + 1, Rational(0));
    for (std::size_t i = 0; i <= N; ++i) {
      if (acc[i].is_zero()) continue;
      for (std::size_t j = 0; j < p.size() && i + j * step <= N; ++j) {
        next[i + j * step] += acc[i] * p[j];
      }
    }
    acc = std::move(next);
    if (step > N / q) break;
  }
  return acc;
}

/// Distinct q-kernel subsequences of a prefix, compared on their common
/// length, for levels 0..l_max. Only meaningful when every subsequence keeps
/// enough terms to separate classes.
inline std::size_t prefix_kernel_size(const std::vector<Rational>& c, std::size_t q,
                                      std::size_t l_max) {
  std::vector<std::vector<Rational>> classes;
  std::size_t ql = 1;
  for (std::size_t l = 0; l <= l_max; ++l, ql *= q) {
    for (std::size_t b = 0; b < ql; ++b) {
      std::vector<Rational> sub;
      for (std::size_t n = b; n < c.size(); n += ql) sub.push_back(c[n]);
      bool found = false;
      for (const auto& k : classes) {
        const std::size_t m = std::min(k.size(), sub.size());
        bool same = true;
        for (std::size_t i = 0; i < m && same; ++i) same = k[i] == sub[i];
        if (same) {
          found = true;
          break;
        }
      }
      if (!found) classes.push_back(std::move(sub));
    }
  }
  return classes.size();
}

/// Random polynomial with p(0) = 1, exact degree d, coefficients in [-B, B].
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t d, long B) {
  std::uniform_int_distribution<long> coeff(-B, B);
  std::vector<Rational> c(d + 1);
  c[0] = Rational(1);
  for (std::size_t i = 1; i <= d; ++i) c[i] = Rational(coeff(rng));
  while (c[d].is_zero()) c[d] = Rational(coeff(rng));
  return Polynomial(std::move(c));
}

}  // namespace oracle

#endif  // AUTOSEQ_TESTS_ORACLES_HPP
