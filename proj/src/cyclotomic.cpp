#include "autoseq/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace autoseq {

std::size_t euler_phi(std::size_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  std::size_t result = n;
  std::size_t m = n;
  for (std::size_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const Polynomial& cyclotomic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::mutex mutex;
  // unique_ptr keeps references stable across rehashing.
  static std::unordered_map<std::size_t, std::unique_ptr<Polynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d for the proper divisors d of n.
  Polynomial acc = Polynomial::monomial(n) - Polynomial::one();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d == 0) acc = exact_quotient(acc, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<Polynomial>(std::move(acc)));
  return *it->second;
}

Polynomial CyclotomicFactorization::reconstruct() const {
  Polynomial acc = remainder * unit;
  for (const auto& [n, m] : factors) acc *= pow(cyclotomic(n), m);
  return acc;
}

CyclotomicFactorization cyclotomic_factorize(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot factorize the zero polynomial");
  CyclotomicFactorization out;
  out.unit = p.leading();
  out.remainder = p.monic();
  const auto deg = static_cast<std::size_t>(p.degree());
  const std::size_t bound = 2 * deg * deg;
  for (std::size_t n = 1; n <= bound && out.remainder.degree() > 0; ++n) {
    const std::size_t phi = euler_phi(n);
    if (phi > deg) continue;
    const Polynomial& phi_n = cyclotomic(n);
    for (;;) {
      if (out.remainder.degree() < static_cast<int>(phi)) break;
      auto [q, r] = divrem(out.remainder, phi_n);
      if (!r.is_zero()) break;
      out.remainder = std::move(q);
      ++out.factors[n];
    }
  }
  return out;
}

std::size_t power_order(std::size_t n, std::size_t q) { return n / std::gcd(n, q); }

}  // namespace autoseq
