#include "autoseq/candidates.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "autoseq/cyclotomic.hpp"

namespace autoseq {

namespace {

constexpr unsigned long kDivisorLimit = 1000000000000UL;
constexpr std::size_t kMaxDivisorCombinations = std::size_t{1} << 18;

std::optional<std::vector<mpz_class>> positive_divisors(const mpz_class& n) {
  const mpz_class a = abs(n);
  if (a == 0 || a > kDivisorLimit) return std::nullopt;
  const unsigned long v = a.get_ui();
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.emplace_back(d);
    if (d != v / d) large.emplace_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

unsigned divide_out(Polynomial& r, const Polynomial& f) {
  unsigned k = 0;
  while (r.degree() >= f.degree()) {
    auto [quot, rem] = divrem(r, f);
    if (!rem.is_zero()) break;
    r = std::move(quot);
    ++k;
  }
  return k;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// Smallest-degree integer factor of r with degree k, if one exists within the
// budget. `exhausted` is set when the budget prevented a full search.
std::optional<Polynomial> trial_factor(const Polynomial& r, int k, std::size_t budget,
                                       bool& exhausted) {
  const auto lead_divs = positive_divisors(r.leading().numerator());
  const auto const_divs = positive_divisors(r[0].numerator());
  if (!lead_divs || !const_divs) {
    exhausted = true;
    return std::nullopt;
  }
  mpz_class norm2 = 0;
  for (const auto& c : r.coefficients()) norm2 += c.numerator() * c.numerator();
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;

  const auto ku = static_cast<unsigned long>(k);
  std::vector<mpz_class> bounds(ku + 1);
  mpz_class total = mpz_class(lead_divs->size()) * mpz_class(2 * const_divs->size());
  for (unsigned long i = 1; i < ku; ++i) {
    bounds[i] = binomial(ku, i) * norm;
    total *= 2 * bounds[i] + 1;
  }
  if (total > budget) {
    exhausted = true;
    return std::nullopt;
  }

  std::vector<Rational> g(ku + 1);
  for (const auto& lc : *lead_divs) {
    for (const auto& c0 : *const_divs) {
      for (int sign : {1, -1}) {
        g[ku] = Rational(lc);
        g[0] = Rational(mpz_class(sign * c0));
        for (unsigned long i = 1; i < ku; ++i) g[i] = Rational(mpz_class(-bounds[i]));
        while (true) {
          Polynomial f(g);
          if (divides(f, r)) return f;
          unsigned long i = 1;
          for (; i < ku; ++i) {
            if (g[i] < Rational(bounds[i])) {
              g[i] += 1;
              break;
            }
            g[i] = Rational(mpz_class(-bounds[i]));
          }
          if (i >= ku) break;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FactorBase factor_base(const Polynomial& p, const FactorOptions& options) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  FactorBase base;
  std::vector<Rational> coeffs(p.coefficients().begin(), p.coefficients().end());
  while (coeffs.front().is_zero()) {
    coeffs.erase(coeffs.begin());
    ++base.x_power;
  }
  const auto cyc = cyclotomic_factorize(Polynomial(std::move(coeffs)));
  for (const auto& [n, mult] : cyc.factors) base.factors.emplace_back(cyclotomic(n), mult);

  Polynomial r = primitive_part(cyc.remainder);
  if (r.degree() >= 1) {
    const auto lead_divs = positive_divisors(r.leading().numerator());
    const auto const_divs = positive_divisors(r[0].numerator());
    if (lead_divs && const_divs) {
      for (const auto& den : *lead_divs) {
        for (const auto& num : *const_divs) {
          if (gcd(den, num) != 1) continue;
          for (int sign : {1, -1}) {
            const Polynomial f{Rational(mpz_class(-sign * num)), Rational(den)};
            if (const unsigned k = divide_out(r, f); k > 0) base.factors.emplace_back(f, k);
          }
        }
      }
    } else {
      base.complete = false;
    }
  }

  for (int k = 2; 2 * k <= r.degree();) {
    bool exhausted = false;
    auto f = trial_factor(r, k, options.trial_budget, exhausted);
    if (exhausted) base.complete = false;
    if (f) {
      const unsigned mult = divide_out(r, *f);
      base.factors.emplace_back(std::move(*f), mult);
    } else {
      ++k;
    }
  }
  if (r.degree() >= 1) base.factors.emplace_back(primitive_part(r), 1);
  return base;
}

CandidateSet candidates_from_equation(const MahlerEquation& eq, const FactorOptions& options) {
  if (eq.order() < 1) throw std::invalid_argument("candidate enumeration needs order >= 1");
  const Polynomial& top = eq.coefficient(eq.order());
  if (top.is_zero()) throw std::invalid_argument("candidate enumeration needs a_m != 0");
  std::size_t step = 1;
  for (std::size_t i = 1; i < eq.order(); ++i) step *= eq.q();

  const FactorBase base = factor_base(top, options);
  CandidateSet out;
  out.complete = base.complete;

  std::size_t combinations = 1;
  for (const auto& [f, mult] : base.factors) {
    combinations *= mult + 1;
    if (combinations > kMaxDivisorCombinations) {
      out.candidates = {Polynomial::one()};
      out.complete = false;
      return out;
    }
  }

  auto key_less = [](const Polynomial& a, const Polynomial& b) { return degree_lex_less(a, b); };
  std::set<Polynomial, decltype(key_less)> found(key_less);
  std::vector<unsigned> exps(base.factors.size(), 0);
  while (true) {
    Polynomial d = Polynomial::one();
    for (std::size_t i = 0; i < exps.size(); ++i) d = d * pow(base.factors[i].first, exps[i]);
    bool supported = true;
    for (std::size_t j = 0; j < d.size() && supported; ++j) {
      supported = d[j].is_zero() || j % step == 0;
    }
    if (supported) {
      std::vector<Rational> g;
      for (std::size_t j = 0; j < d.size(); j += step) g.push_back(d[j] / d[0]);
      found.insert(Polynomial(std::move(g)));
    }
    std::size_t i = 0;
    for (; i < exps.size(); ++i) {
      if (exps[i] < base.factors[i].second) {
        ++exps[i];
        break;
      }
      exps[i] = 0;
    }
    if (i == exps.size()) break;
  }
  out.candidates.assign(found.begin(), found.end());
  return out;
}

}  // namespace autoseq
