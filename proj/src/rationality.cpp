#include "autoseq/rationality.hpp"

#include <set>
#include <stdexcept>

#include "autoseq/cyclotomic.hpp"
#include "autoseq/linalg.hpp"

namespace autoseq {

namespace {

void require_unit_constant(const Polynomial& p) {
  if (p[0] != Rational(1)) throw std::invalid_argument("p(0) must be 1");
}

}  // namespace

RationalityResult rationality_test(const Polynomial& p, std::size_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  require_unit_constant(p);
  if (p.degree() < 1) throw std::invalid_argument("rationality test needs deg p >= 1");
  RationalityResult result;
  const auto d = static_cast<std::size_t>(p.degree());
  if (d % (q - 1) != 0) {
    result.reason = "deg p is not a multiple of q-1";
    return result;
  }
  const std::size_t e = d / (q - 1);

  // Unknowns Q_1..Q_e in columns 0..e-1; column e carries the Q_0 = 1 terms.
  RowEchelon echelon(e + 1);
  for (std::size_t t = q * e; t >= 1; --t) {
    RowVector row = RowVector::Zero(static_cast<Eigen::Index>(e + 1));
    for (std::size_t k = 0; k <= e; ++k) {
      Rational c = (t == q * k) ? Rational(1) : Rational(0);
      if (k <= t) c -= p[t - k];
      const std::size_t col = k == 0 ? e : k - 1;
      row(static_cast<Eigen::Index>(col)) = c;
    }
    const RowVector reduced = echelon.reduce(row);
    bool unknowns_zero = true;
    for (std::size_t k = 0; k < e; ++k) unknowns_zero = unknowns_zero && reduced(static_cast<Eigen::Index>(k)).is_zero();
    if (unknowns_zero && !reduced(static_cast<Eigen::Index>(e)).is_zero()) {
      result.witness = t;
      result.reason = "inconsistent coefficient equation at x^" + std::to_string(t);
      return result;
    }
    echelon.add_row(reduced);
  }

  const Vector sol = echelon.null_vector(e);
  std::vector<Rational> qc(e + 1);
  qc[0] = Rational(1);
  for (std::size_t k = 1; k <= e; ++k) qc[k] = sol(static_cast<Eigen::Index>(k - 1));
  const Polynomial Q(std::move(qc));
  if (compose_power(Q, q) != p * Q) {
    result.reason = "solution does not satisfy Q(x^q) = p(x) Q(x)";
    return result;
  }
  const auto fact = cyclotomic_factorize(Q);
  if (!fact.fully_cyclotomic()) {
    result.reason = "Q has a non-cyclotomic factor";
    return result;
  }
  std::vector<std::pair<std::size_t, std::size_t>> certificate;
  for (const auto& [n, mult] : fact.factors) {
    const std::size_t image = power_order(n, q);
    if (!fact.factors.contains(image)) {
      result.reason = "cyclotomic index set not closed under n -> n/gcd(n,q)";
      return result;
    }
    certificate.emplace_back(n, image);
  }
  result.verdict = RationalityVerdict::Rational;
  result.Q = Q;
  result.closure_certificate = std::move(certificate);
  return result;
}

InverseRegularityReport inverse_regularity_necessary(const Polynomial& p, std::size_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  require_unit_constant(p);
  InverseRegularityReport report;
  const auto fact = cyclotomic_factorize(p);
  report.cyclotomic_indices = fact.factors;
  report.all_roots_roots_of_unity = fact.fully_cyclotomic();
  report.modulus_one_necessary = report.all_roots_roots_of_unity;
  for (const auto& [n, mult] : fact.factors) {
    if (n % q != 0) report.bad_orders.push_back(n);
  }
  report.all_orders_multiple_of_q = report.bad_orders.empty();
  return report;
}

std::optional<Cofactor> find_cofactor(const Polynomial& p, std::size_t q,
                                      const CofactorBounds& bounds, bool override_precondition) {
  const InverseRegularityReport report = inverse_regularity_necessary(p, q);
  if (!report.passes() && !override_precondition) {
    throw std::invalid_argument("p fails the root conditions for a cofactor");
  }
  if (!report.all_roots_roots_of_unity) return std::nullopt;

  // v_m(Q(x^q)) = e_{m/gcd(m,q)} and v_m(p Q) = v_m(p) + e_m; the least
  // exponent vector meeting every constraint is also the lexicographically
  // first.
  const auto& vp = report.cyclotomic_indices;
  std::set<std::size_t> indices;
  for (std::size_t m = 1; m <= bounds.max_index; ++m) indices.insert(m);
  for (const auto& [m, mult] : vp) indices.insert(m);
  std::vector<unsigned> e(bounds.max_index + 1, 0);
  auto exponent = [&](std::size_t m) { return m <= bounds.max_index ? e[m] : 0U; };
  auto valuation = [&](std::size_t m) {
    auto it = vp.find(m);
    return it == vp.end() ? 0U : it->second;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t m : indices) {
      const unsigned need = exponent(m) + valuation(m);
      if (need == 0) continue;
      const std::size_t n = power_order(m, q);
      if (n == m) {
        if (valuation(m) > 0) return std::nullopt;
        continue;
      }
      if (n > bounds.max_index) return std::nullopt;
      if (e[n] < need) {
        e[n] = need;
        if (need > bounds.max_mult) return std::nullopt;
        changed = true;
      }
    }
  }

  Polynomial Q = Polynomial::one();
  for (std::size_t n = 1; n <= bounds.max_index; ++n) Q = Q * pow(cyclotomic(n), e[n]);
  Q = Q / Q[0];
  const Polynomial lifted = compose_power(Q, q);
  auto [R, rem] = divrem(lifted, Q * p);
  if (!rem.is_zero()) throw std::logic_error("cofactor constraints did not yield a divisor");
  return Cofactor{std::move(Q), std::move(R)};
}

}  // namespace autoseq
