#ifndef AUTOSEQ_POLYNOMIAL_HPP
#define AUTOSEQ_POLYNOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autoseq/rational.hpp"

namespace autoseq {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial, coefficients in ascending degree. The
/// coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector.
template <typename Scalar>
class BasicPolynomial {
 public:
  using scalar_type = Scalar;

  BasicPolynomial() = default;
  BasicPolynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit BasicPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static BasicPolynomial constant(const Scalar& c) { return BasicPolynomial({c}); }
  static BasicPolynomial one() { return constant(Scalar(1)); }

  /// c * x^k
  static BasicPolynomial monomial(std::size_t k, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = c;
    return BasicPolynomial(std::move(v));
  }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i; zero beyond the degree.
  [[nodiscard]] Scalar operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
  }
  [[nodiscard]] const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  [[nodiscard]] std::span<const Scalar> coefficients() const { return coeffs_; }

  [[nodiscard]] Scalar evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Makes the leading coefficient one; the zero polynomial stays zero.
  [[nodiscard]] BasicPolynomial monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) {
    std::vector<Scalar> r(std::max(a.size(), b.size()), Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b.coeffs_[i];
    return BasicPolynomial(std::move(r));
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a) {
    std::vector<Scalar> r(a.coeffs_);
    for (auto& c : r) c = -c;
    return BasicPolynomial(std::move(r));
  }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a + (-b);
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BasicPolynomial(std::move(r));
  }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const Scalar& s) {
    std::vector<Scalar> r(a.coeffs_);
    for (auto& c : r) c *= s;
    return BasicPolynomial(std::move(r));
  }
  friend BasicPolynomial operator*(const Scalar& s, const BasicPolynomial& a) { return a * s; }
  friend BasicPolynomial operator/(const BasicPolynomial& a, const Scalar& s) {
    std::vector<Scalar> r(a.coeffs_);
    for (auto& c : r) c /= s;
    return BasicPolynomial(std::move(r));
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = *this + o; }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this = *this - o; }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using Polynomial = BasicPolynomial<Rational>;

/// Quotient and remainder of Euclidean division.
template <typename Scalar>
struct DivRem {
  BasicPolynomial<Scalar> quotient;
  BasicPolynomial<Scalar> remainder;
};

/// a = quotient * b + remainder with deg(remainder) < deg(b).
template <typename Scalar>
DivRem<Scalar> divrem(const BasicPolynomial<Scalar>& a, const BasicPolynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const auto bc = b.coefficients();
  std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1), Scalar(0));
  const Scalar& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const auto top = static_cast<std::size_t>(k + db);
    if (rem[top] == Scalar(0)) continue;
    const Scalar factor = rem[top] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {BasicPolynomial<Scalar>(std::move(quot)), BasicPolynomial<Scalar>(std::move(rem))};
}

/// Exact division; throws if b does not divide a.
template <typename Scalar>
BasicPolynomial<Scalar> exact_quotient(const BasicPolynomial<Scalar>& a,
                                       const BasicPolynomial<Scalar>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

template <typename Scalar>
bool divides(const BasicPolynomial<Scalar>& d, const BasicPolynomial<Scalar>& a) {
  return divrem(a, d).remainder.is_zero();
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <typename Scalar>
BasicPolynomial<Scalar> gcd(BasicPolynomial<Scalar> a, BasicPolynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Substitution x -> x^t.
template <typename Scalar>
BasicPolynomial<Scalar> compose_power(const BasicPolynomial<Scalar>& p, std::size_t t) {
  if (t == 0) throw std::invalid_argument("compose_power requires t >= 1");
  if (p.is_zero()) return p;
  std::vector<Scalar> r(static_cast<std::size_t>(p.degree()) * t + 1, Scalar(0));
  for (std::size_t i = 0; i < p.size(); ++i) r[i * t] = p[i];
  return BasicPolynomial<Scalar>(std::move(r));
}

template <typename Scalar>
BasicPolynomial<Scalar> pow(const BasicPolynomial<Scalar>& p, unsigned e) {
  auto result = BasicPolynomial<Scalar>::one();
  for (unsigned i = 0; i < e; ++i) result *= p;
  return result;
}

/// Lexicographic order on (degree, coefficients); used for deterministic sorting.
bool degree_lex_less(const Polynomial& a, const Polynomial& b);

/// True iff every coefficient is an integer.
bool has_integer_coefficients(const Polynomial& p);

/// Scales by a positive rational so the coefficients are coprime integers.
Polynomial primitive_part(const Polynomial& p);

/// Syntax error in polynomial text, with the byte offset where it was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses expressions such as "1+x-x^3-x^4", "1/2*x^2 - 3x", "(x^2+x+1)*(x^6-1)".
Polynomial parse_polynomial(std::string_view text);

enum class TermOrder { Ascending, Descending };

/// Prints in the grammar accepted by parse_polynomial.
std::string to_string(const Polynomial& p, TermOrder order = TermOrder::Ascending);

/// Coefficients as exact strings, ascending degree.
std::vector<std::string> coefficient_strings(const Polynomial& p);
Polynomial from_coefficient_strings(const std::vector<std::string>& coeffs);

}  // namespace autoseq

#endif  // AUTOSEQ_POLYNOMIAL_HPP
