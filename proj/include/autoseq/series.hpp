#ifndef AUTOSEQ_SERIES_HPP
#define AUTOSEQ_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "autoseq/polynomial.hpp"

namespace autoseq {

/// The coefficients c_0..c_N of a formal power series known modulo x^{N+1}.
/// Binary operations truncate to the smaller of the two orders.
template <typename Scalar>
class BasicSeries {
 public:
  BasicSeries() : coeffs_(1, Scalar(0)) {}
  /// Zero series of the given order.
  explicit BasicSeries(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}
  explicit BasicSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  /// p truncated (or zero-padded) to the given order.
  static BasicSeries from_polynomial(const BasicPolynomial<Scalar>& p, std::size_t order) {
    BasicSeries s(order);
    for (std::size_t i = 0; i < std::min(p.size(), order + 1); ++i) s.coeffs_[i] = p[i];
    return s;
  }

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }
  Scalar& operator[](std::size_t i) { return coeffs_.at(i); }
  [[nodiscard]] const std::vector<Scalar>& coefficients() const { return coeffs_; }

  [[nodiscard]] BasicSeries truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
    return BasicSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    BasicSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }
  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    BasicSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    BasicSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j] == Scalar(0)) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  /// Product with a polynomial, keeping this series' order.
  friend BasicSeries operator*(const BasicSeries& a, const BasicPolynomial<Scalar>& p) {
    BasicSeries r(a.order());
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == Scalar(0)) continue;
      for (std::size_t i = 0; i + k <= a.order(); ++i) r.coeffs_[i + k] += p[k] * a.coeffs_[i];
    }
    return r;
  }

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  std::vector<Scalar> coeffs_;
};

using TruncatedSeries = BasicSeries<Rational>;

/// Substitution x -> x^t; the result keeps the input's order.
template <typename Scalar>
BasicSeries<Scalar> compose_power(const BasicSeries<Scalar>& f, std::size_t t) {
  if (t == 0) throw std::invalid_argument("compose_power requires t >= 1");
  BasicSeries<Scalar> r(f.order());
  for (std::size_t i = 0; i * t <= f.order(); ++i) r[i * t] = f[i];
  return r;
}

/// Integer power q^l; throws on overflow of size_t.
std::size_t checked_power(std::size_t q, std::size_t l);

/// The decimation n -> f[q^l n + b].
template <typename Scalar>
BasicSeries<Scalar> decimate(const BasicSeries<Scalar>& f, std::size_t q, std::size_t l,
                             std::size_t b) {
  if (q < 2) throw std::invalid_argument("decimation base must be >= 2");
  const std::size_t step = checked_power(q, l);
  if (b >= step) throw std::invalid_argument("decimation offset b must satisfy b < q^l");
  if (f.order() < b) throw std::invalid_argument("series order is below the decimation offset");
  const std::size_t n = (f.order() - b) / step;
  std::vector<Scalar> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(f[step * i + b]);
  return BasicSeries<Scalar>(std::move(out));
}

/// The truncated reciprocal 1/p to the given order, for p(0) = 1.
template <typename Scalar>
BasicSeries<Scalar> series_inverse(const BasicPolynomial<Scalar>& p, std::size_t order) {
  if (p[0] != Scalar(1)) throw std::invalid_argument("series_inverse requires p(0) = 1");
  BasicSeries<Scalar> a(order);
  a[0] = Scalar(1);
  const auto deg = static_cast<std::size_t>(p.degree());
  for (std::size_t n = 1; n <= order; ++n) {
    Scalar acc(0);
    for (std::size_t i = 1; i <= std::min(n, deg); ++i) {
      if (p[i] == Scalar(0)) continue;
      acc -= p[i] * a[n - i];
    }
    a[n] = acc;
  }
  return a;
}

/// "c0,c1,...".
std::string to_string(const TruncatedSeries& s);

}  // namespace autoseq

#endif  // AUTOSEQ_SERIES_HPP
