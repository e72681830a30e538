#ifndef AUTOSEQ_RATIONAL_HPP
#define AUTOSEQ_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace autoseq {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}                      // NOLINT(implicit)
  Rational(long v) : value_(v) {}                     // NOLINT(implicit)
  Rational(unsigned v) : value_(v) {}                 // NOLINT(implicit)
  Rational(unsigned long v) : value_(v) {}            // NOLINT(implicit)
  Rational(long long v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Rational(const mpz_class& v) : value_(v) {}         // NOLINT(implicit)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses "a" or "a/b" (optional leading sign, b > 0).
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] std::string to_string() const { return value_.get_str(); }
  [[nodiscard]] std::size_t hash() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);

/// Exponentiation by a natural number.
Rational pow(const Rational& base, unsigned exponent);

struct RationalHash {
  std::size_t operator()(const Rational& r) const { return r.hash(); }
};

inline void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace autoseq

template <>
struct std::hash<autoseq::Rational> {
  std::size_t operator()(const autoseq::Rational& r) const { return r.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<autoseq::Rational> : GenericNumTraits<autoseq::Rational> {
  using Real = autoseq::Rational;
  using NonInteger = autoseq::Rational;
  using Literal = autoseq::Rational;
  using Nested = autoseq::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline int digits10() { return 0; }
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
};

}  // namespace Eigen

#endif  // AUTOSEQ_RATIONAL_HPP
