#include "autoseq/polynomial.hpp"

#include <cctype>

namespace autoseq {

bool degree_lex_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

bool has_integer_coefficients(const Polynomial& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Rational& c) { return c.is_integer(); });
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                                  c.denominator().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return p * Rational(den_lcm, num_gcd);
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Polynomial result = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return result;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc += term();
      } else if (peek() == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc *= factor();
      } else if (peek() == 'x' || peek() == '(') {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    skip_ws();
    if (at_end()) fail("expected a coefficient, 'x' or '('");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(coefficient());
    if (c == 'x') {
      ++pos_;
      return Polynomial::monomial(exponent());
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return pow(inner, static_cast<unsigned>(exponent()));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Rational coefficient() {
    mpz_class num(digits(), 10);
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      mpz_class den(digits(), 10);
      if (den == 0) fail_at("zero denominator", at);
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::size_t exponent() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 9) fail_at("exponent too large", at);
    return static_cast<std::size_t>(std::stoul(d));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] static void fail_at(const std::string& what, std::size_t at) {
    throw ParseError(what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Rational& c, std::size_t k) {
  if (k == 0) return c.to_string();
  std::string x = k == 1 ? "x" : "x^" + std::to_string(k);
  if (c.is_one()) return x;
  if (c == Rational(-1)) return "-" + x;
  return c.to_string() + "*" + x;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Polynomial& p, TermOrder order) {
  if (p.is_zero()) return "0";
  std::vector<std::size_t> degrees;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!p[k].is_zero()) degrees.push_back(k);
  }
  if (order == TermOrder::Descending) std::reverse(degrees.begin(), degrees.end());
  std::string out;
  for (std::size_t k : degrees) {
    std::string t = monomial_text(p[k], k);
    if (!out.empty() && t.front() != '-') out += '+';
    out += t;
  }
  return out;
}

std::vector<std::string> coefficient_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

Polynomial from_coefficient_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(Rational::parse(s));
  return Polynomial(std::move(v));
}

}  // namespace autoseq
