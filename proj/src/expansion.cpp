#include "autoseq/expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace autoseq {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Rule for c_{qn + r - o}: rewrite r - o = q t + r' with 0 <= r' < q, so
// c_{q(n+t)+r'} = sum_{j = r' mod q} a_j c_{n + t + (r'-j)/q}.
std::vector<RecurrenceTerm> rewrite_rule(const ProductSpec& spec, std::size_t digit,
                                         std::size_t o) {
  const auto q = static_cast<long>(spec.q());
  const long s = static_cast<long>(digit) - static_cast<long>(o);
  const long t = floor_div(s, q);
  const long rp = s - q * t;
  std::vector<RecurrenceTerm> terms;
  const Polynomial& p = spec.p();
  for (long j = rp; j <= static_cast<long>(spec.degree()); j += q) {
    const Rational& a = p[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    terms.push_back({static_cast<int>(t + (rp - j) / q), a});
  }
  // j ascending gives offsets descending already.
  return terms;
}

void require_forward(const ProductSpec& spec) {
  if (spec.inverse()) {
    throw std::invalid_argument("finite-window recurrences exist only for forward products");
  }
}

}  // namespace

ProductSpec::ProductSpec(Polynomial p, std::size_t q, bool inverse)
    : p_(std::move(p)), q_(q), inverse_(inverse) {
  if (q_ < 2) throw std::invalid_argument("q must be >= 2");
  if (p_.is_zero() || p_[0] != Rational(1)) {
    throw std::invalid_argument("the polynomial must satisfy p(0) = 1");
  }
}

std::vector<int> RecurrenceSystem::offsets() const {
  std::vector<int> out(window);
  for (std::size_t o = 0; o < window; ++o) out[o] = -static_cast<int>(o);
  return out;
}

std::size_t minimal_window(const ProductSpec& spec) {
  require_forward(spec);
  std::size_t deepest = 0;
  for (std::size_t checked = 0; checked <= deepest; ++checked) {
    for (std::size_t r = 0; r < spec.q(); ++r) {
      for (const auto& term : rewrite_rule(spec, r, checked)) {
        deepest = std::max(deepest, static_cast<std::size_t>(-term.offset));
      }
    }
  }
  return deepest + 1;
}

std::size_t full_window(const ProductSpec& spec) {
  require_forward(spec);
  std::size_t qk = 1;
  while (qk < spec.degree()) qk *= spec.q();
  return 2 * qk + 1;
}

RecurrenceSystem build_recurrence(const ProductSpec& spec, WindowMode mode) {
  return build_recurrence(spec, mode == WindowMode::Minimal ? minimal_window(spec)
                                                            : full_window(spec));
}

RecurrenceSystem build_recurrence(const ProductSpec& spec, std::size_t window) {
  require_forward(spec);
  if (window < minimal_window(spec)) {
    throw std::invalid_argument("window size " + std::to_string(window) +
                                " is smaller than the minimal closed window");
  }
  RecurrenceSystem sys;
  sys.q = spec.q();
  sys.window = window;
  sys.rules.resize(spec.q());
  for (std::size_t r = 0; r < spec.q(); ++r) {
    sys.rules[r].reserve(window);
    for (std::size_t o = 0; o < window; ++o) {
      auto terms = rewrite_rule(spec, r, o);
      for (const auto& term : terms) {
        if (static_cast<std::size_t>(-term.offset) >= window) {
          throw std::logic_error("recurrence window is not closed");
        }
      }
      sys.rules[r].push_back(std::move(terms));
    }
  }
  return sys;
}

TruncatedSeries expand_product(const ProductSpec& spec, std::size_t order) {
  TruncatedSeries c(order);
  c[0] = Rational(1);
  const std::size_t q = spec.q();
  if (!spec.inverse()) {
    const Polynomial& p = spec.p();
    const std::size_t deg = spec.degree();
    for (std::size_t m = 1; m <= order; ++m) {
      const std::size_t n = m / q;
      const std::size_t r = m % q;
      // c_{qn+r} = sum_{j = r mod q} a_j c_{n - (j-r)/q}
      Rational acc;
      for (std::size_t j = r; j <= deg; j += q) {
        const std::size_t back = (j - r) / q;
        if (back > n || p[j].is_zero()) continue;
        acc += p[j] * c[n - back];
      }
      c[m] = acc;
    }
    return c;
  }
  const TruncatedSeries a = series_inverse(spec.p(), order);
  for (std::size_t m = 1; m <= order; ++m) {
    const std::size_t n = m / q;
    const std::size_t i = m % q;
    // c_{qn+i} = sum_{j=0}^{n} a_{qj+i} c_{n-j}
    Rational acc;
    for (std::size_t j = 0; j <= n; ++j) {
      const Rational& aj = a[q * j + i];
      if (aj.is_zero()) continue;
      acc += aj * c[n - j];
    }
    c[m] = acc;
  }
  return c;
}

TruncatedSeries oracle_truncated_product(const ProductSpec& spec, std::size_t order) {
  TruncatedSeries acc(order);
  acc[0] = Rational(1);
  for (std::size_t step = 1; step <= order; step *= spec.q()) {
    const Polynomial factor = compose_power(spec.p(), step);
    if (spec.inverse()) {
      acc = acc * series_inverse(factor, order);
    } else {
      acc = acc * factor;
    }
    if (step > order / spec.q()) break;
  }
  return acc;
}

Vector window_vector(const TruncatedSeries& c, std::size_t n, std::size_t window) {
  if (n >= c.order() + 1) throw std::out_of_range("window vector beyond series order");
  Vector v(static_cast<Eigen::Index>(window));
  for (std::size_t o = 0; o < window; ++o) {
    v(static_cast<Eigen::Index>(o)) = o <= n ? c[n - o] : Rational(0);
  }
  return v;
}

}  // namespace autoseq
