#include "autoseq/equation.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "autoseq/linalg.hpp"
#include "autoseq/text.hpp"

namespace autoseq {

namespace {

constexpr std::size_t kMinCompareTerms = 16;

std::size_t power_or_cap(std::size_t q, std::size_t l, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (r > cap / q) return cap + 1;
    r *= q;
  }
  return r;
}

using SeriesList = std::vector<TruncatedSeries>;

// Unknowns a_{i,j} in the order (i ascending, j ascending).
std::optional<Vector> solve_order(const SeriesList& family, std::size_t q, std::size_t m,
                                  std::size_t D) {
  const std::size_t width = D + 1;
  const std::size_t columns = (m + 1) * width;
  RowEchelon echelon(columns);
  std::vector<std::size_t> steps(m + 1);
  for (const auto& c : family) {
    const std::size_t T = c.order();
    for (std::size_t i = 0; i <= m; ++i) steps[i] = power_or_cap(q, i, T);
    for (std::size_t t = 0; t <= T; ++t) {
      RowVector row = RowVector::Zero(static_cast<Eigen::Index>(columns));
      bool any = false;
      for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= std::min(D, t); ++j) {
          if ((t - j) % steps[i] != 0) continue;
          const Rational& v = c[(t - j) / steps[i]];
          if (v.is_zero()) continue;
          row(static_cast<Eigen::Index>(i * width + j)) = v;
          any = true;
        }
      }
      if (any) echelon.add_row(std::move(row));
      if (echelon.rank() == columns) return std::nullopt;
    }
  }
  for (std::size_t f : echelon.free_columns()) {
    Vector v = echelon.null_vector(f);
    bool top_nonzero = false;
    for (std::size_t j = 0; j <= D; ++j) {
      top_nonzero = top_nonzero || !v(static_cast<Eigen::Index>(m * width + j)).is_zero();
    }
    if (top_nonzero) return normalize_integer(v);
  }
  return std::nullopt;
}

std::optional<MahlerEquation> search(const SeriesList& family, std::size_t q, std::size_t m_max,
                                     std::size_t D_max, EquationRoute route) {
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (std::size_t D = 0; D <= D_max; ++D) {
      auto v = solve_order(family, q, m, D);
      if (!v) continue;
      std::vector<Polynomial> coeffs;
      for (std::size_t i = 0; i <= m; ++i) {
        std::vector<Rational> a(D + 1);
        for (std::size_t j = 0; j <= D; ++j) a[j] = (*v)(static_cast<Eigen::Index>(i * (D + 1) + j));
        coeffs.emplace_back(std::move(a));
      }
      return MahlerEquation(q, std::move(coeffs), 0, route);
    }
  }
  return std::nullopt;
}

void check_search_bounds(const TruncatedSeries& coeffs, std::size_t q, std::size_t m_max,
                         std::size_t D_max) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  if (coeffs.order() < 2 * (m_max + 1) * (D_max + 1)) {
    throw std::invalid_argument("series order too small for the requested equation bounds");
  }
}

MahlerEquation with_verification(const MahlerEquation& eq, std::size_t verified_to) {
  return MahlerEquation(eq.q(), eq.coefficients(), verified_to, eq.route());
}

}  // namespace

MahlerEquation::MahlerEquation(std::size_t q, std::vector<Polynomial> coefficients,
                               std::size_t verified_to, EquationRoute route)
    : q_(q), coefficients_(std::move(coefficients)), verified_to_(verified_to), route_(route) {
  if (q_ < 2) throw std::invalid_argument("q must be >= 2");
  if (coefficients_.empty()) throw std::invalid_argument("equation needs at least one coefficient");
  if (coefficients_.front().is_zero() && coefficients_.back().is_zero()) {
    throw std::invalid_argument("equation coefficients a_0 and a_m are both zero");
  }
}

bool MahlerEquation::same_span(const MahlerEquation& other) const {
  if (q_ != other.q_ || coefficients_.size() != other.coefficients_.size()) return false;
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const auto& a = coefficients_[i];
    const auto& b = other.coefficients_[i];
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (a[j].is_zero() != b[j].is_zero()) return false;
      if (a[j].is_zero()) continue;
      const Rational r = b[j] / a[j];
      if (!ratio) {
        ratio = r;
      } else if (*ratio != r) {
        return false;
      }
    }
  }
  return true;
}

TruncatedSeries equation_residual(const MahlerEquation& eq, const TruncatedSeries& coeffs) {
  const std::size_t N = coeffs.order();
  TruncatedSeries acc(N);
  for (std::size_t i = 0; i <= eq.order(); ++i) {
    const std::size_t step = power_or_cap(eq.q(), i, N);
    const TruncatedSeries composed =
        step > N ? TruncatedSeries::from_polynomial(Polynomial::constant(coeffs[0]), N)
                 : compose_power(coeffs, step);
    acc = acc + composed * eq.coefficient(i);
  }
  return acc;
}

std::optional<std::size_t> verify_equation(const MahlerEquation& eq, const TruncatedSeries& coeffs) {
  const TruncatedSeries r = equation_residual(eq, coeffs);
  std::size_t t = 0;
  while (t <= r.order() && r[t].is_zero()) ++t;
  if (t == 0) return std::nullopt;
  return t - 1;
}

std::vector<TruncatedSeries> kernel_family(const TruncatedSeries& coeffs, std::size_t q,
                                           std::size_t max_states) {
  std::vector<TruncatedSeries> states{coeffs};
  std::vector<std::vector<std::size_t>> delta;
  auto agree = [](const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  };
  for (std::size_t s = 0; s < states.size(); ++s) {
    delta.emplace_back(q, 0);
    for (std::size_t d = 0; d < q; ++d) {
      if (states[s].order() < d) return {};
      TruncatedSeries child = decimate(states[s], q, 1, d);
      if (child.order() + 1 < kMinCompareTerms) return {};
      std::size_t target = states.size();
      for (std::size_t k = 0; k < states.size(); ++k) {
        if (agree(states[k], child)) {
          target = k;
          break;
        }
      }
      if (target == states.size()) {
        if (states.size() >= max_states) return {};
        states.push_back(std::move(child));
      }
      delta[s][d] = target;
    }
  }

  // Output values are forced equal along 0-transitions (the first term of
  // O_{1,0}K is the first term of K); classes are the components.
  std::vector<std::size_t> parent(states.size());
  for (std::size_t s = 0; s < parent.size(); ++s) parent[s] = s;
  auto find = [&](std::size_t s) {
    while (parent[s] != s) s = parent[s] = parent[parent[s]];
    return s;
  };
  for (std::size_t s = 0; s < states.size(); ++s) parent[find(s)] = find(delta[s][0]);

  std::vector<std::size_t> class_of(states.size());
  std::vector<std::size_t> roots;
  for (std::size_t s = 0; s < states.size(); ++s) {
    const std::size_t r = find(s);
    auto it = std::find(roots.begin(), roots.end(), r);
    class_of[s] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end()) roots.push_back(r);
  }

  const std::size_t N = coeffs.order();
  std::vector<TruncatedSeries> family(roots.size(), TruncatedSeries(N));
  for (std::size_t n = 0; n <= N; ++n) {
    std::size_t s = 0;
    for (std::size_t m = n; m != 0; m /= q) s = delta[s][m % q];
    family[class_of[s]][n] = Rational(1);
    // The reading must reproduce the series itself.
    if (states[s][0] != coeffs[n]) return {};
  }
  return family;
}

std::optional<MahlerEquation> derive_single_series_equation(const TruncatedSeries& coeffs,
                                                            std::size_t q, std::size_t m_max,
                                                            std::size_t D_max) {
  check_search_bounds(coeffs, q, m_max, D_max);
  auto eq = search({coeffs}, q, m_max, D_max, EquationRoute::SingleSeries);
  if (!eq) return std::nullopt;
  const auto to = verify_equation(*eq, coeffs);
  if (!to || *to != coeffs.order()) throw std::logic_error("derived equation failed verification");
  return with_verification(*eq, *to);
}

std::optional<MahlerEquation> derive_equation(const TruncatedSeries& coeffs, std::size_t q,
                                              std::size_t m_max, std::size_t D_max) {
  check_search_bounds(coeffs, q, m_max, D_max);
  const auto family = kernel_family(coeffs, q);
  if (!family.empty()) {
    if (auto eq = search(family, q, m_max, D_max, EquationRoute::KernelFamily)) {
      const auto to = verify_equation(*eq, coeffs);
      if (to && *to == coeffs.order()) return with_verification(*eq, *to);
    }
  }
  return derive_single_series_equation(coeffs, q, m_max, D_max);
}

std::string equation_to_json(const MahlerEquation& eq) {
  nlohmann::ordered_json j;
  j["q"] = eq.q();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& a : eq.coefficients()) coeffs.push_back(coefficient_strings(a));
  j["coefficients"] = std::move(coeffs);
  j["verified_to"] = eq.verified_to();
  return j.dump();
}

MahlerEquation equation_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(strip_comment_lines(text));
    std::vector<Polynomial> coeffs;
    for (const auto& a : j.at("coefficients")) {
      coeffs.push_back(from_coefficient_strings(a.get<std::vector<std::string>>()));
    }
    const std::size_t verified = j.contains("verified_to") ? j["verified_to"].get<std::size_t>() : 0;
    return MahlerEquation(j.at("q").get<std::size_t>(), std::move(coeffs), verified,
                          EquationRoute::External);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed equation JSON: ") + e.what());
  }
}

std::string to_string(const MahlerEquation& eq) {
  std::string out;
  std::size_t step = 1;
  for (std::size_t i = 0; i <= eq.order(); ++i, step *= eq.q()) {
    const Polynomial& a = eq.coefficient(i);
    if (a.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string arg = step == 1 ? "x" : "x^" + std::to_string(step);
    out += "(" + to_string(a) + ")*F(" + arg + ")";
  }
  return out + " = 0";
}

}  // namespace autoseq
