#ifndef AUTOSEQ_EQUATION_HPP
#define AUTOSEQ_EQUATION_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "autoseq/polynomial.hpp"
#include "autoseq/series.hpp"

namespace autoseq {

/// How derive_equation obtained its equation.
enum class EquationRoute {
  /// Common annihilator of every sequence sharing the detected kernel
  /// relations (independent of the output values).
  KernelFamily,
  /// Annihilator of the given series alone.
  SingleSeries,
  /// Supplied by the caller (file, literal).
  External,
};

/// sum_{i=0}^{m} a_i(x) F(x^{q^i}) = 0, checked through x^{verified_to}.
class MahlerEquation {
 public:
  /// Throws std::invalid_argument when a_0 and a_m are both zero.
  MahlerEquation(std::size_t q, std::vector<Polynomial> coefficients, std::size_t verified_to = 0,
                 EquationRoute route = EquationRoute::External);

  [[nodiscard]] std::size_t q() const { return q_; }
  [[nodiscard]] std::size_t order() const { return coefficients_.size() - 1; }
  [[nodiscard]] const std::vector<Polynomial>& coefficients() const { return coefficients_; }
  [[nodiscard]] const Polynomial& coefficient(std::size_t i) const { return coefficients_.at(i); }
  [[nodiscard]] std::size_t verified_to() const { return verified_to_; }
  [[nodiscard]] EquationRoute route() const { return route_; }

  /// True if the two equations are proportional.
  [[nodiscard]] bool same_span(const MahlerEquation& other) const;

 private:
  std::size_t q_;
  std::vector<Polynomial> coefficients_;
  std::size_t verified_to_;
  EquationRoute route_;
};

/// Coefficients r_0..r_N of sum_i a_i(x) F(x^{q^i}) for F known to order N.
TruncatedSeries equation_residual(const MahlerEquation& eq, const TruncatedSeries& coeffs);

/// Largest T' <= order with a residual vanishing through x^{T'}; empty when
/// the constant term already fails.
std::optional<std::size_t> verify_equation(const MahlerEquation& eq, const TruncatedSeries& coeffs);

/// Searches orders m = 1..m_max, then degrees D = 0..D_max, for a nonzero
/// annihilator with a_m != 0. Coefficients come back as coprime integers
/// with a positive first nonzero entry. Requires
/// coeffs.order >= 2 (m_max + 1)(D_max + 1).
std::optional<MahlerEquation> derive_equation(const TruncatedSeries& coeffs, std::size_t q,
                                              std::size_t m_max, std::size_t D_max);

/// The same search restricted to annihilating one series; exposed for
/// comparison with the kernel-family route.
std::optional<MahlerEquation> derive_single_series_equation(const TruncatedSeries& coeffs,
                                                            std::size_t q, std::size_t m_max,
                                                            std::size_t D_max);

/// Basis of the sequences sharing the kernel relations of `coeffs`, detected
/// from the prefix; empty when the prefix is too short to resolve them or
/// the kernel exceeds max_states.
std::vector<TruncatedSeries> kernel_family(const TruncatedSeries& coeffs, std::size_t q,
                                           std::size_t max_states = 64);

/// {"q": int, "coefficients": [[exact strings, ascending degree], ...]}
std::string equation_to_json(const MahlerEquation& eq);
MahlerEquation equation_from_json(const std::string& text);

/// "a_0(x)*F(x) + a_1(x)*F(x^2) + ... = 0"
std::string to_string(const MahlerEquation& eq);

}  // namespace autoseq

#endif  // AUTOSEQ_EQUATION_HPP
