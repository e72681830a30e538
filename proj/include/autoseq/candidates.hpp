#ifndef AUTOSEQ_CANDIDATES_HPP
#define AUTOSEQ_CANDIDATES_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "autoseq/equation.hpp"
#include "autoseq/polynomial.hpp"

namespace autoseq {

/// Integer factors of a polynomial with positive leading coefficients, up to
/// a rational unit and powers of x. When `complete` is false the search
/// budget ran out and the last factors may be reducible.
struct FactorBase {
  std::vector<std::pair<Polynomial, unsigned>> factors;
  unsigned x_power = 0;
  bool complete = true;
};

struct FactorOptions {
  std::size_t trial_budget = 200000;  // polynomials tried per degree
};

/// Cyclotomic factors, rational roots, then bounded trial division of what
/// remains (coefficients within the Mignotte bound).
FactorBase factor_base(const Polynomial& p, const FactorOptions& options = {});

struct CandidateSet {
  std::vector<Polynomial> candidates;  // degree, then ascending coefficients
  bool complete = true;                // false: lower bound only
};

/// Every g with g(0) = 1 and g(x^{q^{m-1}}) dividing a_m. Requires order >= 1
/// and a_m != 0.
CandidateSet candidates_from_equation(const MahlerEquation& eq, const FactorOptions& options = {});

}  // namespace autoseq

#endif  // AUTOSEQ_CANDIDATES_HPP
