#ifndef AUTOSEQ_DFAO_HPP
#define AUTOSEQ_DFAO_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "autoseq/matrix.hpp"
#include "autoseq/semigroup.hpp"
#include "autoseq/transition.hpp"

namespace autoseq {

/// Deterministic finite automaton with output reading base-q digits most
/// significant first. Extracted automata keep the window vector behind each
/// state; automata loaded from JSON have an empty `vectors` list.
struct DFAO {
  std::size_t q = 2;
  std::size_t initial = 0;
  std::vector<std::vector<std::size_t>> transitions;  // [state][digit]
  std::vector<Rational> outputs;
  std::vector<Vector> vectors;

  [[nodiscard]] std::size_t state_count() const { return outputs.size(); }
};

/// Orbit of the initial vector under v -> G_d v. Requires a finite closure.
DFAO extract_dfao(const TransitionSystem& ts, const SemigroupClosure& closure);

/// Output after reading the base-q digits of n (MSD first); n = 0 reads the
/// empty word.
Rational dfao_eval(const DFAO& dfao, std::uint64_t n);
/// Output after reading the given digits, most significant first.
Rational dfao_eval_digits(const DFAO& dfao, std::span<const std::size_t> digits);

/// {"q", "initial", "states":[{"output"}], "transitions"} with outputs as
/// exact strings.
std::string dfao_to_json(const DFAO& dfao);
/// Inverse of dfao_to_json; lines starting with '#' before the object are
/// skipped. Throws std::invalid_argument on malformed input.
DFAO dfao_from_json(const std::string& text);

/// Graphviz rendering: nodes "s<i>/<output>", one edge per (state, digit).
std::string dfao_to_dot(const DFAO& dfao, const std::string& name = "dfao");

}  // namespace autoseq

#endif  // AUTOSEQ_DFAO_HPP
