#include "autoseq/dfao.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "autoseq/text.hpp"

namespace autoseq {

DFAO extract_dfao(const TransitionSystem& ts, const SemigroupClosure& closure) {
  if (!closure.finite()) {
    throw std::invalid_argument("DFAO extraction needs a finite semigroup closure");
  }
  DFAO dfao;
  dfao.q = ts.q;
  dfao.initial = 0;
  std::unordered_multimap<std::size_t, std::size_t> seen;
  auto intern = [&](Vector v) -> std::size_t {
    const std::size_t h = hash_dense(v);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (exactly_equal(dfao.vectors[it->second], v)) return it->second;
    }
    const std::size_t id = dfao.vectors.size();
    if (id > closure.size()) throw std::logic_error("orbit larger than the semigroup");
    seen.emplace(h, id);
    dfao.outputs.push_back(v(0));
    dfao.vectors.push_back(std::move(v));
    dfao.transitions.emplace_back(ts.q, 0);
    return id;
  };
  intern(ts.initial);
  for (std::size_t s = 0; s < dfao.vectors.size(); ++s) {
    for (std::size_t d = 0; d < ts.q; ++d) {
      Vector image = ts.matrices[d] * dfao.vectors[s];
      const std::size_t t = intern(std::move(image));
      dfao.transitions[s][d] = t;
    }
  }
  return dfao;
}

Rational dfao_eval_digits(const DFAO& dfao, std::span<const std::size_t> digits) {
  std::size_t state = dfao.initial;
  for (std::size_t d : digits) {
    if (d >= dfao.q) throw std::invalid_argument("digit out of range");
    state = dfao.transitions[state][d];
  }
  return dfao.outputs[state];
}

Rational dfao_eval(const DFAO& dfao, std::uint64_t n) {
  std::vector<std::size_t> digits;
  while (n != 0) {
    digits.push_back(static_cast<std::size_t>(n % dfao.q));
    n /= dfao.q;
  }
  std::reverse(digits.begin(), digits.end());
  return dfao_eval_digits(dfao, digits);
}

std::string dfao_to_json(const DFAO& dfao) {
  nlohmann::ordered_json j;
  j["q"] = dfao.q;
  j["initial"] = dfao.initial;
  auto states = nlohmann::ordered_json::array();
  for (const auto& out : dfao.outputs) states.push_back({{"output", out.to_string()}});
  j["states"] = std::move(states);
  j["transitions"] = dfao.transitions;
  return j.dump();
}

DFAO dfao_from_json(const std::string& text) {
  DFAO dfao;
  try {
    const auto j = nlohmann::json::parse(strip_comment_lines(text));
    dfao.q = j.at("q").get<std::size_t>();
    dfao.initial = j.at("initial").get<std::size_t>();
    for (const auto& s : j.at("states")) {
      dfao.outputs.push_back(Rational::parse(s.at("output").get<std::string>()));
    }
    dfao.transitions = j.at("transitions").get<std::vector<std::vector<std::size_t>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed DFAO JSON: ") + e.what());
  }
  if (dfao.q < 2) throw std::invalid_argument("DFAO base must be >= 2");
  if (dfao.transitions.size() != dfao.outputs.size() || dfao.initial >= dfao.outputs.size()) {
    throw std::invalid_argument("DFAO state tables are inconsistent");
  }
  for (const auto& row : dfao.transitions) {
    if (row.size() != dfao.q) throw std::invalid_argument("DFAO transition row has wrong arity");
    for (std::size_t t : row) {
      if (t >= dfao.outputs.size()) throw std::invalid_argument("DFAO transition target out of range");
    }
  }
  return dfao;
}

std::string dfao_to_dot(const DFAO& dfao, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  start [shape=point];\n";
  for (std::size_t s = 0; s < dfao.state_count(); ++s) {
    os << "  s" << s << " [label=\"s" << s << '/' << dfao.outputs[s].to_string() << "\"];\n";
  }
  os << "  start -> s" << dfao.initial << ";\n";
  for (std::size_t s = 0; s < dfao.state_count(); ++s) {
    for (std::size_t d = 0; d < dfao.q; ++d) {
      os << "  s" << s << " -> s" << dfao.transitions[s][d] << " [label=\"" << d << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace autoseq
