// autoseq: command-line front end for the infinite-product toolkit.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "autoseq/candidates.hpp"
#include "autoseq/classify.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/equation.hpp"
#include "autoseq/expansion.hpp"
#include "autoseq/kernel.hpp"
#include "autoseq/rationality.hpp"
#include "autoseq/search.hpp"
#include "autoseq/semigroup.hpp"
#include "autoseq/text.hpp"
#include "autoseq/transition.hpp"

using namespace autoseq;
using nlohmann::ordered_json;

namespace {

enum ExitCode : int {
  kPositive = 0,
  kFailure = 1,
  kInputError = 2,
  kOracleMismatch = 3,
  kNegative = 10,
  kInconclusive = 11,
};

constexpr const char* kCapVariable = "AUTOSEQ_CAP";

/// Malformed user input: polynomial text, files, option combinations.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g_invocation;

std::string quote_arg(const std::string& a) {
  if (!a.empty() && a.find_first_of(" \t\"'\\$*()") == std::string::npos) return a;
  std::string out = "'";
  for (char c : a) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string header(const std::string& marker) {
  return marker + " autoseq " + std::string(kVersion) + " | " + g_invocation + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::size_t default_cap() {
  const char* env = std::getenv(kCapVariable);
  if (env == nullptr || *env == '\0') return kDefaultSemigroupCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument("bad");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError(std::string(kCapVariable) + " must be a positive integer");
  }
}

struct PolyInput {
  std::string text;
  std::string file;
  std::size_t q = 2;

  void add_to(CLI::App* app) {
    app->add_option("-p,--poly", text, "polynomial, e.g. \"1+x-x^3-x^4\"");
    app->add_option("--poly-file", file, "file holding the polynomial text");
    app->add_option("-q,--base", q, "base q >= 2")->capture_default_str();
  }

  [[nodiscard]] Polynomial polynomial() const {
    if (text.empty() == file.empty()) throw InputError("give exactly one of --poly or --poly-file");
    std::string src = text;
    if (!file.empty()) {
      std::istringstream lines(strip_comment_lines(read_file(file)));
      src.clear();
      for (std::string line; std::getline(lines, line);) src += line + " ";
    }
    return parse_polynomial(src);
  }
};

std::string join(const TruncatedSeries& c) { return to_string(c); }

// ---------------------------------------------------------------- expand

struct ExpandArgs {
  PolyInput in;
  std::size_t order = 16;
  bool oracle = false;
  bool inverse = false;
  std::string output;
};

int cmd_expand(const ExpandArgs& a) {
  const ProductSpec spec(a.in.polynomial(), a.in.q, a.inverse);
  const TruncatedSeries c = expand_product(spec, a.order);
  if (a.oracle) {
    const TruncatedSeries ref = oracle_truncated_product(spec, a.order);
    for (std::size_t n = 0; n <= a.order; ++n) {
      if (c[n] != ref[n]) {
        std::cerr << "oracle mismatch at n = " << n << ": recurrence " << c[n].to_string()
                  << ", oracle " << ref[n].to_string() << "\n";
        return kOracleMismatch;
      }
    }
    std::cerr << "oracle agrees through x^" << a.order << "\n";
  }
  std::cout << join(c) << "\n";
  if (!a.output.empty()) write_file(a.output, header("#") + join(c) + "\n");
  return kPositive;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  PolyInput in;
  std::optional<std::size_t> cap;
  std::size_t check_order = kDefaultCheckOrder;
  std::size_t evidence = kDefaultEvidenceThreshold;
  std::string window = "minimal";
  long time_limit_ms = 0;
  std::string dfao_json;
  std::string dfao_dot;
  std::string verify_dfao;
};

WindowMode window_mode(const std::string& s) {
  if (s == "minimal") return WindowMode::Minimal;
  if (s == "full") return WindowMode::Full;
  throw InputError("window must be 'minimal' or 'full'");
}

int verdict_exit(const ClassificationVerdict& v) {
  if (std::holds_alternative<AutomaticCertified>(v)) return kPositive;
  if (std::holds_alternative<NotAutomaticEvidence>(v)) return kNegative;
  return kInconclusive;
}

int cmd_classify(const ClassifyArgs& a) {
  const ProductSpec spec(a.in.polynomial(), a.in.q);
  ClassifyOptions opt;
  opt.cap = a.cap.value_or(default_cap());
  opt.check_order = a.check_order;
  opt.evidence_threshold = a.evidence;
  opt.window = window_mode(a.window);
  opt.time_limit = std::chrono::milliseconds(a.time_limit_ms);
  const ClassificationResult r = classify(spec, opt);

  std::cout << "verdict: " << verdict_name(r.verdict) << "\n";
  std::cout << "matrices explored: " << r.matrices_explored << "\n";
  if (const auto* cert = std::get_if<AutomaticCertified>(&r.verdict)) {
    std::cout << "semigroup size: " << cert->semigroup_size << "\n";
    std::cout << "DFAO states: " << cert->dfao.state_count() << "\n";
    std::cout << "kernel classes: " << cert->kernel_count << "\n";
    std::cout << "checked against expansion through n = " << opt.check_order << "\n";
    if (!a.dfao_json.empty()) write_file(a.dfao_json, header("#") + dfao_to_json(cert->dfao) + "\n");
    if (!a.dfao_dot.empty()) write_file(a.dfao_dot, header("//") + dfao_to_dot(cert->dfao));
  } else if (const auto* ev = std::get_if<NotAutomaticEvidence>(&r.verdict)) {
    std::cout << "cap " << opt.cap << " exceeded; " << ev->distinct_value_count
              << " distinct values among c_0..c_" << opt.check_order << "\n";
  } else {
    const auto& u = std::get<Undetermined>(r.verdict);
    std::cout << (u.timed_out ? "time limit reached" : "cap exceeded without value-growth evidence")
              << " (cap " << u.cap << ")\n";
  }
  if ((!a.dfao_json.empty() || !a.dfao_dot.empty()) && !r.automatic()) {
    std::cerr << "no DFAO to export: the product was not certified automatic\n";
  }

  if (!a.verify_dfao.empty()) {
    DFAO loaded;
    try {
      loaded = dfao_from_json(read_file(a.verify_dfao));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    if (loaded.q != spec.q()) throw InputError("DFAO file has a different base");
    const TruncatedSeries c = expand_product(spec, opt.check_order);
    for (std::size_t n = 0; n <= opt.check_order; ++n) {
      if (dfao_eval(loaded, n) != c[n]) {
        std::cerr << "DFAO file disagrees with the expansion at n = " << n << "\n";
        return kOracleMismatch;
      }
    }
    if (const auto* cert = std::get_if<AutomaticCertified>(&r.verdict)) {
      for (std::size_t n = 0; n <= opt.check_order; ++n) {
        if (dfao_eval(loaded, n) != dfao_eval(cert->dfao, n)) {
          std::cerr << "DFAO file disagrees with the extracted DFAO at n = " << n << "\n";
          return kOracleMismatch;
        }
      }
    }
    std::cout << "DFAO file verified through n = " << opt.check_order << "\n";
  }
  return verdict_exit(r.verdict);
}

// ---------------------------------------------------------------- kernel

struct KernelArgs {
  PolyInput in;
  std::optional<std::size_t> cap;
  std::string window = "minimal";
  std::size_t explicit_window = 0;
  std::size_t levels = kDefaultKernelLevels;
  bool matrices = false;
  std::string json;
};

int cmd_kernel(const KernelArgs& a) {
  const ProductSpec spec(a.in.polynomial(), a.in.q);
  const TransitionSystem ts = a.explicit_window > 0
                                  ? build_transition_system(spec, a.explicit_window)
                                  : build_transition_system(spec, window_mode(a.window));
  std::cout << "window: " << ts.dimension() << "\n";
  if (a.matrices) {
    for (std::size_t r = 0; r < ts.matrices.size(); ++r) {
      std::cout << "Gamma_" << r << " =\n" << to_string(ts.matrices[r]) << "\n";
    }
  }
  const std::size_t cap = a.cap.value_or(default_cap());
  const SemigroupClosure closure = semigroup_closure(ts, cap);
  ordered_json j;
  j["q"] = spec.q();
  j["poly"] = to_string(spec.p());
  j["window"] = ts.dimension();
  if (!closure.finite()) {
    std::cout << "semigroup closure exceeded cap " << cap << "; kernel not computed\n";
    j["semigroup"] = "cap exceeded";
    if (!a.json.empty()) write_file(a.json, header("#") + j.dump(2) + "\n");
    return kInconclusive;
  }
  const DFAO dfao = extract_dfao(ts, closure);
  const KernelDescription k = compute_kernel(ts, closure, a.levels);
  std::cout << "semigroup size: " << closure.size() << "\n";
  std::cout << "DFAO states: " << dfao.state_count() << "\n";
  std::cout << "kernel classes: " << k.class_count << " (levels explored: " << k.levels << ")\n";
  std::cout << "representatives (l, b) for n -> c_{q^l n + b}:";
  for (const auto& [l, b] : k.representatives) std::cout << " (" << l << "," << b << ")";
  std::cout << "\n";
  j["semigroup_size"] = closure.size();
  j["dfao_states"] = dfao.state_count();
  j["kernel_classes"] = k.class_count;
  j["levels"] = k.levels;
  auto reps = ordered_json::array();
  for (const auto& [l, b] : k.representatives) reps.push_back({l, b});
  j["representatives"] = std::move(reps);
  auto table = ordered_json::array();
  for (const auto& [pair, cls] : k.pairing_table) table.push_back({pair.first, pair.second, cls});
  j["pairing_table"] = std::move(table);
  j["dfao"] = ordered_json::parse(dfao_to_json(dfao));
  if (!a.json.empty()) write_file(a.json, header("#") + j.dump(2) + "\n");
  return kPositive;
}

// ---------------------------------------------------------------- equation

struct EquationArgs {
  PolyInput in;
  std::size_t order = 2048;
  std::size_t m_max = 2;
  std::size_t deg_max = 4;
  bool inverse = false;
  bool single_series = false;
  std::string json;
};

int cmd_equation(const EquationArgs& a) {
  const ProductSpec spec(a.in.polynomial(), a.in.q, a.inverse);
  const TruncatedSeries c = expand_product(spec, a.order);
  const auto eq = a.single_series ? derive_single_series_equation(c, spec.q(), a.m_max, a.deg_max)
                                  : derive_equation(c, spec.q(), a.m_max, a.deg_max);
  if (!eq) {
    std::cout << "no equation with order <= " << a.m_max << " and degree <= " << a.deg_max << "\n";
    return kInconclusive;
  }
  std::cout << to_string(*eq) << "\n";
  std::cout << "verified through x^" << eq->verified_to() << "\n";
  if (!a.json.empty()) write_file(a.json, header("#") + equation_to_json(*eq) + "\n");
  return kPositive;
}

// ---------------------------------------------------------------- candidates

struct CandidatesArgs {
  std::string equation_file;
  PolyInput in;
  std::size_t order = 2048;
  std::size_t m_max = 2;
  std::size_t deg_max = 4;
  std::size_t trial_budget = FactorOptions{}.trial_budget;
};

int cmd_candidates(const CandidatesArgs& a) {
  std::optional<MahlerEquation> eq;
  if (!a.equation_file.empty()) {
    try {
      eq = equation_from_json(read_file(a.equation_file));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else {
    const ProductSpec spec(a.in.polynomial(), a.in.q);
    eq = derive_equation(expand_product(spec, a.order), spec.q(), a.m_max, a.deg_max);
    if (!eq) {
      std::cout << "no equation found within the bounds\n";
      return kInconclusive;
    }
  }
  if (eq->order() < 1 || eq->coefficient(eq->order()).is_zero()) {
    throw InputError("candidate enumeration needs order >= 1 and a_m != 0");
  }
  std::cout << "equation: " << to_string(*eq) << "\n";
  const CandidateSet set = candidates_from_equation(*eq, FactorOptions{a.trial_budget});
  std::cout << "candidates (" << set.candidates.size() << (set.complete ? "" : ", lower bound only")
            << "):\n";
  for (const auto& g : set.candidates) std::cout << "  " << to_string(g) << "\n";
  return set.complete ? kPositive : kInconclusive;
}

// ---------------------------------------------------------------- rational

int cmd_rational(const PolyInput& in) {
  const Polynomial p = in.polynomial();
  const RationalityResult r = rationality_test(p, in.q);
  if (r.rational()) {
    std::cout << "Rational, Q = " << to_string(*r.Q) << "\n";
    std::cout << "closure certificate (n -> n/gcd(n,q)):";
    for (const auto& [n, m] : *r.closure_certificate) std::cout << " " << n << "->" << m;
    std::cout << "\n";
    return kPositive;
  }
  std::cout << "NotRational";
  if (r.witness) std::cout << ", witness index " << *r.witness;
  std::cout << " (" << r.reason << ")\n";
  return kNegative;
}

// ---------------------------------------------------------------- inverse-check

struct InverseArgs {
  PolyInput in;
  CofactorBounds bounds;
  bool override_precondition = false;
};

int cmd_inverse_check(const InverseArgs& a) {
  const Polynomial p = a.in.polynomial();
  const InverseRegularityReport rep = inverse_regularity_necessary(p, a.in.q);
  std::cout << "cyclotomic indices:";
  for (const auto& [n, m] : rep.cyclotomic_indices) {
    std::cout << " " << n << (m > 1 ? "^" + std::to_string(m) : "");
  }
  std::cout << "\n";
  std::cout << "all roots roots of unity: " << (rep.all_roots_roots_of_unity ? "yes" : "no") << "\n";
  std::cout << "all orders multiple of " << a.in.q << ": "
            << (rep.all_orders_multiple_of_q ? "yes" : "no");
  if (!rep.bad_orders.empty()) {
    std::cout << " (fails for order";
    for (std::size_t n : rep.bad_orders) std::cout << " " << n;
    std::cout << ")";
  }
  std::cout << "\n";
  std::cout << "modulus-one condition (exact surrogate): "
            << (rep.modulus_one_necessary ? "yes" : "no") << "\n";
  if (!rep.passes()) {
    std::cout << "product of 1/p(x^{q^s}) is not q-regular\n";
    if (!a.override_precondition) return kNegative;
  }
  const auto co = find_cofactor(p, a.in.q, a.bounds, a.override_precondition);
  if (!co) {
    std::cout << "no cofactor Q within max-index " << a.bounds.max_index << ", max-mult "
              << a.bounds.max_mult << "\n";
    return rep.passes() ? kInconclusive : kNegative;
  }
  std::cout << "Q = " << to_string(co->Q) << "\n";
  std::cout << "R = " << to_string(co->R) << "\n";
  return kPositive;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  SearchConfig config;
  std::optional<std::size_t> cap;
  long time_limit_ms = 0;
  std::string output;
  std::string csv;
  bool resume = false;
};

std::vector<CandidateRecord> load_records(const std::string& path) {
  std::vector<CandidateRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) break;  // a torn final line from an interrupted run
    if (!j.is_object() || j.contains("header") || j.contains("summary")) continue;
    try {
      out.push_back(record_from_json(line));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

std::string header_record() {
  ordered_json h;
  h["header"] = true;
  h["tool"] = "autoseq";
  h["version"] = std::string(kVersion);
  h["invocation"] = g_invocation;
  return h.dump() + "\n";
}

int cmd_search(SearchArgs& a) {
  SearchConfig& cfg = a.config;
  cfg.semigroup_cap = a.cap.value_or(default_cap());
  cfg.time_limit = std::chrono::milliseconds(a.time_limit_ms);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::size_t size = enumeration_size(cfg);
  std::cout << "enumeration space: " << size << " polynomials\n" << std::flush;

  std::vector<CandidateRecord> resumed;
  if (a.resume) {
    if (a.output.empty()) throw InputError("--resume needs --output");
    resumed = load_records(a.output);
    std::cout << "resuming with " << resumed.size() << " finished records\n";
  }
  std::optional<std::ofstream> out;
  if (!a.output.empty()) {
    out.emplace(a.output, std::ios::binary | std::ios::trunc);
    if (!*out) throw std::runtime_error("cannot write " + a.output);
    *out << header_record();
    for (const auto& r : resumed) *out << record_to_json(r) << "\n";
    out->flush();
  }
  const SearchReport report = run_search(cfg, [&](const CandidateRecord& r) {
    if (out) {
      *out << record_to_json(r) << "\n";
      out->flush();
    }
  }, resumed);
  if (out) *out << summary_to_json(report) << "\n";

  const auto& c = report.counts;
  std::cout << "AutomaticCertified: " << c.automatic << "\n"
            << "NotAutomaticEvidence: " << c.not_automatic << "\n"
            << "Undetermined: " << c.undetermined << "\n"
            << "Pruned: " << c.pruned << "\n"
            << "Rational (also counted above): " << c.rational << "\n"
            << "matrices explored: " << report.matrices_explored << "\n"
            << "wall time: " << report.wall_seconds << " s\n";
  for (const auto& r : report.records) {
    if (!r.automatic()) continue;
    std::cout << "  automatic #" << r.index << " " << to_string(r.poly) << ": "
              << r.dfao_states.value_or(0) << " states, semigroup " << r.semigroup_size.value_or(0)
              << (r.rational_Q ? ", rational Q = " + to_string(*r.rational_Q) : "") << "\n";
  }
  if (!a.csv.empty()) {
    std::string csv = header("#") + "index,poly,verdict,semigroup_size,dfao_states,rational_Q\n";
    for (const auto& r : report.records) {
      csv += std::to_string(r.index) + ",\"" + to_string(r.poly) + "\"," + r.verdict + "," +
             (r.semigroup_size ? std::to_string(*r.semigroup_size) : "") + "," +
             (r.dfao_states ? std::to_string(*r.dfao_states) : "") + "," +
             (r.rational_Q ? to_string(*r.rational_Q) : "") + "\n";
    }
    write_file(a.csv, csv);
  }
  if (c.integrality_violations > 0) {
    std::cout << "integrality violations: " << c.integrality_violations << "\n";
    return kNegative;
  }
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) g_invocation += (i ? " " : "") + quote_arg(i ? argv[i] : "autoseq");

  CLI::App app{"Exact tools for infinite products prod p(x^{q^s}) and their automaticity"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  ExpandArgs expand;
  auto* sub = app.add_subcommand("expand", "exact coefficients of the product (or its inverse)");
  expand.in.add_to(sub);
  sub->add_option("-n,--order", expand.order, "last coefficient index")->capture_default_str();
  sub->add_flag("--oracle", expand.oracle, "cross-check against direct factor multiplication");
  sub->add_flag("--inverse", expand.inverse, "expand prod 1/p(x^{q^s})");
  sub->add_option("-o,--output", expand.output, "also write the coefficients to a file");

  ClassifyArgs cls;
  auto* csub = app.add_subcommand("classify", "decide automaticity via the semigroup closure");
  cls.in.add_to(csub);
  csub->add_option("--cap", cls.cap, std::string("semigroup cap (default $") + kCapVariable + " or 100000)");
  csub->add_option("--check-order", cls.check_order, "DFAO agreement range")->capture_default_str();
  csub->add_option("--evidence-threshold", cls.evidence, "distinct values needed for evidence")
      ->capture_default_str();
  csub->add_option("--window", cls.window, "minimal or full")->capture_default_str();
  csub->add_option("--time-limit-ms", cls.time_limit_ms, "soft wall-clock limit, 0 = none");
  csub->add_option("--dfao-json", cls.dfao_json, "write the DFAO as JSON");
  csub->add_option("--dfao-dot", cls.dfao_dot, "write the DFAO as Graphviz DOT");
  csub->add_option("--verify-dfao", cls.verify_dfao, "reload a DFAO JSON file and re-check it");

  KernelArgs ker;
  auto* ksub = app.add_subcommand("kernel", "inspect transition matrices, DFAO and q-kernel");
  ker.in.add_to(ksub);
  ksub->add_option("--cap", ker.cap, "semigroup cap");
  ksub->add_option("--window", ker.window, "minimal or full")->capture_default_str();
  ksub->add_option("--window-size", ker.explicit_window, "explicit window size (>= minimal)");
  ksub->add_option("--levels", ker.levels, "deepest kernel level")->capture_default_str();
  ksub->add_flag("--matrices", ker.matrices, "print the transition matrices");
  ksub->add_option("--json", ker.json, "write the kernel description as JSON");

  EquationArgs eqa;
  auto* esub = app.add_subcommand("equation", "derive a Mahler functional equation");
  eqa.in.add_to(esub);
  esub->add_option("-n,--order", eqa.order, "series order used")->capture_default_str();
  esub->add_option("--m-max", eqa.m_max, "largest equation order")->capture_default_str();
  esub->add_option("--deg-max", eqa.deg_max, "largest coefficient degree")->capture_default_str();
  esub->add_flag("--inverse", eqa.inverse, "use prod 1/p(x^{q^s})");
  esub->add_flag("--single-series", eqa.single_series, "annihilate the series alone");
  esub->add_option("--json", eqa.json, "write the equation as JSON");

  CandidatesArgs cand;
  auto* dsub = app.add_subcommand("candidates", "polynomials p with p(x^{q^{m-1}}) | a_m");
  dsub->add_option("-e,--equation", cand.equation_file, "equation JSON file");
  cand.in.add_to(dsub);
  dsub->add_option("-n,--order", cand.order, "series order when deriving")->capture_default_str();
  dsub->add_option("--m-max", cand.m_max, "largest equation order")->capture_default_str();
  dsub->add_option("--deg-max", cand.deg_max, "largest coefficient degree")->capture_default_str();
  dsub->add_option("--trial-budget", cand.trial_budget, "trial-division budget per degree")
      ->capture_default_str();

  PolyInput rat;
  auto* rsub = app.add_subcommand("rational", "is the product 1/Q for a polynomial Q?");
  rat.add_to(rsub);

  InverseArgs inv;
  auto* isub = app.add_subcommand("inverse-check", "root conditions and cofactor for prod 1/p");
  inv.in.add_to(isub);
  isub->add_option("--max-index", inv.bounds.max_index, "largest cyclotomic index")->capture_default_str();
  isub->add_option("--max-mult", inv.bounds.max_mult, "largest multiplicity")->capture_default_str();
  isub->add_flag("--override", inv.override_precondition, "search even when root conditions fail");

  SearchArgs sea;
  auto* ssub = app.add_subcommand("search", "classify every polynomial of a bounded space");
  ssub->add_option("-d,--degree", sea.config.degree, "exact degree")->required();
  ssub->add_option("-q,--base", sea.config.q, "base q >= 2")->capture_default_str();
  ssub->add_option("-B,--bound", sea.config.coeff_bound, "coefficient bound")->capture_default_str();
  ssub->add_option("--cap", sea.cap, "semigroup cap per candidate");
  ssub->add_option("--check-order", sea.config.check_order, "DFAO agreement range")->capture_default_str();
  ssub->add_flag("--include-rationals", sea.config.include_rationals, "use a rational coefficient grid");
  ssub->add_option("--grid-denominator", sea.config.grid_denominator, "grid spacing 1/den")
      ->capture_default_str();
  ssub->add_flag("--verify-integrality", sea.config.verify_integrality,
                 "classify pruned grid points too");
  ssub->add_option("--time-limit-ms", sea.time_limit_ms, "per-candidate soft limit, 0 = none");
  ssub->add_option("--workers", sea.config.workers, "worker threads")->capture_default_str();
  ssub->add_option("-o,--output", sea.output, "JSON-lines report");
  ssub->add_flag("--resume", sea.resume, "keep finished records of an existing report");
  ssub->add_option("--csv", sea.csv, "CSV summary export");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*sub) return cmd_expand(expand);
    if (*csub) return cmd_classify(cls);
    if (*ksub) return cmd_kernel(ker);
    if (*esub) return cmd_equation(eqa);
    if (*dsub) return cmd_candidates(cand);
    if (*rsub) return cmd_rational(rat);
    if (*isub) return cmd_inverse_check(inv);
    if (*ssub) return cmd_search(sea);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}
