// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "autoseq/classify.hpp"
#include "autoseq/cyclotomic.hpp"
#include "autoseq/dfao.hpp"
#include "autoseq/equation.hpp"
#include "autoseq/expansion.hpp"
#include "autoseq/rationality.hpp"
#include "autoseq/search.hpp"
#include "autoseq/transition.hpp"
#include "oracles.hpp"

using namespace autoseq;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

Matrix M(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto row : rows) r.emplace_back(row.begin(), row.end());
  return matrix_from_rows(r);
}

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

void c1_full_matrices(Outcome& out) {
  const auto ts = build_transition_system(ProductSpec(P("1+x+x^2+x^3+x^4"), 2), WindowMode::Full);
  const Matrix even = M({{1, 1, 1, 0, 0, 0, 0, 0, 0},
                         {0, 1, 1, 0, 0, 0, 0, 0, 0},
                         {0, 1, 1, 1, 0, 0, 0, 0, 0},
                         {0, 0, 1, 1, 0, 0, 0, 0, 0},
                         {0, 0, 1, 1, 1, 0, 0, 0, 0},
                         {0, 0, 0, 1, 1, 0, 0, 0, 0},
                         {0, 0, 0, 1, 1, 1, 0, 0, 0},
                         {0, 0, 0, 0, 1, 1, 0, 0, 0},
                         {0, 0, 0, 0, 1, 1, 1, 0, 0}});
  const Matrix odd = M({{1, 1, 0, 0, 0, 0, 0, 0, 0},
                        {1, 1, 1, 0, 0, 0, 0, 0, 0},
                        {0, 1, 1, 0, 0, 0, 0, 0, 0},
                        {0, 1, 1, 1, 0, 0, 0, 0, 0},
                        {0, 0, 1, 1, 0, 0, 0, 0, 0},
                        {0, 0, 1, 1, 1, 0, 0, 0, 0},
                        {0, 0, 0, 1, 1, 0, 0, 0, 0},
                        {0, 0, 0, 1, 1, 1, 0, 0, 0},
                        {0, 0, 0, 0, 1, 1, 0, 0, 0}});
  out.require(ts.dimension() == 9, "window is not 9");
  out.require(exactly_equal(ts.matrices[0], even), "even-digit matrix differs");
  out.require(exactly_equal(ts.matrices[1], odd), "odd-digit matrix differs");
}

void c2_f1_matrices(Outcome& out) {
  const auto ts = build_transition_system(ProductSpec(P("1+x-x^3-x^4"), 2), WindowMode::Minimal);
  const Matrix& g0 = ts.matrices[0];
  const Matrix& g1 = ts.matrices[1];
  out.require(exactly_equal(g0, M({{1, 0, -1, 0}, {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}})),
              "Gamma_0 differs");
  out.require(exactly_equal(g1, M({{1, -1, 0, 0}, {1, 0, -1, 0}, {0, 1, -1, 0}, {0, 1, 0, -1}})),
              "Gamma_1 differs");
  const Matrix g00 = M({{1, -1, -1, 1}, {0, 0, -1, 1}, {0, 1, -2, 1}, {0, 1, -1, 0}});
  const Matrix g10 = M({{1, -1, 0, 0}, {1, -1, -1, 1}, {0, 0, -1, 1}, {0, 1, -2, 1}});
  const Matrix g01 = M({{1, -2, 1, 0}, {1, -1, 0, 0}, {1, -1, -1, 1}, {0, 0, -1, 1}});
  const Matrix g11 = M({{0, -1, 1, 0}, {1, -2, 1, 0}, {1, -1, 0, 0}, {1, -1, -1, 1}});
  out.require(exactly_equal(Matrix(g0 * g0), g00), "Gamma_0^2 differs");
  out.require(exactly_equal(Matrix(g1 * g0), g10), "Gamma_1 Gamma_0 differs");
  out.require(exactly_equal(Matrix(g0 * g1), g01), "Gamma_0 Gamma_1 differs");
  out.require(exactly_equal(Matrix(g1 * g1), g11), "Gamma_1^2 differs");

  // Which product list equals the F_2 blocks: the literal list ends in
  // Gamma_0^2, the corrected one in Gamma_1^2.
  const auto f2 = build_transition_system(ProductSpec(P("(x^2+x+1)*(x^6-1)*(x^4-1)"), 4), std::size_t{5});
  const std::vector<Matrix> literal{g0 * g0, g1 * g0, g0 * g1, g0 * g0};
  const std::vector<Matrix> corrected{g0 * g0, g1 * g0, g0 * g1, g1 * g1};
  bool literal_ok = true;
  bool corrected_ok = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const Matrix a = f2.matrices[i].topLeftCorner(4, 4);
    literal_ok = literal_ok && exactly_equal(a, literal[i]);
    corrected_ok = corrected_ok && exactly_equal(a, corrected[i]);
  }
  out.require(corrected_ok && !literal_ok, "product list does not resolve to Gamma_1^2 last");
}

void c3_known_expansions(Outcome& out) {
  const std::size_t N = 1024;
  const ProductSpec ones(P("1+x"), 2);
  const ProductSpec tm(P("1-x"), 2);
  const auto a = expand_product(ones, N);
  const auto a2 = oracle_truncated_product(ones, N);
  const auto b = expand_product(tm, N);
  const auto b2 = oracle_truncated_product(tm, N);
  for (std::size_t n = 0; n <= N; ++n) {
    out.require(a[n] == Rational(1) && a2[n] == Rational(1), "all-ones expansion fails at " + std::to_string(n));
    const Rational t(oracle::thue_morse(n));
    out.require(b[n] == t && b2[n] == t, "Thue-Morse expansion fails at " + std::to_string(n));
  }
}

void c4_thue_morse_equation(Outcome& out) {
  const auto tm = expand_product(ProductSpec(P("1-x"), 2), 2048);
  const auto eq = derive_equation(tm, 2, 2, 4);
  out.require(eq.has_value(), "no equation found");
  if (!eq) return;
  out.require(eq->same_span(MahlerEquation(2, {P("-x"), P("1+x"), P("x^4-1")})),
              "equation is not a multiple of (-x, 1+x, x^4-1): " + to_string(*eq));
  out.require(verify_equation(*eq, tm) == std::optional<std::size_t>(2048), "does not verify to 2048");
}

void c5_periodic_independence(Outcome& out) {
  auto periodic = [](long a, long b) {
    TruncatedSeries s(1024);
    for (std::size_t n = 0; n <= 1024; ++n) s[n] = Rational(n % 2 ? b : a);
    return s;
  };
  const auto eq = derive_equation(periodic(3, 5), 2, 2, 8);
  out.require(eq.has_value(), "no equation found");
  if (!eq) return;
  out.require(verify_equation(*eq, periodic(3, 5)) == std::optional<std::size_t>(1024),
              "does not annihilate (3,5)");
  out.require(verify_equation(*eq, periodic(1, 7)) == std::optional<std::size_t>(1024),
              "does not annihilate (1,7)");
}

void c6_f1_formula(Outcome& out) {
  const auto r = classify(ProductSpec(P("1+x-x^3-x^4"), 2));
  out.require(r.automatic(), "verdict is " + verdict_name(r.verdict));
  if (!r.automatic()) return;
  const DFAO& d = std::get<AutomaticCertified>(r.verdict).dfao;
  for (std::uint64_t n = 0; n < 4096; ++n) {
    out.require(dfao_eval(d, n) == Rational(oracle::f1_partial_sum(n)),
                "DFAO differs from the partial sum at " + std::to_string(n));
  }
}

void c7_product_identities(Outcome& out) {
  const std::size_t N = 512;
  const std::vector<std::pair<const char*, const char*>> cases{
      {"(x^2+x+1)*(x^6-1)*(x^4-1)", "1-x^3-x^6+x^9"}, {"(x^2+x+1)*(x^6+1)*(1-x^4)", "1-x^3+x^6-x^9"}};
  for (const auto& [p, rhs] : cases) {
    const auto f = expand_product(ProductSpec(P(p), 4), N) * P("1-x");
    const auto g = expand_product(ProductSpec(P(rhs), 4), N);
    const auto g2 = oracle_truncated_product(ProductSpec(P(rhs), 4), N);
    for (std::size_t n = 0; n <= N; ++n) {
      out.require(f[n] == g[n] && g[n] == g2[n], std::string("identity fails for ") + p + " at " +
                                                      std::to_string(n));
    }
  }
}

void c8_block_structure(Outcome& out) {
  const std::vector<Matrix> alpha{
      M({{1, -1, -1, 1, 0}, {0, 0, -1, 1, 0}, {0, 1, -2, 1, 0}, {0, 1, -1, 0, 0}, {0, 1, -1, -1, 1}}),
      M({{1, -1, 0, 0, 0}, {1, -1, -1, 1, 0}, {0, 0, -1, 1, 0}, {0, 1, -2, 1, 0}, {0, 1, -1, 0, 0}}),
      M({{1, -2, 1, 0, 0}, {1, -1, 0, 0, 0}, {1, -1, -1, 1, 0}, {0, 0, -1, 1, 0}, {0, 1, -2, 1, 0}}),
      M({{0, -1, 1, 0, 0}, {1, -2, 1, 0, 0}, {1, -1, 0, 0, 0}, {1, -1, -1, 1, 0}, {0, 0, -1, 1, 0}})};
  const std::vector<Matrix> beta{
      M({{1, -1, 1, -1, 0}, {0, 0, 1, -1, 0}, {0, 1, 0, -1, 0}, {0, 1, -1, 0, 0}, {0, 1, -1, 1, -1}}),
      M({{1, -1, 0, 0, 0}, {1, -1, 1, -1, 0}, {0, 0, 1, -1, 0}, {0, 1, 0, -1, 0}, {0, 1, -1, 0, 0}}),
      M({{1, 0, -1, 0, 0}, {1, -1, 0, 0, 0}, {1, -1, 1, -1, 0}, {0, 0, 1, -1, 0}, {0, 1, 0, -1, 0}}),
      M({{0, 1, -1, 0, 0}, {1, 0, -1, 0, 0}, {1, -1, 0, 0, 0}, {1, -1, 1, -1, 0}, {0, 0, 1, -1, 0}})};
  const std::vector<std::pair<const char*, const std::vector<Matrix>*>> cases{
      {"(x^2+x+1)*(x^6-1)*(x^4-1)", &alpha}, {"(x^2+x+1)*(x^6+1)*(1-x^4)", &beta}};
  for (const auto& [p, shown] : cases) {
    const ProductSpec spec(P(p), 4);
    const auto ts = build_transition_system(spec, std::size_t{5});
    const auto c = expand_product(spec, 4 * 512 + 4);
    out.require(first_action_mismatch(ts, c, 512) == -1, std::string("action check fails for ") + p);
    for (std::size_t i = 0; i < 4; ++i) {
      const Matrix& m = ts.matrices[i];
      out.require(m.topRightCorner(4, 1).isZero(), std::string("not block lower triangular: ") + p);
      out.require(exactly_equal(m, (*shown)[i]), std::string("matrix differs from the expected one: ") + p);
      out.require(exactly_equal(Matrix(m.topLeftCorner(4, 4)), Matrix((*shown)[i].topLeftCorner(4, 4))),
                  std::string("top-left block differs: ") + p);
    }
  }
}

void c9_rationality(Outcome& out) {
  const auto a = rationality_test(P("1+x"), 2);
  out.require(a.rational() && a.Q && *a.Q == P("1-x"), "1+x is not Rational with Q = 1-x");
  const auto b = rationality_test(P("1-x"), 2);
  out.require(!b.rational() && b.witness == std::optional<std::size_t>(1),
              "1-x is not NotRational with witness 1");
}

void c10_inverse_conditions(Outcome& out) {
  const auto a = inverse_regularity_necessary(P("1-x^2"), 2);
  out.require(!a.passes() && !a.all_orders_multiple_of_q, "1-x^2 not rejected");
  const auto b = inverse_regularity_necessary(P("1+x^2"), 2);
  out.require(b.passes() && b.cyclotomic_indices == std::map<std::size_t, unsigned>{{4, 1}},
              "1+x^2 not accepted as Phi_4");
  const auto f = find_cofactor(P("1+x^2"), 2);
  out.require(f.has_value() && f->Q == P("1-x^2") && f->R == P("1"), "cofactor is not Q = 1-x^2, R = 1");
}

void c11_search(Outcome& out) {
  SearchConfig cfg;
  cfg.degree = 4;
  cfg.q = 2;
  cfg.coeff_bound = 1;
  cfg.semigroup_cap = 10000;
  cfg.check_order = 2048;
  cfg.workers = 1;
  const auto one = run_search(cfg);
  cfg.workers = 8;
  const auto eight = run_search(cfg);
  out.require(one.counts.total() == one.space_size && one.space_size == 54, "sweep incomplete");
  bool f1 = false;
  bool growth = false;
  for (const auto& r : one.records) {
    if (r.poly == P("1+x-x^3-x^4")) f1 = r.automatic();
    if (r.poly == P("1+x+x^2+x^3+x^4")) growth = r.verdict == "NotAutomaticEvidence";
  }
  out.require(f1, "1+x-x^3-x^4 not certified");
  out.require(growth, "1+x+x^2+x^3+x^4 not in NotAutomaticEvidence");
  out.require(report_to_jsonl(one) == report_to_jsonl(eight), "reports differ between 1 and 8 workers");
  out.detail = std::to_string(one.counts.automatic) + " automatic, " +
               std::to_string(one.counts.not_automatic) + " evidence, " +
               std::to_string(one.counts.undetermined) + " undetermined";
}

void c12_properties(Outcome& out) {
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 1 + rng() % 4;
    const long B = 1 + static_cast<long>(rng() % 2);
    const std::size_t q = 2 + rng() % 2;
    const ProductSpec spec(oracle::random_poly(rng, d, B), q);
    const std::size_t N = 256;
    const auto c = expand_product(spec, N);
    const auto o = oracle_truncated_product(spec, N);
    const auto naive = oracle::naive_product(spec.p(), q, N);
    for (std::size_t n = 0; n <= N; ++n) {
      out.require(c[n] == o[n] && o[n] == naive[n], "oracle mismatch for " + to_string(spec.p()));
    }
    const auto longer = expand_product(spec, q * 512 + q);
    for (auto mode : {WindowMode::Minimal, WindowMode::Full}) {
      const auto ts = build_transition_system(spec, mode);
      out.require(first_action_mismatch(ts, longer, 512) == -1, "action mismatch for " + to_string(spec.p()));
    }
  }
  for (int t = 0; t < 50; ++t) {
    Polynomial p = Polynomial::constant(Rational(static_cast<long>(1 + rng() % 7)));
    std::map<std::size_t, unsigned> expect;
    for (int i = 0, k = 1 + static_cast<int>(rng() % 5); i < k; ++i) {
      const std::size_t n = 1 + rng() % 30;
      p = p * cyclotomic(n);
      ++expect[n];
    }
    const auto f = cyclotomic_factorize(p);
    out.require(f.factors == expect && f.fully_cyclotomic() && f.reconstruct() == p,
                "cyclotomic reconstruction fails for " + to_string(p));
  }
  for (std::size_t d : {1, 2}) {
    SearchConfig cfg;
    cfg.degree = d;
    cfg.q = 2;
    cfg.coeff_bound = 1;
    cfg.include_rationals = true;
    cfg.grid_denominator = 2;
    cfg.verify_integrality = true;
    cfg.semigroup_cap = 10000;
    const auto r = run_search(cfg);
    out.require(r.counts.integrality_violations == 0, "non-integer automatic hit at degree " + std::to_string(d));
    out.require(r.counts.pruned > 0, "grid has no non-integer points");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "full-window 9x9 matrices", 1, c1_full_matrices},
      {2, "minimal 4x4 matrices and products", 1, c2_f1_matrices},
      {3, "known expansions to 1024", 2, c3_known_expansions},
      {4, "Thue-Morse Mahler equation", 5, c4_thue_morse_equation},
      {5, "periodic equation independence", 5, c5_periodic_independence},
      {6, "F_1 automatic with partial-sum formula", 10, c6_f1_formula},
      {7, "(1-x)F_2 and (1-x)F_3 product identities", 10, c7_product_identities},
      {8, "F_2/F_3 block structure", 5, c8_block_structure},
      {9, "rationality verdicts", 1, c9_rationality},
      {10, "inverse-product conditions", 1, c10_inverse_conditions},
      {11, "degree-4 sweep, workers 1 vs 8", 600, c11_search},
      {12, "property suites", 300, c12_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && secs >= c.limit_seconds) {
      out.ok = false;
      out.detail = "runtime limit exceeded";
    }
    if (!out.ok) ++failures;
    std::printf("%s %2d %s (%.3f s, limit %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
