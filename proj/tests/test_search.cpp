#include <doctest.h>

#include "autoseq/search.hpp"

using namespace autoseq;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

SearchConfig config(std::size_t d, std::size_t q, std::size_t B) {
  SearchConfig c;
  c.degree = d;
  c.q = q;
  c.coeff_bound = B;
  c.semigroup_cap = 10000;
  c.check_order = 1024;
  return c;
}

const CandidateRecord& find(const SearchReport& r, const Polynomial& p) {
  for (const auto& rec : r.records) {
    if (rec.poly == p) return rec;
  }
  throw std::runtime_error("polynomial not in report");
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("enumeration examples") {
  CHECK(enumerate_polynomials(config(1, 2, 1)) == std::vector<Polynomial>{P("1+x"), P("1-x")});
  CHECK(enumerate_polynomials(config(2, 2, 1)).size() == 6);
  CHECK(enumeration_size(config(4, 2, 1)) == 54);
  CHECK(enumeration_size(config(3, 2, 2)) == 25 * 4);
  const auto all = enumerate_polynomials(config(4, 2, 1));
  CHECK(all.size() == 54);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i] == enumerated_polynomial(config(4, 2, 1), i));
    CHECK(all[i][0] == Rational(1));
    CHECK(all[i].degree() == 4);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(all[i] == all[j]);
  }
  CHECK_THROWS_AS(enumerated_polynomial(config(1, 2, 1), 2), std::out_of_range);
  CHECK_THROWS_AS(config(0, 2, 1).validate(), std::invalid_argument);
}

TEST_CASE("rational grid enumeration") {
  auto c = config(1, 2, 1);
  c.include_rationals = true;
  c.grid_denominator = 2;
  CHECK(c.values_per_coefficient() == 5);
  CHECK(enumerate_polynomials(c) ==
        std::vector<Polynomial>{P("1+x"), P("1+1/2*x"), P("1-1/2*x"), P("1-x")});
}

TEST_CASE("integrality filter examples") {
  CHECK_FALSE(integrality_filter(Polynomial{Rational(1), Rational(1, 2)}));
  CHECK(integrality_filter(P("1-x+x^3")));
  CHECK(integrality_filter(Polynomial{Rational(1), Rational(3, 3)}));
}

TEST_CASE("degree one sweep") {
  const auto r = run_search(config(1, 2, 1));
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].automatic());
  CHECK(r.records[1].automatic());
  CHECK(r.records[0].rational_Q == std::optional<Polynomial>(P("1-x")));
  CHECK_FALSE(r.records[1].rational_Q.has_value());
  CHECK(r.records[1].dfao_states == std::optional<std::size_t>(2));
  CHECK(r.counts.automatic == 2);
  CHECK(r.counts.rational == 1);
  CHECK(r.counts.total() == r.space_size);
}

TEST_CASE("degree two sweep in base three") {
  const auto r = run_search(config(2, 3, 1));
  CHECK(r.records.size() == 6);
  const auto& hit = find(r, P("1+x+x^2"));
  CHECK(hit.automatic());
  CHECK(hit.rational_Q == std::optional<Polynomial>(P("1-x")));
  REQUIRE(hit.dfao.has_value());
  CHECK(reverify_hit(config(2, 3, 1), hit));
  CHECK(r.counts.total() == 6);
}

TEST_CASE("records are ordered and sinks see every index") {
  auto c = config(2, 2, 1);
  c.workers = 3;
  std::vector<std::size_t> seen;
  const auto r = run_search(c, [&](const CandidateRecord& rec) { seen.push_back(rec.index); });
  CHECK(seen == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
  for (std::size_t i = 0; i < r.records.size(); ++i) CHECK(r.records[i].index == i);
  c.workers = 1;
  CHECK(report_to_jsonl(run_search(c)) == report_to_jsonl(r));
}

TEST_CASE("resumed sweeps reproduce the full report") {
  const auto c = config(3, 2, 1);
  const auto full = run_search(c);
  std::vector<CandidateRecord> done;
  for (const auto& rec : full.records) {
    if (rec.index % 3 != 1) done.push_back(record_from_json(record_to_json(rec)));
  }
  std::size_t recomputed = 0;
  const auto resumed = run_search(c, [&](const CandidateRecord&) { ++recomputed; }, done);
  CHECK(report_to_jsonl(resumed) == report_to_jsonl(full));
  CHECK(recomputed == full.records.size() - done.size());

  std::vector<CandidateRecord> bad{full.records[0]};
  bad[0].poly = P("1+x^5");
  CHECK_THROWS_AS(run_search(c, {}, bad), std::invalid_argument);
}

TEST_CASE("record JSON round trip") {
  const auto r = run_search(config(1, 2, 1));
  for (const auto& rec : r.records) {
    const auto back = record_from_json(record_to_json(rec));
    CHECK(record_to_json(back) == record_to_json(rec));
    CHECK(back.poly == rec.poly);
    CHECK(back.verdict == rec.verdict);
  }
  CHECK_THROWS_AS(record_from_json("{\"index\":0}"), std::invalid_argument);
  const std::string summary = summary_to_json(r);
  CHECK(summary.find("\"summary\":true") != std::string::npos);
}

TEST_CASE("half-integer grid has no non-integer automatic hit") {
  auto c = config(2, 2, 1);
  c.include_rationals = true;
  c.verify_integrality = true;
  const auto r = run_search(c);
  CHECK(r.counts.integrality_violations == 0);
  CHECK(r.counts.total() == r.space_size);
  std::size_t pruned = 0;
  for (const auto& rec : r.records) {
    if (!integrality_filter(rec.poly)) {
      ++pruned;
      CHECK(rec.verdict == "Pruned");
      REQUIRE(rec.pruned_verdict.has_value());
      CHECK(*rec.pruned_verdict != "AutomaticCertified");
    }
  }
  CHECK(pruned == r.counts.pruned);
  CHECK(pruned > 0);
}

}  // TEST_SUITE
