#include "autoseq/search.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "autoseq/expansion.hpp"
#include "autoseq/rationality.hpp"

namespace autoseq {

using nlohmann::ordered_json;

void SearchConfig::validate() const {
  if (degree < 1) throw std::invalid_argument("search degree must be >= 1");
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  if (include_rationals && grid_denominator < 1) {
    throw std::invalid_argument("grid denominator must be >= 1");
  }
}

std::size_t SearchConfig::values_per_coefficient() const {
  const std::size_t den = include_rationals ? grid_denominator : 1;
  return 2 * coeff_bound * den + 1;
}

std::size_t enumeration_size(const SearchConfig& config) {
  config.validate();
  const std::size_t v = config.values_per_coefficient();
  std::size_t n = v - 1;
  for (std::size_t i = 1; i < config.degree; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / v) {
      throw std::overflow_error("enumeration space too large");
    }
    n *= v;
  }
  return n;
}

Polynomial enumerated_polynomial(const SearchConfig& config, std::size_t index) {
  const std::size_t total = enumeration_size(config);
  if (index >= total) throw std::out_of_range("enumeration index out of range");
  const std::size_t v = config.values_per_coefficient();
  const std::size_t den = config.include_rationals ? config.grid_denominator : 1;
  const long top = static_cast<long>(config.coeff_bound * den);
  std::vector<Rational> c(config.degree + 1);
  c[0] = Rational(1);
  std::size_t k = index % (v - 1);
  std::size_t rest = index / (v - 1);
  long lead = top - static_cast<long>(k);
  if (lead <= 0) --lead;
  c[config.degree] = Rational(lead, static_cast<long>(den));
  for (std::size_t i = config.degree - 1; i >= 1; --i) {
    k = rest % v;
    rest /= v;
    c[i] = Rational(top - static_cast<long>(k), static_cast<long>(den));
  }
  return Polynomial(std::move(c));
}

std::vector<Polynomial> enumerate_polynomials(const SearchConfig& config) {
  std::vector<Polynomial> out;
  const std::size_t total = enumeration_size(config);
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.push_back(enumerated_polynomial(config, i));
  return out;
}

bool integrality_filter(const Polynomial& p) { return has_integer_coefficients(p); }

bool reverify_hit(const SearchConfig& config, const CandidateRecord& record) {
  if (!record.dfao) return false;
  const std::size_t last = config.check_order + config.reverify_count;
  const TruncatedSeries c = expand_product(ProductSpec(record.poly, config.q), last);
  for (std::size_t n = config.check_order + 1; n <= last; ++n) {
    if (dfao_eval(*record.dfao, n) != c[n]) return false;
  }
  return true;
}

CandidateRecord evaluate_candidate(const SearchConfig& config, std::size_t index) {
  CandidateRecord rec;
  rec.index = index;
  rec.poly = enumerated_polynomial(config, index);
  ClassifyOptions options;
  options.cap = config.semigroup_cap;
  options.check_order = config.check_order;
  options.time_limit = config.time_limit;
  const ProductSpec spec(rec.poly, config.q);

  if (config.include_rationals && !integrality_filter(rec.poly)) {
    rec.verdict = "Pruned";
    if (config.verify_integrality) {
      const auto result = classify(spec, options);
      rec.pruned_verdict = verdict_name(result.verdict);
      rec.matrices_explored = result.matrices_explored;
    }
    return rec;
  }

  const auto result = classify(spec, options);
  rec.verdict = verdict_name(result.verdict);
  rec.matrices_explored = result.matrices_explored;
  if (const auto* cert = std::get_if<AutomaticCertified>(&result.verdict)) {
    rec.semigroup_size = cert->semigroup_size;
    rec.dfao_states = cert->dfao.state_count();
    rec.kernel_classes = cert->kernel_count;
    rec.dfao = cert->dfao;
    rec.dfao->vectors.clear();
  } else if (const auto* ev = std::get_if<NotAutomaticEvidence>(&result.verdict)) {
    rec.distinct_values = ev->distinct_value_count;
  }
  if (const auto rat = rationality_test(rec.poly, config.q); rat.rational()) rec.rational_Q = rat.Q;
  if (rec.automatic() && config.reverify_count > 0 && !reverify_hit(config, rec)) {
    throw std::logic_error("automatic hit failed re-verification at index " + std::to_string(index));
  }
  return rec;
}

namespace {

void tally(SearchReport& report, const CandidateRecord& rec) {
  auto& c = report.counts;
  if (rec.verdict == "AutomaticCertified") {
    ++c.automatic;
  } else if (rec.verdict == "NotAutomaticEvidence") {
    ++c.not_automatic;
  } else if (rec.verdict == "Undetermined") {
    ++c.undetermined;
  } else if (rec.verdict == "Pruned") {
    ++c.pruned;
    if (rec.pruned_verdict == "AutomaticCertified") ++c.integrality_violations;
  } else {
    throw std::invalid_argument("unknown verdict in search record: " + rec.verdict);
  }
  if (rec.rational_Q) ++c.rational;
  report.matrices_explored += rec.matrices_explored;
}

}  // namespace

SearchReport run_search(const SearchConfig& config, const RecordSink& sink,
                        const std::vector<CandidateRecord>& resumed) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.config = config;
  report.space_size = enumeration_size(config);
  const std::size_t total = report.space_size;

  std::vector<std::optional<CandidateRecord>> slots(total);
  std::vector<bool> done_before(total, false);
  for (const auto& r : resumed) {
    if (r.index >= total) throw std::invalid_argument("resumed record index out of range");
    if (!(r.poly == enumerated_polynomial(config, r.index))) {
      throw std::invalid_argument("resumed record does not match the enumeration");
    }
    slots[r.index] = r;
    done_before[r.index] = true;
  }

  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      if (done_before[i]) continue;
      {
        std::lock_guard lock(mutex);
        if (failure) return;
      }
      try {
        CandidateRecord rec = evaluate_candidate(config, i);
        std::lock_guard lock(mutex);
        slots[i] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
      }
      ready.notify_all();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, config.workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);

  for (std::size_t i = 0; i < total; ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return slots[i].has_value() || failure; });
    if (failure) break;
    const CandidateRecord& rec = *slots[i];
    lock.unlock();
    try {
      tally(report, rec);
      if (sink && !done_before[i]) sink(rec);
    } catch (...) {
      std::lock_guard relock(mutex);
      failure = std::current_exception();
      break;
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  report.records.reserve(total);
  for (auto& s : slots) report.records.push_back(std::move(*s));
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string record_to_json(const CandidateRecord& rec) {
  ordered_json j;
  j["index"] = rec.index;
  j["poly"] = to_string(rec.poly);
  j["coefficients"] = coefficient_strings(rec.poly);
  j["verdict"] = rec.verdict;
  if (rec.pruned_verdict) j["pruned_verdict"] = *rec.pruned_verdict;
  if (rec.semigroup_size) j["semigroup_size"] = *rec.semigroup_size;
  if (rec.dfao_states) j["dfao_states"] = *rec.dfao_states;
  if (rec.kernel_classes) j["kernel_classes"] = *rec.kernel_classes;
  if (rec.distinct_values) j["distinct_values"] = *rec.distinct_values;
  if (rec.rational_Q) j["rational_Q"] = to_string(*rec.rational_Q);
  j["matrices_explored"] = rec.matrices_explored;
  if (rec.dfao) j["dfao"] = ordered_json::parse(dfao_to_json(*rec.dfao));
  return j.dump();
}

CandidateRecord record_from_json(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    CandidateRecord rec;
    rec.index = j.at("index").get<std::size_t>();
    rec.poly = from_coefficient_strings(j.at("coefficients").get<std::vector<std::string>>());
    rec.verdict = j.at("verdict").get<std::string>();
    auto opt_size = [&](const char* key, std::optional<std::size_t>& out) {
      if (j.contains(key)) out = j[key].get<std::size_t>();
    };
    if (j.contains("pruned_verdict")) rec.pruned_verdict = j["pruned_verdict"].get<std::string>();
    opt_size("semigroup_size", rec.semigroup_size);
    opt_size("dfao_states", rec.dfao_states);
    opt_size("kernel_classes", rec.kernel_classes);
    opt_size("distinct_values", rec.distinct_values);
    if (j.contains("rational_Q")) rec.rational_Q = parse_polynomial(j["rational_Q"].get<std::string>());
    rec.matrices_explored = j.value("matrices_explored", std::size_t{0});
    if (j.contains("dfao")) rec.dfao = dfao_from_json(j["dfao"].dump());
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed search record: ") + e.what());
  }
}

std::string summary_to_json(const SearchReport& report) {
  const auto& cfg = report.config;
  ordered_json j;
  j["summary"] = true;
  ordered_json config;
  config["degree"] = cfg.degree;
  config["q"] = cfg.q;
  config["coeff_bound"] = cfg.coeff_bound;
  config["semigroup_cap"] = cfg.semigroup_cap;
  config["check_order"] = cfg.check_order;
  config["include_rationals"] = cfg.include_rationals;
  if (cfg.include_rationals) config["grid_denominator"] = cfg.grid_denominator;
  config["verify_integrality"] = cfg.verify_integrality;
  config["time_limit_ms"] = cfg.time_limit.count();
  config["reverify_count"] = cfg.reverify_count;
  j["config"] = std::move(config);
  j["space_size"] = report.space_size;
  j["total"] = report.counts.total();
  ordered_json counts;
  counts["AutomaticCertified"] = report.counts.automatic;
  counts["NotAutomaticEvidence"] = report.counts.not_automatic;
  counts["Undetermined"] = report.counts.undetermined;
  counts["Pruned"] = report.counts.pruned;
  counts["Rational"] = report.counts.rational;
  counts["integrality_violations"] = report.counts.integrality_violations;
  j["counts"] = std::move(counts);
  j["matrices_explored"] = report.matrices_explored;
  auto hits = ordered_json::array();
  for (const auto& rec : report.records) {
    if (!rec.automatic()) continue;
    ordered_json h;
    h["index"] = rec.index;
    h["poly"] = to_string(rec.poly);
    h["dfao_states"] = rec.dfao_states.value_or(0);
    h["semigroup_size"] = rec.semigroup_size.value_or(0);
    hits.push_back(std::move(h));
  }
  j["automatic_hits"] = std::move(hits);
  return j.dump();
}

std::string report_to_jsonl(const SearchReport& report) {
  std::string out;
  for (const auto& rec : report.records) out += record_to_json(rec) + "\n";
  out += summary_to_json(report) + "\n";
  return out;
}

}  // namespace autoseq
