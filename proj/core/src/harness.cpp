#include "onecall/harness.hpp"

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <sstream>
#include <thread>

namespace onecall {

using nlohmann::ordered_json;

PairRun run_pair(TruthTable2 f, const Formula& a, const Formula& b, Backend backend) {
  PairRun run{{}, CountedOracle(backend), CountedOracle(backend), {}};
  VerifyRecord& r = run.record;
  r.f = f;
  r.a = serialize_expr(a);
  r.b = serialize_expr(b);

  const Protocol protocol = select_protocol(f);
  r.protocol = describe(protocol);
  try {
    r.classical_answer = eval_classical_two_query(f, a, b, run.classical);
    r.quantum_answer = execute(protocol, a, b, run.quantum, &run.trace);
    r.certified = is_quantum(protocol);
  } catch (const NonDeterministicState& e) {
    r.determinism_violation = true;
    r.error = e.what();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.classical_queries = run.classical.count();
  r.quantum_queries = run.quantum.count();
  r.agree = r.error.empty() && r.classical_answer == r.quantum_answer;
  return run;
}

VerifyRecord verify_pair(TruthTable2 f, const Formula& a, const Formula& b, Backend backend) {
  return run_pair(f, a, b, backend).record;
}

ReportSummary summarize(const std::vector<VerifyRecord>& records) {
  ReportSummary s;
  s.total = records.size();
  bool first = true;
  for (const auto& r : records) {
    if (r.agree) ++s.agreements; else ++s.mismatches;
    if (r.determinism_violation) ++s.determinism_violations;
    if (!r.error.empty()) ++s.errors;
    if (r.protocol.rfind("Deutsch", 0) == 0) ++s.quantum_runs;
    if (r.certified) ++s.certified_runs;
    s.max_quantum_queries = std::max(s.max_quantum_queries, r.quantum_queries);
    s.min_classical_queries = first ? r.classical_queries : std::min(s.min_classical_queries, r.classical_queries);
    s.max_classical_queries = std::max(s.max_classical_queries, r.classical_queries);
    first = false;
  }
  return s;
}

Report sweep(const Corpus& corpus, const SweepOptions& options) {
  Report report;
  report.params = corpus.params;
  report.pair_count = corpus.pairs.size();
  report.backend = options.backend;

  const auto tables = TruthTable2::all();
  report.records.resize(corpus.pairs.size() * tables.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p; (p = next.fetch_add(1)) < corpus.pairs.size();) {
      const auto& [a, b] = corpus.pairs[p];
      for (std::size_t t = 0; t < tables.size(); ++t) {
        VerifyRecord r = verify_pair(tables[t], a, b, options.backend);
        r.pair_index = p;
        report.records[p * tables.size() + t] = std::move(r);
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  report.summary = summarize(report.records);
  return report;
}

namespace {

ordered_json record_json(const VerifyRecord& r) {
  ordered_json j;
  j["f"] = r.f.to_string();
  j["pair"] = r.pair_index;
  j["a"] = r.a;
  j["b"] = r.b;
  j["protocol"] = r.protocol;
  j["classical_answer"] = r.classical_answer;
  j["quantum_answer"] = r.quantum_answer;
  j["classical_queries"] = r.classical_queries;
  j["quantum_queries"] = r.quantum_queries;
  j["agree"] = r.agree;
  j["certified"] = r.certified;
  j["determinism_violation"] = r.determinism_violation;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

ordered_json params_json(const CorpusParams& p, std::size_t pair_count) {
  ordered_json j;
  if (p.mode == CorpusMode::ExhaustiveSmall) {
    j["mode"] = "exhaustive-small";
    j["max_vars"] = p.max_vars;
    j["max_nodes"] = p.max_nodes;
    j["pair_limit"] = p.pair_limit;
  } else {
    j["mode"] = "random";
    j["vars"] = p.vars;
    j["clauses"] = p.clauses;
    j["width"] = p.width;
    j["seed"] = p.seed;
  }
  j["pairs"] = pair_count;
  return j;
}

}  // namespace

std::string record_to_json(const VerifyRecord& r) { return record_json(r).dump(); }

std::string report_to_json(const Report& report, bool all_records) {
  const ReportSummary& s = report.summary;
  ordered_json j;
  j["corpus"] = params_json(report.params, report.pair_count);
  j["oracle"] = to_string(report.backend);
  j["summary"] = {
      {"total", s.total},
      {"agreements", s.agreements},
      {"mismatches", s.mismatches},
      {"determinism_violations", s.determinism_violations},
      {"errors", s.errors},
      {"quantum_runs", s.quantum_runs},
      {"certified_runs", s.certified_runs},
      {"max_quantum_queries", s.max_quantum_queries},
      {"min_classical_queries", s.min_classical_queries},
      {"max_classical_queries", s.max_classical_queries},
  };
  j["records_included"] = all_records ? "all" : "failures";
  ordered_json recs = ordered_json::array();
  for (const auto& r : report.records)
    if (all_records || !r.agree || r.determinism_violation) recs.push_back(record_json(r));
  j["records"] = std::move(recs);
  return j.dump(2) + "\n";
}

std::string summary_text(const Report& report) {
  const ReportSummary& s = report.summary;
  std::ostringstream out;
  out << "pairs: " << report.pair_count << "  cases: " << s.total << "  oracle: " << to_string(report.backend)
      << "\n"
      << "agreements: " << s.agreements << "  mismatches: " << s.mismatches
      << "  determinism violations: " << s.determinism_violations << "  errors: " << s.errors << "\n"
      << "quantum runs: " << s.quantum_runs << " (certified exact: " << s.certified_runs << ")"
      << "  max quantum queries: " << s.max_quantum_queries << "  classical queries: " << s.min_classical_queries
      << ".." << s.max_classical_queries << "\n"
      << (s.ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

}  // namespace onecall
