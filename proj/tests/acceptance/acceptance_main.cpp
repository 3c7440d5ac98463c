// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
//   onecall_acceptance <path-to-onecall-cli>
//
// The CLI path is used by the reproducibility criterion, which runs
// `onecall verify --random --seed 7 ...` twice and compares bytes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "onecall/dispatch.hpp"
#include "onecall/harness.hpp"
#include "onecall/qsim.hpp"
#include "test_support.hpp"

using namespace onecall;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> check;
};

// Criterion 1 and 3 share the exhaustive sweep.
const Report& exhaustive_report() {
  static const Report report = [] {
    Corpus corpus = enumerate_small(3, 5);
    return sweep(corpus);
  }();
  return report;
}

Outcome theorem_check() {
  auto start = std::chrono::steady_clock::now();
  const Report& rep = exhaustive_report();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto& s = rep.summary;
  bool counts_ok = true;
  for (const auto& r : rep.records) counts_ok &= r.quantum_queries <= 1 && r.classical_queries == 2;
  Outcome o;
  o.pass = s.total >= 10000 && s.agreements == s.total && s.mismatches == 0 && counts_ok && secs < 60.0;
  o.detail = std::to_string(s.agreements) + "/" + std::to_string(s.total) + " agree over " +
             std::to_string(rep.pair_count) + " pairs, quantum<=1 and classical==2: " + (counts_ok ? "yes" : "no") +
             ", " + std::to_string(secs) + " s";
  return o;
}

Outcome oracle_bit_exhaustive() {
  int correct = 0, cases = 0;
  bool budget = true;
  for (auto f : TruthTable2::all()) {
    Protocol p = select_protocol(f);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        CountedOracle o = onecall::testing::constant_stub_oracle();
        correct += execute(p, Formula::constant(a), Formula::constant(b), o) == f(a, b);
        budget &= o.count() <= 1;
        ++cases;
      }
  }
  return {cases == 64 && correct == 64 && budget,
          std::to_string(correct) + "/" + std::to_string(cases) + " correct, <=1 query each: " + (budget ? "yes" : "no")};
}

Outcome eqp_exactness() {
  const Report& rep = exhaustive_report();
  const auto& s = rep.summary;
  std::size_t deutsch = 0;
  for (const auto& r : rep.records) deutsch += r.protocol.rfind("Deutsch", 0) == 0;
  return {s.determinism_violations == 0 && s.certified_runs == deutsch && deutsch > 0,
          std::to_string(s.certified_runs) + "/" + std::to_string(deutsch) +
              " quantum runs certified P=1 exactly, " + std::to_string(s.determinism_violations) +
              " non-deterministic"};
}

Outcome combinator_laws() {
  std::size_t agree = 0, total = 0;
  auto check = [&](const Formula& a, const Formula& b, bool sa, bool sb) {
    total += 2;
    agree += bool(brute_force_sat(or_combine(a, b))) == (sa || sb);
    agree += bool(brute_force_sat(and_combine(a, b))) == (sa && sb);
  };
  Corpus small = enumerate_small(3, 5);
  for (const auto& [a, b] : small.pairs) check(a, b, bool(brute_force_sat(a)), bool(brute_force_sat(b)));
  std::size_t exhaustive = total;

  // Random pairs, up to 12 variables per formula.
  Corpus random = random_corpus(1000, 10, 42, 3, 2024);
  for (const auto& [a, b] : random.pairs) check(a, b, bool(brute_force_sat(a)), bool(brute_force_sat(b)));
  Corpus wide = random_corpus(100, 12, 50, 3, 4048);
  for (const auto& [a, b] : wide.pairs) check(a, b, bool(brute_force_sat(a)), bool(brute_force_sat(b)));

  return {agree == total && small.pairs.size() > 0,
          std::to_string(agree) + "/" + std::to_string(total) + " (" + std::to_string(exhaustive) +
              " exhaustive, " + std::to_string(total - exhaustive) + " random with 10-12 vars)"};
}

Outcome solver_cross_validation() {
  std::size_t agree = 0, total = 0;
  for (const auto& f : enumerate_formulas(3, 5)) {
    agree += dpll_sat(tseitin(f)) == brute_force_sat(f);
    ++total;
  }
  std::size_t exhaustive = total;
  std::mt19937_64 seeds(5);
  for (int i = 0; i < 10000; ++i) {
    CnfFormula c = gen_random_cnf_clauses(12, 50, 3, seeds());  // ratio 50/12 ~ 4.2
    agree += dpll_sat(tseitin(cnf_to_formula(c))) == brute_force_sat(cnf_to_formula(c));
    ++total;
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " (" + std::to_string(exhaustive) +
                              " exhaustive formulas, 10000 random 12-var CNFs)"};
}

Outcome circuit_closed_forms() {
  const ExactAmp h = ExactAmp::half(), r = ExactAmp::inv_sqrt2(), z{};
  int matched = 0;
  for (int oa = 0; oa < 2; ++oa)
    for (int ob = 0; ob < 2; ++ob) {
      CountedOracle o = onecall::testing::constant_stub_oracle();
      Trace t;
      run_deutsch_xor(Formula::constant(oa), Formula::constant(ob), o, &t);
      // After the oracle: ±½(|A⟩ ± |B⟩)(|0⟩ − |1⟩), slot i carrying (-1)^{O_i}.
      ExactAmp sa = oa ? -h : h, sb = ob ? -h : h;
      QState::Amplitudes post{sa, -sa, sb, -sb};
      // Before measurement: ±(1/√2)|O(A)⊕O(B)⟩(|0⟩ − |1⟩).
      ExactAmp g = oa ? -r : r;
      QState::Amplitudes end = (oa ^ ob) ? QState::Amplitudes{z, z, g, -g} : QState::Amplitudes{g, -g, z, z};
      matched += t.size() == 3 && t[1].amplitudes == post && t[2].amplitudes == end;

      // AND-NOT variant: labels (A, A∧B), outcome O(A) ⊕ O(A∧B).
      CountedOracle o2 = onecall::testing::constant_stub_oracle();
      Trace t2;
      run_deutsch_and_not(Formula::constant(oa), Formula::constant(ob), o2, &t2);
      int oab = oa & ob;
      ExactAmp s1 = oab ? -h : h;
      QState::Amplitudes post2{sa, -sa, s1, -s1};
      QState::Amplitudes end2 = (oa ^ oab) ? QState::Amplitudes{z, z, g, -g} : QState::Amplitudes{g, -g, z, z};
      matched += t2.size() == 3 && t2[1].amplitudes == post2 && t2[2].amplitudes == end2;
    }
  return {matched == 8, std::to_string(matched) + "/8 circuit runs match post-oracle and pre-measurement forms exactly"};
}

Outcome black_box_contrast() {
  auto rows = contrast_demo();
  std::size_t and_n = 99, xor_n = 99, pa = 0, pb = 0;
  for (const auto& row : rows) {
    if (row.name == "AND") and_n = row.computing.size();
    if (row.name == "XOR") xor_n = row.computing.size();
    if (row.name == "proj-a") pa = row.computing.size();
    if (row.name == "proj-b") pb = row.computing.size();
  }
  return {all_decision_trees().size() == 8 && and_n == 0 && xor_n == 0 && pa >= 1 && pb >= 1,
          "AND " + std::to_string(and_n) + "/8, XOR " + std::to_string(xor_n) + "/8, proj-a " + std::to_string(pa) +
              "/8, proj-b " + std::to_string(pb) + "/8"};
}

std::string capture(const std::string& cmd, int& status) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  status = pclose(pipe.release());
  return out;
}

Outcome reproducibility(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const std::string cmd = "'" + cli +
                          "' verify --random --pairs 200 --vars 8 --clauses 34 --width 3 --seed 7"
                          " --records all 2>/dev/null";
  int s1 = 0, s2 = 0;
  std::string first = capture(cmd, s1);
  std::string second = capture(cmd, s2);
  bool same = !first.empty() && first == second;
  return {same && s1 == 0 && s2 == 0,
          std::string(same ? "byte-identical" : "DIFFERENT") + " reports (" + std::to_string(first.size()) +
              " bytes), exit codes " + std::to_string(s1) + "/" + std::to_string(s2)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria = {
      {1, "one-query protocol equals two-query baseline", theorem_check},
      {2, "oracle-bit-level exhaustiveness (64 cases)", oracle_bit_exhaustive},
      {3, "exact determinism of every quantum run", eqp_exactness},
      {4, "combinator laws O(A|B), O(A&B)", combinator_laws},
      {5, "DPLL+Tseitin agrees with brute force", solver_cross_validation},
      {6, "circuit states match closed forms", circuit_closed_forms},
      {7, "black-box one-query contrast", black_box_contrast},
      {8, "seeded random verify is reproducible", [&] { return reproducibility(cli); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- " << o.detail
              << std::endl;
  }
  std::cout << (failed ? "FAILED" : "ALL PASSED") << " (" << criteria.size() - failed << "/" << criteria.size()
            << ")" << std::endl;
  return failed ? 1 : 0;
}
