#include "onecall/qsim.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>

#include "test_support.hpp"

using namespace onecall;
using onecall::testing::formula_with_answer;

namespace {

const ExactAmp h = ExactAmp::half();
const ExactAmp r = ExactAmp::inv_sqrt2();
const ExactAmp zero{};
const ExactAmp one = ExactAmp::integer(1);

QState::Amplitudes amps(ExactAmp a, ExactAmp b, ExactAmp c, ExactAmp d) { return {a, b, c, d}; }

// Hadamard on the question register in floating point, used as an
// independent check of basis_change.
std::array<double, 4> float_basis_change(const QState::Amplitudes& in) {
  const double s = 1.0 / std::sqrt(2.0);
  std::array<double, 4> v{};
  for (int i = 0; i < 4; ++i) v[i] = in[i].to_double();
  return {s * (v[0] + v[2]), s * (v[1] + v[3]), s * (v[0] - v[2]), s * (v[1] - v[3])};
}

}  // namespace

TEST(Prepare, uniform_amplitudes) {
  Formula a = parse_expr("x1"), b = parse_expr("x2 & !x2");
  QState s = prepare(a, b);
  EXPECT_EQ(s.amplitudes(), amps(h, -h, h, -h));
  EXPECT_EQ(s.norm_squared(), one);
  EXPECT_EQ(s.label(0), a);
  EXPECT_EQ(s.label(1), b);

  QState v = prepare(a, and_combine(a, b));
  EXPECT_EQ(v.label(1), parse_expr("x1 & (x3 & !x3)"));
}

TEST(QStateInvariant, rejects_unnormalized) {
  Formula f = parse_expr("x1");
  EXPECT_THROW(QState(amps(h, h, h, zero), f, f), std::invalid_argument);
  EXPECT_THROW(QState(amps(one, one, zero, zero), f, f), std::invalid_argument);
  EXPECT_NO_THROW(QState(amps(zero, zero, zero, -one), f, f));
}

TEST(ApplyOracle, closed_forms_for_each_pattern) {
  for (int oa = 0; oa < 2; ++oa)
    for (int ob = 0; ob < 2; ++ob) {
      CountedOracle o(Backend::BruteForce);
      QState s = apply_oracle(prepare(formula_with_answer(oa), formula_with_answer(ob)), o);
      // slot i picks up (-1)^{O(label_i)}
      ExactAmp sa = oa ? -h : h;
      ExactAmp sb = ob ? -h : h;
      EXPECT_EQ(s.amplitudes(), amps(sa, -sa, sb, -sb)) << oa << ob;
      EXPECT_EQ(s.norm_squared(), one);
      EXPECT_EQ(o.count(), 1u);
      EXPECT_EQ(o.count(QueryKind::QuantumApplication), 1u);
    }
}

TEST(ApplyOracle, worked_examples) {
  CountedOracle o(Backend::BruteForce);
  auto s00 = apply_oracle(prepare(formula_with_answer(0), formula_with_answer(0)), o);
  EXPECT_EQ(s00.amplitudes(), amps(h, -h, h, -h));
  auto s01 = apply_oracle(prepare(formula_with_answer(0), formula_with_answer(1)), o);
  EXPECT_EQ(s01.amplitudes(), amps(h, -h, -h, h));
  auto s11 = apply_oracle(prepare(formula_with_answer(1), formula_with_answer(1)), o);
  EXPECT_EQ(s11.amplitudes(), amps(-h, h, -h, h));
}

TEST(ApplyOracle, acts_as_xor_on_answer_qubit) {
  // Basis states are permuted, not phased: |slot1, 0> -> |slot1, 1> when
  // O(label1) = 1.
  CountedOracle o(Backend::BruteForce);
  QState basis(amps(zero, zero, one, zero), formula_with_answer(0), formula_with_answer(1));
  EXPECT_EQ(apply_oracle(basis, o).amplitudes(), amps(zero, zero, zero, one));
}

TEST(BasisChange, derived_values) {
  Formula f = parse_expr("x1");
  QState same(amps(h, -h, h, -h), f, f);
  QState diff(amps(h, -h, -h, h), f, f);

  QState out_same = basis_change(same);
  QState out_diff = basis_change(diff);
  EXPECT_EQ(out_same.amplitudes(), amps(r, -r, zero, zero));
  EXPECT_EQ(out_diff.amplitudes(), amps(zero, zero, r, -r));

  for (const auto& [in, out] : {std::pair{same, out_same}, std::pair{diff, out_diff}}) {
    auto expect = float_basis_change(in.amplitudes());
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(out.amplitudes()[i].to_double(), expect[i], 1e-12);
  }
}

TEST(BasisChange, involution_and_norm) {
  Formula f = parse_expr("x1");
  for (const auto& a : {amps(h, -h, h, -h), amps(h, -h, -h, h), amps(-h, h, -h, h), amps(r, -r, zero, zero),
                        amps(zero, one, zero, zero), amps(h, h, h, h)}) {
    QState s(a, f, f);
    QState once = basis_change(s);
    EXPECT_EQ(once.norm_squared(), one);
    EXPECT_EQ(basis_change(once).amplitudes(), a);
  }
}

TEST(MeasureQuestion, deterministic_outcomes) {
  Formula f = parse_expr("x1");
  EXPECT_EQ(measure_question(QState(amps(r, -r, zero, zero), f, f)), 0);
  EXPECT_EQ(measure_question(QState(amps(zero, zero, r, -r), f, f)), 1);
  EXPECT_EQ(measure_question(QState(amps(-r, r, zero, zero), f, f)), 0);
  EXPECT_THROW(measure_question(QState(amps(h, -h, h, -h), f, f)), NonDeterministicState);
}

TEST(RunDeutschXor, examples) {
  CountedOracle o(Backend::BruteForce);
  EXPECT_EQ(run_deutsch_xor(formula_with_answer(0), formula_with_answer(1), o), 1);
  EXPECT_EQ(o.count(), 1u);
  EXPECT_EQ(run_deutsch_xor(formula_with_answer(0), formula_with_answer(0), o), 0);
  EXPECT_EQ(run_deutsch_xor(formula_with_answer(1), formula_with_answer(1), o), 0);
  EXPECT_EQ(run_deutsch_xor(formula_with_answer(1), formula_with_answer(0), o), 1);
  EXPECT_EQ(o.count(), 4u);
  EXPECT_EQ(o.count(QueryKind::QuantumApplication), 4u);
}

TEST(RunDeutschAndNot, examples) {
  CountedOracle o;
  EXPECT_EQ(run_deutsch_and_not(formula_with_answer(1), formula_with_answer(0), o), 1);
  EXPECT_EQ(run_deutsch_and_not(formula_with_answer(1), formula_with_answer(1), o), 0);
  EXPECT_EQ(run_deutsch_and_not(formula_with_answer(0), formula_with_answer(1), o), 0);
  EXPECT_EQ(run_deutsch_and_not(formula_with_answer(0), formula_with_answer(0), o), 0);
  EXPECT_EQ(o.count(), 4u);
  // Slot labels are (a, a ∧ b) with b renamed above a.
  EXPECT_EQ(o.log()[0].formulas, (std::vector<std::string>{"x1", "(x1 & (x2 & !x2))"}));
}

TEST(RunCircuits, unitarity_and_pre_measurement_closed_forms) {
  for (int oa = 0; oa < 2; ++oa)
    for (int ob = 0; ob < 2; ++ob) {
      CountedOracle o(Backend::BruteForce);
      Trace trace;
      int bit = run_deutsch_xor(formula_with_answer(oa), formula_with_answer(ob), o, &trace);
      ASSERT_EQ(trace.size(), 3u);
      for (const auto& step : trace) {
        ExactAmp n{};
        for (const auto& a : step.amplitudes) n = n + a * a;
        EXPECT_EQ(n, one) << step.step;
      }
      // ±(1/√2)|O(A)⊕O(B)⟩ ⊗ (|0⟩ − |1⟩)
      ExactAmp sign = oa ? -r : r;
      int x = oa ^ ob;
      QState::Amplitudes expect = x ? amps(zero, zero, sign, -sign) : amps(sign, -sign, zero, zero);
      EXPECT_EQ(trace.back().amplitudes, expect) << oa << ob;
      EXPECT_EQ(bit, x);
    }
}

TEST(Trace, json_shape) {
  CountedOracle o(Backend::BruteForce);
  Trace trace;
  run_deutsch_xor(formula_with_answer(0), formula_with_answer(1), o, &trace);
  auto j = nlohmann::json::parse(trace_to_json(trace));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["step"], "prepare");
  EXPECT_EQ(j[0]["amplitudes"][1], (std::vector<int>{-1, 0, 1}));
  EXPECT_EQ(j[2]["step"], "basis_change");
  EXPECT_EQ(j[2]["amplitudes"][2], (std::vector<int>{0, 1, 1}));
}
