#include "onecall/qsim.hpp"

#include <json.hpp>

namespace onecall {
namespace {

const ExactAmp kOne = ExactAmp::integer(1);

void record(Trace* trace, const char* step, const QState& s) {
  if (trace) trace->push_back({step, s.amplitudes()});
}

int run_circuit(const Formula& q0, const Formula& q1, CountedOracle& oracle, Trace* trace) {
  QState s = prepare(q0, q1);
  record(trace, "prepare", s);
  s = apply_oracle(s, oracle);
  record(trace, "oracle", s);
  s = basis_change(s);
  record(trace, "basis_change", s);
  return measure_question(s);
}

}  // namespace

QState::QState(Amplitudes amps, Formula label0, Formula label1)
    : amps_(amps), label0_(std::move(label0)), label1_(std::move(label1)) {
  if (norm_squared() != kOne)
    throw std::invalid_argument("QState: squared norm is " + norm_squared().to_string() + ", expected 1");
}

ExactAmp QState::norm_squared() const { return slot_probability(0) + slot_probability(1); }

ExactAmp QState::slot_probability(int slot) const {
  const ExactAmp& x = amp(slot, 0);
  const ExactAmp& y = amp(slot, 1);
  return x * x + y * y;
}

QState prepare(const Formula& q0, const Formula& q1) {
  const ExactAmp h = ExactAmp::half();
  return QState({h, -h, h, -h}, q0, q1);
}

QState apply_oracle(const QState& s, CountedOracle& oracle) {
  auto [o0, o1] = oracle.quantum_application(s.label(0), s.label(1));
  const int bits[2] = {o0.bit(), o1.bit()};
  QState::Amplitudes out{};
  for (int slot = 0; slot < 2; ++slot)
    for (int ans = 0; ans < 2; ++ans) out[QState::index(slot, ans ^ bits[slot])] = s.amp(slot, ans);
  return QState(out, s.label(0), s.label(1));
}

QState basis_change(const QState& s) {
  QState::Amplitudes out{};
  for (int ans = 0; ans < 2; ++ans) {
    const ExactAmp& x = s.amp(0, ans);
    const ExactAmp& y = s.amp(1, ans);
    out[QState::index(0, ans)] = (x + y).div_sqrt2();
    out[QState::index(1, ans)] = (x - y).div_sqrt2();
  }
  return QState(out, s.label(0), s.label(1));
}

int measure_question(const QState& s) {
  ExactAmp p0 = s.slot_probability(0);
  ExactAmp p1 = s.slot_probability(1);
  if (p0 == kOne && p1.is_zero()) return 0;
  if (p1 == kOne && p0.is_zero()) return 1;
  throw NonDeterministicState("non-deterministic state: P(0) = " + p0.to_string() +
                              ", P(1) = " + p1.to_string());
}

int run_deutsch_xor(const Formula& a, const Formula& b, CountedOracle& oracle, Trace* trace) {
  return run_circuit(a, b, oracle, trace);
}

int run_deutsch_and_not(const Formula& a, const Formula& b, CountedOracle& oracle, Trace* trace) {
  return run_circuit(a, and_combine(a, b), oracle, trace);
}

std::string trace_to_json(const Trace& trace) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& step : trace) {
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    for (const auto& a : step.amplitudes) amps.push_back({a.a(), a.b(), a.k()});
    arr.push_back({{"step", step.step}, {"amplitudes", amps}});
  }
  return arr.dump();
}

}  // namespace onecall
