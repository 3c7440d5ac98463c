#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "onecall/exact_amp.hpp"
#include "onecall/formula.hpp"
#include "onecall/oracle.hpp"

namespace onecall {

/// Raised when no question-register outcome has probability exactly 1.
class NonDeterministicState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two labelled question slots times one answer qubit. Amplitudes are
/// ordered (slot0,ans0), (slot0,ans1), (slot1,ans0), (slot1,ans1).
/// Construction rejects any amplitude vector whose squared norm is not
/// exactly 1.
class QState {
 public:
  using Amplitudes = std::array<ExactAmp, 4>;

  QState(Amplitudes amps, Formula label0, Formula label1);

  static constexpr std::size_t index(int slot, int ans) { return static_cast<std::size_t>(2 * slot + ans); }

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  const ExactAmp& amp(int slot, int ans) const { return amps_.at(index(slot, ans)); }
  const Formula& label(int slot) const { return slot == 0 ? label0_ : label1_; }

  /// Σ amp², exact.
  ExactAmp norm_squared() const;
  /// Probability that the question register reads `slot`.
  ExactAmp slot_probability(int slot) const;

 private:
  Amplitudes amps_;
  Formula label0_;
  Formula label1_;
};

/// ½(|slot0⟩ + |slot1⟩) ⊗ (|0⟩ − |1⟩) with slot labels (q0, q1).
QState prepare(const Formula& q0, const Formula& q1);

/// |slot i, ans b⟩ → |slot i, ans b ⊕ O(label_i)⟩. Charges exactly one
/// quantum application to `oracle`.
QState apply_oracle(const QState& s, CountedOracle& oracle);

/// Hadamard on the question register: slot0 → (|0⟩+|1⟩)/√2,
/// slot1 → (|0⟩−|1⟩)/√2.
QState basis_change(const QState& s);

/// The question bit whose probability is exactly 1; throws
/// NonDeterministicState otherwise.
int measure_question(const QState& s);

struct TraceStep {
  std::string step;
  QState::Amplitudes amplitudes;
};
using Trace = std::vector<TraceStep>;

/// O(a) ⊕ O(b) with one oracle application.
int run_deutsch_xor(const Formula& a, const Formula& b, CountedOracle& oracle, Trace* trace = nullptr);

/// O(a) ∧ ¬O(b), computed as O(a) ⊕ O(a ∧ b) with one oracle application
/// over the slot labels (a, and_combine(a, b)).
int run_deutsch_and_not(const Formula& a, const Formula& b, CountedOracle& oracle,
                        Trace* trace = nullptr);

/// JSON array of {"step", "amplitudes": [[a,b,k] x4]}.
std::string trace_to_json(const Trace& trace);

}  // namespace onecall
