#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabforge/circuit.hpp"
#include "stabforge/pauli.hpp"

namespace stabforge {

// Dense simulation is capped here; the largest circuit in the toolkit
// (Steane syndrome measurement) needs 13 qubits.
inline constexpr int kMaxSimQubits = 16;
inline constexpr double kDefaultTolerance = 1e-9;

using Amplitude = std::complex<double>;

// 2^n complex amplitudes. Qubit 0 is the most significant bit of the
// amplitude index, so kets read left to right.
struct StateVector {
  int n = 0;
  std::vector<Amplitude> amps;

  explicit StateVector(int n);
  static StateVector basis(int n, std::string_view bits);

  double norm() const;
  size_t dim() const { return amps.size(); }
};

StateVector init_basis(int n, std::string_view bits);

struct MeasurementRecord {
  int qubit = 0;
  int cbit = 0;
  double p_one = 0.0;
  int outcome = 0;
  bool deterministic = false;
};

struct RunResult {
  StateVector final;
  std::vector<int> cbits;
  std::vector<MeasurementRecord> transcript;
};

// Applies one unitary gate. Measure gates are rejected; use run().
void apply_gate_inplace(StateVector& s, const Gate& g);
StateVector apply_gate(const StateVector& s, const Gate& g);

// Applies the circuit in list order. Each measurement computes
// p1 = sum of |amp|^2 over states with the qubit set; outcomes within
// `tol` of certainty are taken deterministically, anything else is
// sampled from the seeded generator. The state is projected and
// renormalized after every measurement.
RunResult run(const Circuit& c, const StateVector& s0, std::uint64_t seed,
              double tol = kDefaultTolerance);

// Multiplies the state by the Pauli operator, phase included.
StateVector apply_pauli_error(const StateVector& s, const PauliString& e);

std::complex<double> inner_product(const StateVector& a, const StateVector& b);

// |<a|b>| >= 1 - tol.
bool equiv_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = kDefaultTolerance);

enum class EigenSign { Plus, Minus, Indeterminate };

// +1 if p|s> equals |s> componentwise within tol, -1 if it equals -|s>,
// indeterminate otherwise.
EigenSign eigencheck(const StateVector& s, const PauliString& p,
                     double tol = kDefaultTolerance);

// Appends `extra` qubits in |0> after the existing ones.
StateVector widen_with_ancillas(const StateVector& s, int extra);

// Relabels wires: output qubit q takes the value of input qubit src_of[q].
// src_of must be a permutation of 0..n-1.
StateVector reorder_qubits(const StateVector& s, const std::vector<int>& src_of);

// Dump format: one line per nonzero amplitude, "|bits> re im", sorted by
// index; amplitudes below 1e-12 are suppressed.
std::string dump_state(const StateVector& s);

}  // namespace stabforge
