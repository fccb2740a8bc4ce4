#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabforge/f2linalg.hpp"
#include "stabforge/pauli.hpp"
#include "stabforge/route.hpp"
#include "stabforge/sim.hpp"
#include "stabforge/synth.hpp"

namespace stabforge {

// A stabilizer code: n physical qubits, k logical qubits, n-k generators.
struct CodeSpec {
  std::string name;
  int n = 0;
  int k = 0;
  std::vector<PauliString> generators;
  std::vector<PauliString> logical_x;  // optional, k entries when present
  std::vector<PauliString> logical_z;
  std::optional<Layout> layout;
  ErrorClass error_class = ErrorClass::All;  // 3-qubit codes correct one type only

  CheckMatrix check_matrix() const;
  void validate() const;
};

std::vector<std::string> builtin_names();
CodeSpec builtin(std::string_view name);

// Line-oriented code-spec format: "name <text>", "n <int>", "k <int>",
// one "stabilizer <letters>" per generator, optional "logical_x"/
// "logical_z" lines. Invariants are enforced at load.
CodeSpec load_code(std::string_view text);
CodeSpec load_code_file(const std::string& path);
// Accepts "builtin:<name>" or a file path.
CodeSpec resolve_code(const std::string& ref);

// Everything derived from a code that the verification pipeline needs.
struct CompiledCode {
  CodeSpec spec;
  StandardForm sf;
  Circuit encoder;
  std::vector<PauliString> table_generators;  // what the syndrome circuit measures
  Circuit syndrome_circuit;
  SyndromeTable table;
};

// The syndrome table and circuit use the code's own generators when the
// standard form needed no qubit relabeling, and the standard-form rows
// (the permuted-order generators that actually stabilize the encoder
// output) otherwise.
CompiledCode compile_code(const CodeSpec& spec);

struct RoundTripReport {
  std::string code;
  std::string logical_input;
  PauliString injected{1};            // original qubit order
  std::vector<int> syndrome;
  unsigned syndrome_decimal = 0;
  bool syndrome_deterministic = true;
  bool uncorrectable = false;
  std::string correction;             // letters, or "-" when none applied
  double fidelity = 0.0;
  bool pass = false;
};

// Full pipeline: encode the logical basis state, inject the error,
// measure the syndrome circuit, look up and apply the correction, and
// compare with the pre-error state up to global phase. Error qubit
// indices refer to the encoder's wire order; for a code whose standard
// form relabeled qubits, wire j carries original qubit sf.perm[j].
RoundTripReport verify_roundtrip(const CompiledCode& code, std::string_view logical_bits,
                                 const PauliString& error, std::uint64_t seed,
                                 double tol = kDefaultTolerance);
RoundTripReport verify_roundtrip(const CodeSpec& spec, std::string_view logical_bits,
                                 const PauliString& error, std::uint64_t seed,
                                 double tol = kDefaultTolerance);

// Relabels p from original qubit order into the standard-form order:
// the letter at new position j is p's letter at perm[j].
PauliString permute_pauli(const PauliString& p, const std::vector<int>& perm);

// Hand-transcribed 9-qubit encoder/decoder figure circuits (CNOT/H/CCX
// majority-vote network). The message rides on qubit 0.
Circuit shor_figure_encoder();
Circuit shor_figure_decoder();

// Runs the figure encoder, injects the error, runs the figure decoder,
// and checks that qubit 0's reduced state matches the message (a,b).
RoundTripReport shor_figure_roundtrip(const PauliString& error, std::complex<double> a,
                                      std::complex<double> b,
                                      double tol = kDefaultTolerance);
RoundTripReport shor_figure_roundtrip(const PauliString& error);

struct AmplitudeCheck {
  bool pass = false;
  std::string details;
};

// Compares the simulated encoder output against the code's reference
// expansion: term-by-term for the five-qubit code; for the Steane code,
// whose reference listing is in unpermuted qubit order, the state is
// checked by its eigenstructure (8 equal-magnitude terms, +1 eigenvalue
// for every standard-form row, logical-Z sign matching the input).
AmplitudeCheck verify_codeword_amplitudes(const CodeSpec& spec, std::string_view logical_bits);

}  // namespace stabforge
