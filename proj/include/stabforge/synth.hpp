#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabforge/circuit.hpp"
#include "stabforge/f2linalg.hpp"
#include "stabforge/pauli.hpp"

namespace stabforge {

// Encoding circuit on n qubits from the standard form. Qubits 0..n-k-1
// start in |0>, the message occupies qubits n-k..n-1. First each logical
// X operator is applied controlled on its message qubit (only the X part
// matters, the Z part acts on |0> qubits); then each of the first r
// generator rows becomes H (plus S when the diagonal entry is a Y)
// followed by controlled X/Y/Z gates on the row's other qubits.
Circuit synth_encoder(const StandardForm& sf);

// Measurement circuit on n + g qubits and g classical bits: for each
// generator, one ancilla is prepared with H, coupled to the data by
// controlled X/Y/Z gates matching the generator's letters, rotated back
// with H, and measured.
Circuit synth_syndrome(const std::vector<PauliString>& generators, int n);

// Which single-qubit errors a table or round-trip enumerates. The 3-qubit
// codes only correct one error type; their full tables would be ambiguous.
enum class ErrorClass { All, XOnly, ZOnly };

std::vector<PauliLetter> error_letters(ErrorClass klass);

struct SyndromeEntry {
  PauliString error{1};
  std::vector<int> bits;  // bit i = symplectic product with generator i
  unsigned decimal = 0;   // generator 0 is the most significant bit
};

struct SyndromeTable {
  int n = 0;
  std::vector<PauliString> generators;
  std::vector<SyndromeEntry> entries;

  const SyndromeEntry* find(const std::vector<int>& bits) const;
};

// Tabulates the enumerated single-qubit errors (X/Z/Y per qubit for the
// requested class) plus the identity. Throws if two errors share a
// syndrome: such a code cannot be corrected by table lookup.
SyndromeTable syndrome_table(const std::vector<PauliString>& generators, int n,
                             ErrorClass klass = ErrorClass::All);

// The unique error with this syndrome, which is its own correction;
// nullopt when the syndrome appears in no table row (uncorrectable).
std::optional<PauliString> correction_lookup(const SyndromeTable& table,
                                             const std::vector<int>& bits);

unsigned syndrome_decimal(const std::vector<int>& bits);
std::string syndrome_bits_str(const std::vector<int>& bits);

// Aligned human-readable table and one-entry-per-line machine form
// ("error=IYIII syndrome=1101 decimal=13").
std::string format_table(const SyndromeTable& table);
std::string format_table_machine(const SyndromeTable& table);

}  // namespace stabforge
