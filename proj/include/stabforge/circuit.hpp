#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stabforge/errors.hpp"

namespace stabforge {

enum class GateKind { H, S, X, Y, Z, CX, CY, CZ, CCX, SWAP, Measure };

std::string kind_name(GateKind kind);

struct Gate {
  GateKind kind;
  std::vector<int> qubits;  // control(s) first, target last; pair for SWAP
  int cbit = -1;            // Measure only

  static Gate h(int q) { return {GateKind::H, {q}}; }
  static Gate s(int q) { return {GateKind::S, {q}}; }
  static Gate x(int q) { return {GateKind::X, {q}}; }
  static Gate y(int q) { return {GateKind::Y, {q}}; }
  static Gate z(int q) { return {GateKind::Z, {q}}; }
  static Gate cx(int c, int t) { return {GateKind::CX, {c, t}}; }
  static Gate cy(int c, int t) { return {GateKind::CY, {c, t}}; }
  static Gate cz(int c, int t) { return {GateKind::CZ, {c, t}}; }
  static Gate ccx(int c1, int c2, int t) { return {GateKind::CCX, {c1, c2, t}}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}}; }
  static Gate measure(int q, int cbit) { return {GateKind::Measure, {q}, cbit}; }

  // Operands whose state the gate can change: the single operand, the
  // target of a controlled gate, or both legs of a SWAP.
  std::vector<int> targets() const;

  bool operator==(const Gate& other) const = default;
};

// Ordered gate list; the first listed gate is applied first.
struct Circuit {
  int nqubits = 0;
  int ncbits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(int nqubits, int ncbits) : nqubits(nqubits), ncbits(ncbits) {}

  void append(const Gate& g);  // validates operands against the widths
  void validate_gate(const Gate& g) const;

  bool operator==(const Circuit& other) const = default;
};

// Exact multiset count per gate kind; absent kinds map to 0.
std::map<GateKind, int> gate_counts(const Circuit& c);

// Text form: "qubits <n>", "cbits <c>", then one gate per line
// ("H 0", "CX 0 1", "M 4 -> 0", ...). '#' comments and blank lines are
// ignored on parse. parse_circuit(serialize(c)) == c.
std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);

// Drops every Z or controlled-Z whose target qubit started in |0> (member
// of zero_init) and has not been the target of any earlier surviving gate.
// Such a target is still exactly |0>, so the dropped gate acted as the
// identity.
Circuit optimize_trivial_z(const Circuit& c, const std::set<int>& zero_init);

}  // namespace stabforge
