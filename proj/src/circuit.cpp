#include "stabforge/circuit.hpp"

#include <sstream>

namespace stabforge {

std::string kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CX: return "CX";
    case GateKind::CY: return "CY";
    case GateKind::CZ: return "CZ";
    case GateKind::CCX: return "CCX";
    case GateKind::SWAP: return "SWAP";
    case GateKind::Measure: return "M";
  }
  return "?";
}

namespace {

size_t arity(GateKind kind) {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CY:
    case GateKind::CZ:
    case GateKind::SWAP: return 2;
    case GateKind::CCX: return 3;
    default: return 1;
  }
}

}  // namespace

std::vector<int> Gate::targets() const {
  switch (kind) {
    case GateKind::CX:
    case GateKind::CY:
    case GateKind::CZ: return {qubits[1]};
    case GateKind::CCX: return {qubits[2]};
    case GateKind::SWAP: return {qubits[0], qubits[1]};
    default: return {qubits[0]};
  }
}

void Circuit::validate_gate(const Gate& g) const {
  if (g.qubits.size() != arity(g.kind))
    throw ValidationError(kind_name(g.kind) + " takes " + std::to_string(arity(g.kind)) +
                          " qubit operand(s)");
  for (size_t i = 0; i < g.qubits.size(); ++i) {
    if (g.qubits[i] < 0 || g.qubits[i] >= nqubits)
      throw ValidationError("qubit index " + std::to_string(g.qubits[i]) +
                            " out of range for " + std::to_string(nqubits) + " qubits");
    for (size_t j = i + 1; j < g.qubits.size(); ++j)
      if (g.qubits[i] == g.qubits[j])
        throw ValidationError("duplicate operand " + std::to_string(g.qubits[i]) + " in " +
                              kind_name(g.kind));
  }
  if (g.kind == GateKind::Measure) {
    if (g.cbit < 0 || g.cbit >= ncbits)
      throw ValidationError("classical bit index " + std::to_string(g.cbit) +
                            " out of range for " + std::to_string(ncbits) + " cbits");
  }
}

void Circuit::append(const Gate& g) {
  validate_gate(g);
  gates.push_back(g);
}

std::map<GateKind, int> gate_counts(const Circuit& c) {
  std::map<GateKind, int> counts;
  for (GateKind kind : {GateKind::H, GateKind::S, GateKind::X, GateKind::Y, GateKind::Z,
                        GateKind::CX, GateKind::CY, GateKind::CZ, GateKind::CCX,
                        GateKind::SWAP, GateKind::Measure})
    counts[kind] = 0;
  for (const Gate& g : c.gates) counts[g.kind]++;
  return counts;
}

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.nqubits << "\n";
  out << "cbits " << c.ncbits << "\n";
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Measure) {
      out << "M " << g.qubits[0] << " -> " << g.cbit << "\n";
    } else {
      out << kind_name(g.kind);
      for (int q : g.qubits) out << " " << q;
      out << "\n";
    }
  }
  return out.str();
}

namespace {

int parse_int(const std::string& token, int line_no, const char* what) {
  try {
    size_t pos = 0;
    const int value = std::stoi(token, &pos);
    if (pos != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ValidationError("line " + std::to_string(line_no) + ": expected " + what +
                          ", got '" + token + "'");
  }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_qubits = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "qubits") {
      if (tok.size() != 2)
        throw ValidationError("line " + std::to_string(line_no) + ": qubits takes one value");
      c.nqubits = parse_int(tok[1], line_no, "qubit count");
      if (c.nqubits <= 0)
        throw ValidationError("line " + std::to_string(line_no) + ": qubit count must be positive");
      have_qubits = true;
      continue;
    }
    if (tok[0] == "cbits") {
      if (tok.size() != 2)
        throw ValidationError("line " + std::to_string(line_no) + ": cbits takes one value");
      c.ncbits = parse_int(tok[1], line_no, "cbit count");
      if (c.ncbits < 0)
        throw ValidationError("line " + std::to_string(line_no) + ": cbit count must be >= 0");
      continue;
    }
    if (!have_qubits)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": gate before the qubits header");

    Gate g;
    if (tok[0] == "M") {
      if (tok.size() != 4 || tok[2] != "->")
        throw ValidationError("line " + std::to_string(line_no) + ": expected 'M <q> -> <c>'");
      g = Gate::measure(parse_int(tok[1], line_no, "qubit index"),
                        parse_int(tok[3], line_no, "cbit index"));
    } else {
      GateKind kind;
      if (tok[0] == "H") kind = GateKind::H;
      else if (tok[0] == "S") kind = GateKind::S;
      else if (tok[0] == "X") kind = GateKind::X;
      else if (tok[0] == "Y") kind = GateKind::Y;
      else if (tok[0] == "Z") kind = GateKind::Z;
      else if (tok[0] == "CX") kind = GateKind::CX;
      else if (tok[0] == "CY") kind = GateKind::CY;
      else if (tok[0] == "CZ") kind = GateKind::CZ;
      else if (tok[0] == "CCX") kind = GateKind::CCX;
      else if (tok[0] == "SWAP") kind = GateKind::SWAP;
      else
        throw ValidationError("line " + std::to_string(line_no) + ": unknown gate '" + tok[0] +
                              "'");
      if (tok.size() != arity(kind) + 1)
        throw ValidationError("line " + std::to_string(line_no) + ": " + tok[0] + " takes " +
                              std::to_string(arity(kind)) + " operand(s)");
      g.kind = kind;
      for (size_t i = 1; i < tok.size(); ++i)
        g.qubits.push_back(parse_int(tok[i], line_no, "qubit index"));
    }
    try {
      c.append(g);
    } catch (const ValidationError& err) {
      throw ValidationError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (!have_qubits) throw ValidationError("missing qubits header");
  return c;
}

Circuit optimize_trivial_z(const Circuit& c, const std::set<int>& zero_init) {
  for (int q : zero_init)
    if (q < 0 || q >= c.nqubits)
      throw ValidationError("zero-initialized qubit " + std::to_string(q) + " out of range");
  Circuit out(c.nqubits, c.ncbits);
  std::vector<bool> still_zero(static_cast<size_t>(c.nqubits), false);
  for (int q : zero_init) still_zero[static_cast<size_t>(q)] = true;
  for (const Gate& g : c.gates) {
    const bool removable_z =
        (g.kind == GateKind::Z && still_zero[static_cast<size_t>(g.qubits[0])]) ||
        (g.kind == GateKind::CZ && still_zero[static_cast<size_t>(g.qubits[1])]);
    if (removable_z) continue;
    out.gates.push_back(g);
    for (int t : g.targets()) still_zero[static_cast<size_t>(t)] = false;
  }
  return out;
}

}  // namespace stabforge
