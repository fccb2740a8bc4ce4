#include "stabforge/synth.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace stabforge {

Circuit synth_encoder(const StandardForm& sf) {
  const int n = sf.hs.n, k = sf.hs.k, r = sf.r;
  if (static_cast<int>(sf.xlogical.size()) != k)
    throw ValidationError("standard form is missing logical operators");
  Circuit c(n, 0);

  for (int i = 0; i < k; ++i) {
    const PauliString& xl = sf.xlogical[static_cast<size_t>(i)];
    const int control = n - k + i;
    if (!xl.x(control)) continue;
    for (int j = 0; j < n; ++j)
      if (j != control && xl.x(j)) c.append(Gate::cx(control, j));
  }

  for (int i = 0; i < r; ++i) {
    c.append(Gate::h(i));
    if (sf.hs.zblock.at(i, i)) c.append(Gate::s(i));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const bool xb = sf.hs.xblock.at(i, j), zb = sf.hs.zblock.at(i, j);
      if (xb && zb)
        c.append(Gate::cy(i, j));
      else if (xb)
        c.append(Gate::cx(i, j));
      else if (zb)
        c.append(Gate::cz(i, j));
    }
  }
  return c;
}

Circuit synth_syndrome(const std::vector<PauliString>& generators, int n) {
  if (generators.empty()) throw ValidationError("need at least one generator to measure");
  const int g = static_cast<int>(generators.size());
  for (int i = 0; i < g; ++i) {
    if (generators[static_cast<size_t>(i)].num_qubits() != n)
      throw ValidationError("generator " + std::to_string(i) + " width does not match n");
    for (int j = i + 1; j < g; ++j)
      if (symplectic_product(generators[static_cast<size_t>(i)],
                             generators[static_cast<size_t>(j)]))
        throw ValidationError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                              " do not commute");
  }
  Circuit c(n + g, g);
  for (int i = 0; i < g; ++i) {
    const PauliString& m = generators[static_cast<size_t>(i)];
    const int ancilla = n + i;
    c.append(Gate::h(ancilla));
    for (int j = 0; j < n; ++j) {
      switch (m.letter(j)) {
        case PauliLetter::I: break;
        case PauliLetter::X: c.append(Gate::cx(ancilla, j)); break;
        case PauliLetter::Y: c.append(Gate::cy(ancilla, j)); break;
        case PauliLetter::Z: c.append(Gate::cz(ancilla, j)); break;
      }
    }
    c.append(Gate::h(ancilla));
    c.append(Gate::measure(ancilla, i));
  }
  return c;
}

std::vector<PauliLetter> error_letters(ErrorClass klass) {
  switch (klass) {
    case ErrorClass::XOnly: return {PauliLetter::X};
    case ErrorClass::ZOnly: return {PauliLetter::Z};
    case ErrorClass::All: break;
  }
  return {PauliLetter::X, PauliLetter::Z, PauliLetter::Y};
}

unsigned syndrome_decimal(const std::vector<int>& bits) {
  unsigned value = 0;
  for (int b : bits) value = (value << 1) | static_cast<unsigned>(b & 1);
  return value;
}

std::string syndrome_bits_str(const std::vector<int>& bits) {
  std::string out;
  for (int b : bits) out += b ? '1' : '0';
  return out;
}

const SyndromeEntry* SyndromeTable::find(const std::vector<int>& bits) const {
  for (const SyndromeEntry& entry : entries)
    if (entry.bits == bits) return &entry;
  return nullptr;
}

SyndromeTable syndrome_table(const std::vector<PauliString>& generators, int n,
                             ErrorClass klass) {
  SyndromeTable table;
  table.n = n;
  table.generators = generators;
  auto add_entry = [&](const PauliString& error) {
    SyndromeEntry entry;
    entry.error = error;
    for (const PauliString& m : generators)
      entry.bits.push_back(symplectic_product(error, m));
    entry.decimal = syndrome_decimal(entry.bits);
    table.entries.push_back(std::move(entry));
  };
  for (int q = 0; q < n; ++q)
    for (PauliLetter letter : error_letters(klass)) add_entry(PauliString::single(n, q, letter));
  add_entry(PauliString(n));  // identity, all-zero syndrome

  std::map<std::vector<int>, const SyndromeEntry*> seen;
  for (const SyndromeEntry& entry : table.entries) {
    auto [it, inserted] = seen.emplace(entry.bits, &entry);
    if (!inserted)
      throw ValidationError("syndrome collision: errors " + it->second->error.letters() +
                            " and " + entry.error.letters() + " both give syndrome " +
                            syndrome_bits_str(entry.bits));
  }
  return table;
}

std::optional<PauliString> correction_lookup(const SyndromeTable& table,
                                             const std::vector<int>& bits) {
  if (bits.size() != table.generators.size())
    throw ValidationError("syndrome length does not match generator count");
  const SyndromeEntry* entry = table.find(bits);
  if (!entry) return std::nullopt;
  return entry->error;
}

std::string format_table(const SyndromeTable& table) {
  std::ostringstream out;
  const size_t letter_width = std::max<size_t>(5, static_cast<size_t>(table.n));
  out << std::left << std::setw(static_cast<int>(letter_width)) << "error" << "  ";
  for (size_t i = 0; i < table.generators.size(); ++i)
    out << std::setw(3) << ("M" + std::to_string(i + 1));
  out << " decimal\n";
  for (const SyndromeEntry& entry : table.entries) {
    out << std::setw(static_cast<int>(letter_width)) << entry.error.letters() << "  ";
    for (int b : entry.bits) out << std::setw(3) << b;
    out << " " << entry.decimal << "\n";
  }
  return out.str();
}

std::string format_table_machine(const SyndromeTable& table) {
  std::ostringstream out;
  for (const SyndromeEntry& entry : table.entries)
    out << "error=" << entry.error.letters() << " syndrome=" << syndrome_bits_str(entry.bits)
        << " decimal=" << entry.decimal << "\n";
  return out.str();
}

}  // namespace stabforge
