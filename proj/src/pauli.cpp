#include "stabforge/pauli.hpp"

#include <sstream>

namespace stabforge {

char to_char(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(int n) : n_(n) {
  if (n <= 0) throw ValidationError("Pauli string must have at least one qubit");
  x_.assign(static_cast<size_t>(n), 0);
  z_.assign(static_cast<size_t>(n), 0);
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw ValidationError("empty Pauli string");
  PauliString p(static_cast<int>(text.size()));
  for (size_t j = 0; j < text.size(); ++j) {
    switch (text[j]) {
      case 'I': break;
      case 'X': p.x_[j] = 1; break;
      case 'Z': p.z_[j] = 1; break;
      case 'Y': p.x_[j] = 1; p.z_[j] = 1; break;
      default: {
        std::ostringstream msg;
        msg << "invalid Pauli character '" << text[j] << "' at position " << j;
        throw ValidationError(msg.str());
      }
    }
  }
  return p;
}

PauliString PauliString::single(int n, int qubit, PauliLetter letter) {
  PauliString p(n);
  if (qubit < 0 || qubit >= n) throw ValidationError("qubit index out of range");
  p.set_letter(qubit, letter);
  return p;
}

PauliLetter PauliString::letter(int j) const {
  const bool xb = x(j), zb = z(j);
  if (xb && zb) return PauliLetter::Y;
  if (xb) return PauliLetter::X;
  if (zb) return PauliLetter::Z;
  return PauliLetter::I;
}

void PauliString::set_letter(int j, PauliLetter letter) {
  x_[static_cast<size_t>(j)] = (letter == PauliLetter::X || letter == PauliLetter::Y) ? 1 : 0;
  z_[static_cast<size_t>(j)] = (letter == PauliLetter::Z || letter == PauliLetter::Y) ? 1 : 0;
}

void PauliString::set_phase_exponent(int p) { phase_ = ((p % 4) + 4) % 4; }

bool PauliString::is_identity() const { return weight() == 0; }

int PauliString::weight() const {
  int w = 0;
  for (int j = 0; j < n_; ++j)
    if (x(j) || z(j)) ++w;
  return w;
}

std::string PauliString::letters() const {
  std::string s(static_cast<size_t>(n_), 'I');
  for (int j = 0; j < n_; ++j) s[static_cast<size_t>(j)] = to_char(letter(j));
  return s;
}

std::string PauliString::str() const {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  return std::string(prefix[phase_]) + letters();
}

int symplectic_product(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw ValidationError("symplectic product of Pauli strings with different widths");
  int acc = 0;
  for (int j = 0; j < a.num_qubits(); ++j)
    acc ^= (a.x(j) & b.z(j)) ^ (a.z(j) & b.x(j));
  return acc;
}

namespace {

// Phase exponent g with a*b = i^g * (a xor b) for single-qubit letters.
// Cyclic products XY=iZ, YZ=iX, ZX=iY carry i; the reversed orders carry -i.
int letter_phase(PauliLetter a, PauliLetter b) {
  if (a == PauliLetter::I || b == PauliLetter::I || a == b) return 0;
  const bool forward = (a == PauliLetter::X && b == PauliLetter::Y) ||
                       (a == PauliLetter::Y && b == PauliLetter::Z) ||
                       (a == PauliLetter::Z && b == PauliLetter::X);
  return forward ? 1 : 3;
}

}  // namespace

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw ValidationError("product of Pauli strings with different widths");
  PauliString out(a.num_qubits());
  int phase = a.phase_exponent() + b.phase_exponent();
  for (int j = 0; j < a.num_qubits(); ++j) {
    phase += letter_phase(a.letter(j), b.letter(j));
    const bool xb = a.x(j) ^ b.x(j);
    const bool zb = a.z(j) ^ b.z(j);
    out.set_letter(j, xb ? (zb ? PauliLetter::Y : PauliLetter::X)
                         : (zb ? PauliLetter::Z : PauliLetter::I));
  }
  out.set_phase_exponent(phase);
  return out;
}

}  // namespace stabforge
