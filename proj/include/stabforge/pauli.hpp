#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stabforge/errors.hpp"

namespace stabforge {

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char to_char(PauliLetter letter);

// n-qubit Pauli operator stored as X/Z bit planes plus a power-of-i phase.
// The letter at qubit j is read off the bit pair
// (x,z) = (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y,
// and the operator as a whole is i^phase times the letter tensor product.
// Qubit 0 is the leftmost letter. Values are immutable in practice: all
// operations return new strings.
class PauliString {
 public:
  explicit PauliString(int n);

  // Parses letter text such as "XZZXI"; the result always has phase +1.
  static PauliString parse(std::string_view text);

  // Identity except for `letter` on `qubit`, phase +1.
  static PauliString single(int n, int qubit, PauliLetter letter);

  int num_qubits() const { return n_; }
  bool x(int j) const { return x_[static_cast<size_t>(j)] != 0; }
  bool z(int j) const { return z_[static_cast<size_t>(j)] != 0; }
  PauliLetter letter(int j) const;
  void set_letter(int j, PauliLetter letter);

  // Exponent p in {0,1,2,3}: the operator carries a global factor i^p.
  int phase_exponent() const { return phase_; }
  void set_phase_exponent(int p);

  bool is_identity() const;
  int weight() const;  // number of non-identity letters

  // Letters only, no phase prefix.
  std::string letters() const;
  // Phase prefix ("", "i", "-", "-i") followed by the letters.
  std::string str() const;

  bool operator==(const PauliString& other) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> x_, z_;
  int phase_ = 0;
};

// Sum over qubits of x1*z2 + z1*x2 mod 2; 1 means the operators
// anticommute, 0 means they commute.
int symplectic_product(const PauliString& a, const PauliString& b);

// Operator product a*b with exact phase tracking.
PauliString multiply(const PauliString& a, const PauliString& b);

}  // namespace stabforge
