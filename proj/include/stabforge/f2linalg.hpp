#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabforge/errors.hpp"
#include "stabforge/pauli.hpp"

namespace stabforge {

// Dense GF(2) matrix, row-major.
class BinMatrix {
 public:
  BinMatrix(int rows, int cols);

  // Builds from rows of '0'/'1' text, e.g. {"1101100", "1011010"}.
  static BinMatrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return bits_[index(r, c)]; }
  void set(int r, int c, int v) { bits_[index(r, c)] = v ? 1 : 0; }

  void xor_row(int dst, int src);
  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  std::vector<std::uint8_t> row(int r) const;
  std::string row_str(int r) const;
  int rank() const;

  bool operator==(const BinMatrix& other) const = default;

 private:
  size_t index(int r, int c) const;
  int rows_, cols_;
  std::vector<std::uint8_t> bits_;
};

// True iff v is a GF(2) combination of the rows of m.
bool row_space_contains(const BinMatrix& m, const std::vector<std::uint8_t>& v);

// (n-k) x 2n stabilizer check matrix split into X and Z blocks.
// Rows must pairwise commute (zero symplectic product) and be independent.
struct CheckMatrix {
  int n = 0;
  int k = 0;
  BinMatrix xblock{1, 1};
  BinMatrix zblock{1, 1};

  static CheckMatrix from_generators(const std::vector<PauliString>& generators);

  int num_rows() const { return n - k; }
  PauliString row(int i) const;      // phase +1 letters of row i
  std::vector<std::uint8_t> joint_row(int i) const;  // 2n bits, X then Z
  void validate() const;             // throws ValidationError on violation
};

// Gottesman standard form
//   [ I1 A1 A2 | B  C1 C2 ]
//   [ 0  0  0  | D  I2 E  ]
// with the applied qubit relabeling recorded in perm:
// column j of hs is original qubit perm[j].
struct StandardForm {
  CheckMatrix hs;
  int r = 0;
  std::vector<int> perm;
  BinMatrix a1{1, 1}, a2{1, 1}, b{1, 1}, c1{1, 1}, c2{1, 1}, d{1, 1}, e{1, 1};
  std::vector<PauliString> xlogical;  // k rows, X_i = [0 E^T I | E^T C1^T + C2^T, 0, 0]
  std::vector<PauliString> zlogical;  // k rows, Z_i = [0 0 0 | A2^T 0 I]

  bool perm_is_identity() const;
};

// Reduces h to standard form by Gauss-Jordan elimination over GF(2),
// relabeling qubit columns when a pivot is unavailable. Deterministic:
// pivots take the lowest remaining row; a stuck column is swapped with the
// lowest later column holding a 1. A CSS-layout matrix whose X rows end in
// an identity block (and whose leading block is singular) is first
// relabeled by rotating that identity block to the front, the systematic
// relabeling for codes built from [A|I] parity checks.
StandardForm to_standard_form(const CheckMatrix& h);

// Logical operators from the standard-form blocks.
std::pair<std::vector<PauliString>, std::vector<PauliString>> logical_operators(
    const StandardForm& sf);

// CSS construction: X block stacks [h1; 0], Z block stacks [0; h2].
// Requires h2 * h1^T = 0 over GF(2).
CheckMatrix css_check_matrix(const BinMatrix& h1, const BinMatrix& h2);

}  // namespace stabforge
