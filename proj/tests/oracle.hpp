#pragma once

// Brute-force dense-matrix reference, independent of the simulator's
// pair-update path: gates are lifted to full 2^n x 2^n matrices built
// entry by entry from the textbook 2x2/4x4/8x8 unitaries, and Pauli
// strings become explicit Kronecker products.

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "stabforge/circuit.hpp"
#include "stabforge/pauli.hpp"
#include "stabforge/sim.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

inline Matrix zeros(size_t dim) { return Matrix(dim, std::vector<Complex>(dim, Complex{0, 0})); }

inline Matrix identity(size_t dim) {
  Matrix m = zeros(dim);
  for (size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

inline Matrix single_matrix(stabforge::PauliLetter letter) {
  using stabforge::PauliLetter;
  const Complex i{0, 1};
  switch (letter) {
    case PauliLetter::I: return {{1, 0}, {0, 1}};
    case PauliLetter::X: return {{0, 1}, {1, 0}};
    case PauliLetter::Y: return {{0, -i}, {i, 0}};
    case PauliLetter::Z: return {{1, 0}, {0, -1}};
  }
  return identity(2);
}

inline Matrix gate_unitary(stabforge::GateKind kind) {
  using stabforge::GateKind;
  const Complex i{0, 1};
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::H: return {{h, h}, {h, -h}};
    case GateKind::S: return {{1, 0}, {0, i}};
    case GateKind::X: return single_matrix(stabforge::PauliLetter::X);
    case GateKind::Y: return single_matrix(stabforge::PauliLetter::Y);
    case GateKind::Z: return single_matrix(stabforge::PauliLetter::Z);
    case GateKind::CX:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    case GateKind::CZ:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    case GateKind::CY:
      return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -i}, {0, 0, i, 0}};
    case GateKind::SWAP:
      return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    case GateKind::CCX: {
      Matrix m = identity(8);
      std::swap(m[6], m[7]);
      return m;
    }
    case GateKind::Measure: break;
  }
  throw std::runtime_error("no unitary for this gate kind");
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const size_t ra = a.size(), rb = b.size();
  Matrix out = zeros(ra * rb);
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < ra; ++j)
      for (size_t k = 0; k < rb; ++k)
        for (size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  const size_t dim = a.size();
  Matrix out = zeros(dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t k = 0; k < dim; ++k) {
      if (a[i][k] == Complex{0, 0}) continue;
      for (size_t j = 0; j < dim; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// Kronecker product over the letters, times i^phase. Qubit 0 is the
// leftmost factor, matching the simulator's index convention.
inline Matrix dense_pauli(const stabforge::PauliString& p) {
  Matrix m = single_matrix(p.letter(0));
  for (int j = 1; j < p.num_qubits(); ++j) m = kron(m, single_matrix(p.letter(j)));
  const std::array<Complex, 4> phases{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0},
                                      Complex{0, -1}};
  const Complex ph = phases[static_cast<size_t>(p.phase_exponent())];
  for (auto& row : m)
    for (auto& v : row) v *= ph;
  return m;
}

// Lifts a gate to n qubits: matrix entry (i, j) is the sub-unitary entry
// on the operand bits when all other bits agree, 0 otherwise. Operand
// order follows the gate definition (controls first).
inline Matrix lift_gate(const stabforge::Gate& g, int n) {
  const Matrix sub = gate_unitary(g.kind);
  const size_t dim = size_t{1} << n;
  size_t operand_mask = 0;
  for (int q : g.qubits) operand_mask |= size_t{1} << (n - 1 - q);
  auto sub_index = [&](size_t full) {
    size_t idx = 0;
    for (int q : g.qubits) idx = (idx << 1) | ((full >> (n - 1 - q)) & 1);
    return idx;
  };
  Matrix out = zeros(dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      if ((i & ~operand_mask) != (j & ~operand_mask)) continue;
      out[i][j] = sub[sub_index(i)][sub_index(j)];
    }
  return out;
}

inline std::vector<Complex> apply(const Matrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(v.size(), Complex{0, 0});
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline bool is_zero(const Matrix& m, double tol = 1e-12) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (std::abs(v) > tol) return false;
  return true;
}

inline Matrix add_scaled(const Matrix& a, const Matrix& b, Complex scale) {
  Matrix out = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) out[i][j] += scale * b[i][j];
  return out;
}

// 1 if AB + BA = 0, 0 if AB - BA = 0; anything else is a failure.
inline int commutator_sign(const stabforge::PauliString& a, const stabforge::PauliString& b) {
  const Matrix ma = dense_pauli(a), mb = dense_pauli(b);
  const Matrix ab = matmul(ma, mb), ba = matmul(mb, ma);
  if (is_zero(add_scaled(ab, ba, Complex{-1, 0}))) return 0;
  if (is_zero(add_scaled(ab, ba, Complex{1, 0}))) return 1;
  return -1;
}

inline std::vector<Complex> to_vec(const stabforge::StateVector& s) { return s.amps; }

inline double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline stabforge::StateVector random_state(int n, std::mt19937_64& rng) {
  stabforge::StateVector s(n);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double norm2 = 0.0;
  for (auto& amp : s.amps) {
    amp = Complex{gauss(rng), gauss(rng)};
    norm2 += std::norm(amp);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& amp : s.amps) amp *= scale;
  return s;
}

inline stabforge::PauliString random_pauli(int n, std::mt19937_64& rng) {
  stabforge::PauliString p(n);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int j = 0; j < n; ++j)
    p.set_letter(j, static_cast<stabforge::PauliLetter>(letter(rng)));
  return p;
}

}  // namespace oracle
