#include "stabforge/sim.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <random>

namespace stabforge {

namespace {

constexpr Amplitude kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

size_t bit_mask(const StateVector& s, int qubit) {
  return size_t{1} << (s.n - 1 - qubit);
}

}  // namespace

StateVector::StateVector(int n) : n(n) {
  if (n <= 0) throw ValidationError("state needs at least one qubit");
  if (n > kMaxSimQubits)
    throw ValidationError("state width " + std::to_string(n) + " exceeds the simulator cap of " +
                          std::to_string(kMaxSimQubits) + " qubits");
  amps.assign(size_t{1} << n, Amplitude{0.0, 0.0});
}

StateVector StateVector::basis(int n, std::string_view bits) {
  if (static_cast<int>(bits.size()) != n)
    throw ValidationError("bit string length " + std::to_string(bits.size()) +
                          " does not match qubit count " + std::to_string(n));
  StateVector s(n);
  size_t index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') throw ValidationError("bit string must consist of 0s and 1s");
    index = (index << 1) | static_cast<size_t>(b == '1');
  }
  s.amps[index] = 1.0;
  return s;
}

StateVector init_basis(int n, std::string_view bits) { return StateVector::basis(n, bits); }

double StateVector::norm() const {
  double acc = 0.0;
  for (const Amplitude& a : amps) acc += std::norm(a);
  return std::sqrt(acc);
}

namespace {

template <typename Update>
void for_each_pair(StateVector& s, int qubit, Update&& update) {
  const size_t t = bit_mask(s, qubit);
  for (size_t i = 0; i < s.amps.size(); ++i)
    if (!(i & t)) update(s.amps[i], s.amps[i | t]);
}

template <typename Update>
void for_each_controlled_pair(StateVector& s, int control, int target, Update&& update) {
  const size_t cm = bit_mask(s, control);
  const size_t tm = bit_mask(s, target);
  for (size_t i = 0; i < s.amps.size(); ++i)
    if ((i & cm) && !(i & tm)) update(s.amps[i], s.amps[i | tm]);
}

}  // namespace

void apply_gate_inplace(StateVector& s, const Gate& g) {
  for (int q : g.qubits)
    if (q < 0 || q >= s.n) throw ValidationError("gate operand out of range for state width");
  switch (g.kind) {
    case GateKind::H:
      for_each_pair(s, g.qubits[0], [](Amplitude& a0, Amplitude& a1) {
        const Amplitude v0 = a0, v1 = a1;
        a0 = kInvSqrt2 * (v0 + v1);
        a1 = kInvSqrt2 * (v0 - v1);
      });
      break;
    case GateKind::S:
      for_each_pair(s, g.qubits[0], [](Amplitude&, Amplitude& a1) { a1 *= kI; });
      break;
    case GateKind::X:
      for_each_pair(s, g.qubits[0], [](Amplitude& a0, Amplitude& a1) { std::swap(a0, a1); });
      break;
    case GateKind::Y:
      for_each_pair(s, g.qubits[0], [](Amplitude& a0, Amplitude& a1) {
        const Amplitude v0 = a0, v1 = a1;
        a0 = -kI * v1;
        a1 = kI * v0;
      });
      break;
    case GateKind::Z:
      for_each_pair(s, g.qubits[0], [](Amplitude&, Amplitude& a1) { a1 = -a1; });
      break;
    case GateKind::CX:
      for_each_controlled_pair(s, g.qubits[0], g.qubits[1],
                               [](Amplitude& a0, Amplitude& a1) { std::swap(a0, a1); });
      break;
    case GateKind::CY:
      for_each_controlled_pair(s, g.qubits[0], g.qubits[1], [](Amplitude& a0, Amplitude& a1) {
        const Amplitude v0 = a0, v1 = a1;
        a0 = -kI * v1;
        a1 = kI * v0;
      });
      break;
    case GateKind::CZ:
      for_each_controlled_pair(s, g.qubits[0], g.qubits[1],
                               [](Amplitude&, Amplitude& a1) { a1 = -a1; });
      break;
    case GateKind::CCX: {
      const size_t c1 = bit_mask(s, g.qubits[0]);
      const size_t c2 = bit_mask(s, g.qubits[1]);
      const size_t tm = bit_mask(s, g.qubits[2]);
      for (size_t i = 0; i < s.amps.size(); ++i)
        if ((i & c1) && (i & c2) && !(i & tm)) std::swap(s.amps[i], s.amps[i | tm]);
      break;
    }
    case GateKind::SWAP: {
      const size_t am = bit_mask(s, g.qubits[0]);
      const size_t bm = bit_mask(s, g.qubits[1]);
      for (size_t i = 0; i < s.amps.size(); ++i)
        if ((i & am) && !(i & bm)) std::swap(s.amps[i], s.amps[(i & ~am) | bm]);
      break;
    }
    case GateKind::Measure:
      throw ValidationError("measurement is handled by run(), not apply_gate");
  }
}

StateVector apply_gate(const StateVector& s, const Gate& g) {
  StateVector out = s;
  apply_gate_inplace(out, g);
  return out;
}

RunResult run(const Circuit& c, const StateVector& s0, std::uint64_t seed, double tol) {
  if (c.nqubits != s0.n)
    throw ValidationError("circuit width " + std::to_string(c.nqubits) +
                          " does not match state width " + std::to_string(s0.n));
  RunResult result{s0, std::vector<int>(static_cast<size_t>(c.ncbits), 0), {}};
  std::mt19937_64 rng(seed);
  for (const Gate& g : c.gates) {
    c.validate_gate(g);
    if (g.kind != GateKind::Measure) {
      apply_gate_inplace(result.final, g);
      continue;
    }
    const size_t qm = bit_mask(result.final, g.qubits[0]);
    double p_one = 0.0;
    for (size_t i = 0; i < result.final.amps.size(); ++i)
      if (i & qm) p_one += std::norm(result.final.amps[i]);

    MeasurementRecord rec;
    rec.qubit = g.qubits[0];
    rec.cbit = g.cbit;
    rec.p_one = p_one;
    if (p_one <= tol) {
      rec.outcome = 0;
      rec.deterministic = true;
    } else if (p_one >= 1.0 - tol) {
      rec.outcome = 1;
      rec.deterministic = true;
    } else {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      rec.outcome = unit(rng) < p_one ? 1 : 0;
      rec.deterministic = false;
    }
    const double keep = rec.outcome ? p_one : 1.0 - p_one;
    const double scale = 1.0 / std::sqrt(keep);
    for (size_t i = 0; i < result.final.amps.size(); ++i) {
      const bool bit = (i & qm) != 0;
      if (bit == (rec.outcome == 1))
        result.final.amps[i] *= scale;
      else
        result.final.amps[i] = 0.0;
    }
    result.cbits[static_cast<size_t>(g.cbit)] = rec.outcome;
    result.transcript.push_back(rec);
  }
  return result;
}

StateVector apply_pauli_error(const StateVector& s, const PauliString& e) {
  if (e.num_qubits() != s.n)
    throw ValidationError("error width does not match state width");
  size_t xmask = 0, zmask = 0;
  int y_count = 0;
  for (int j = 0; j < s.n; ++j) {
    const size_t m = bit_mask(s, j);
    if (e.x(j)) xmask |= m;
    if (e.z(j)) zmask |= m;
    if (e.x(j) && e.z(j)) ++y_count;
  }
  // Per qubit: X flips the bit, Z contributes (-1)^bit, Y = i * flip * (-1)^bit.
  static const Amplitude phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Amplitude global = phases[(e.phase_exponent() + y_count) % 4];
  StateVector out(s.n);
  for (size_t i = 0; i < s.amps.size(); ++i) {
    const int sign = std::popcount(i & zmask) % 2 ? -1 : 1;
    out.amps[i ^ xmask] = global * static_cast<double>(sign) * s.amps[i];
  }
  return out;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw ValidationError("inner product of states with different widths");
  std::complex<double> acc{0.0, 0.0};
  for (size_t i = 0; i < a.amps.size(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
  return acc;
}

bool equiv_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

EigenSign eigencheck(const StateVector& s, const PauliString& p, double tol) {
  const StateVector mapped = apply_pauli_error(s, p);
  bool plus = true, minus = true;
  for (size_t i = 0; i < s.amps.size(); ++i) {
    if (std::abs(mapped.amps[i] - s.amps[i]) > tol) plus = false;
    if (std::abs(mapped.amps[i] + s.amps[i]) > tol) minus = false;
    if (!plus && !minus) return EigenSign::Indeterminate;
  }
  if (plus) return EigenSign::Plus;
  if (minus) return EigenSign::Minus;
  return EigenSign::Indeterminate;
}

StateVector widen_with_ancillas(const StateVector& s, int extra) {
  if (extra == 0) return s;
  StateVector out(s.n + extra);
  for (size_t i = 0; i < s.amps.size(); ++i) out.amps[i << extra] = s.amps[i];
  return out;
}

StateVector reorder_qubits(const StateVector& s, const std::vector<int>& src_of) {
  if (static_cast<int>(src_of.size()) != s.n)
    throw ValidationError("permutation length does not match state width");
  std::vector<bool> seen(static_cast<size_t>(s.n), false);
  for (int src : src_of) {
    if (src < 0 || src >= s.n || seen[static_cast<size_t>(src)])
      throw ValidationError("qubit reorder is not a permutation");
    seen[static_cast<size_t>(src)] = true;
  }
  StateVector out(s.n);
  for (size_t i = 0; i < s.amps.size(); ++i) {
    size_t j = 0;
    for (int q = 0; q < s.n; ++q) {
      const size_t src_mask = bit_mask(s, src_of[static_cast<size_t>(q)]);
      j = (j << 1) | static_cast<size_t>((i & src_mask) != 0);
    }
    out.amps[j] = s.amps[i];
  }
  return out;
}

std::string dump_state(const StateVector& s) {
  std::string out;
  char line[80];
  for (size_t i = 0; i < s.amps.size(); ++i) {
    if (std::abs(s.amps[i]) < 1e-12) continue;
    std::string bits(static_cast<size_t>(s.n), '0');
    for (int j = 0; j < s.n; ++j)
      if (i & bit_mask(s, j)) bits[static_cast<size_t>(j)] = '1';
    double re = s.amps[i].real(), im = s.amps[i].imag();
    if (re == 0.0) re = 0.0;  // normalize -0
    if (im == 0.0) im = 0.0;
    std::snprintf(line, sizeof line, "|%s> %.12f %.12f\n", bits.c_str(), re, im);
    out += line;
  }
  return out;
}

}  // namespace stabforge
