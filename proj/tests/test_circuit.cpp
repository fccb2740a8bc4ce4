#include "stabforge/circuit.hpp"

#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "stabforge/sim.hpp"

using namespace stabforge;

namespace {

Circuit random_circuit(std::mt19937_64& rng, int max_qubits = 5, int max_gates = 20,
                       bool with_measure = true) {
  std::uniform_int_distribution<int> width(1, max_qubits);
  const int n = width(rng);
  std::uniform_int_distribution<int> length(0, max_gates);
  std::uniform_int_distribution<int> qubit(0, n - 1);
  Circuit c(n, with_measure ? n : 0);
  const int gates = length(rng);
  std::uniform_int_distribution<int> kind_pick(0, with_measure ? 10 : 9);
  for (int i = 0; i < gates; ++i) {
    const auto kind = static_cast<GateKind>(kind_pick(rng));
    Gate g;
    g.kind = kind;
    switch (kind) {
      case GateKind::CX:
      case GateKind::CY:
      case GateKind::CZ:
      case GateKind::SWAP: {
        if (n < 2) continue;
        int a = qubit(rng), b = qubit(rng);
        while (b == a) b = qubit(rng);
        g.qubits = {a, b};
        break;
      }
      case GateKind::CCX: {
        if (n < 3) continue;
        int a = qubit(rng), b = qubit(rng), t = qubit(rng);
        while (b == a) b = qubit(rng);
        while (t == a || t == b) t = qubit(rng);
        g.qubits = {a, b, t};
        break;
      }
      case GateKind::Measure:
        g.qubits = {qubit(rng)};
        g.cbit = qubit(rng);
        break;
      default:
        g.qubits = {qubit(rng)};
        break;
    }
    c.append(g);
  }
  return c;
}

}  // namespace

TEST_CASE("serialize format") {
  Circuit c(2, 0);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  CHECK(serialize(c) == "qubits 2\ncbits 0\nH 0\nCX 0 1\n");
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nCX 0 0\n"), doctest::Contains("duplicate"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nH 5\n"), doctest::Contains("line 2"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nFOO 0\n"), doctest::Contains("unknown gate"),
                       ValidationError);
  CHECK_THROWS_AS(parse_circuit("H 0\n"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\ncbits 0\nM 0 -> 3\n"),
                       doctest::Contains("classical bit"), ValidationError);
}

TEST_CASE("parse ignores comments and blank lines") {
  const Circuit c = parse_circuit("# header\nqubits 2\ncbits 1\n\nH 0  # comment\nM 1 -> 0\n");
  CHECK(c.nqubits == 2);
  CHECK(c.ncbits == 1);
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0] == Gate::h(0));
  CHECK(c.gates[1] == Gate::measure(1, 0));
}

TEST_CASE("serialize and parse round-trip on random circuits") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = random_circuit(rng);
    CHECK(parse_circuit(serialize(c)) == c);
  }
}

TEST_CASE("gate counts") {
  Circuit empty(3, 0);
  for (const auto& [kind, count] : gate_counts(empty)) CHECK(count == 0);

  Circuit c(3, 1);
  c.append(Gate::h(0));
  c.append(Gate::h(1));
  c.append(Gate::cx(0, 1));
  c.append(Gate::measure(2, 0));
  const auto counts = gate_counts(c);
  CHECK(counts.at(GateKind::H) == 2);
  CHECK(counts.at(GateKind::CX) == 1);
  CHECK(counts.at(GateKind::Measure) == 1);
  CHECK(counts.at(GateKind::CZ) == 0);
}

TEST_CASE("optimize_trivial_z removes only gates on untouched zero qubits") {
  Circuit empty(2, 0);
  CHECK(optimize_trivial_z(empty, {0, 1}).gates.empty());

  Circuit c(3, 0);
  c.append(Gate::h(0));
  c.append(Gate::cz(0, 1));  // target 1 still |0>: removable
  c.append(Gate::z(2));      // qubit 2 still |0>: removable
  c.append(Gate::h(1));
  c.append(Gate::cz(0, 1));  // qubit 1 was targeted by H: stays
  const Circuit opt = optimize_trivial_z(c, {1, 2});
  REQUIRE(opt.gates.size() == 3);
  CHECK(opt.gates[0] == Gate::h(0));
  CHECK(opt.gates[1] == Gate::h(1));
  CHECK(opt.gates[2] == Gate::cz(0, 1));
}

TEST_CASE("optimization preserves the state exactly and never adds gates") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    const Circuit c = random_circuit(rng, 4, 14, /*with_measure=*/false);
    std::set<int> zero_init;
    for (int q = 0; q < c.nqubits; ++q)
      if (coin(rng)) zero_init.insert(q);
    const Circuit opt = optimize_trivial_z(c, zero_init);

    const auto before = gate_counts(c);
    const auto after = gate_counts(opt);
    for (const auto& [kind, count] : after) CHECK(count <= before.at(kind));

    // All basis inputs consistent with the zero-initialized set.
    for (int free_bits = 0; free_bits < (1 << c.nqubits); ++free_bits) {
      bool consistent = true;
      std::string bits(static_cast<size_t>(c.nqubits), '0');
      for (int q = 0; q < c.nqubits; ++q) {
        const bool one = (free_bits >> q) & 1;
        if (one && zero_init.count(q)) consistent = false;
        bits[static_cast<size_t>(q)] = one ? '1' : '0';
      }
      if (!consistent) continue;
      const StateVector in = init_basis(c.nqubits, bits);
      const StateVector a = run(c, in, 1).final;
      const StateVector b = run(opt, in, 1).final;
      REQUIRE(oracle::max_diff(a.amps, b.amps) <= 1e-12);
    }
  }
}
