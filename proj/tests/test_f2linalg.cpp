#include "stabforge/f2linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

using namespace stabforge;

namespace {

CheckMatrix five_qubit_hq() {
  return CheckMatrix::from_generators({
      PauliString::parse("XZZXI"),
      PauliString::parse("IXZZX"),
      PauliString::parse("XIXZZ"),
      PauliString::parse("ZXIXZ"),
  });
}

const std::vector<std::string> kHamming = {"1101100", "1011010", "0111001"};

CheckMatrix steane_hq() {
  return css_check_matrix(BinMatrix::from_rows(kHamming), BinMatrix::from_rows(kHamming));
}

std::string pauli_bits(const PauliString& p, bool zplane) {
  std::string out;
  for (int j = 0; j < p.num_qubits(); ++j)
    out += (zplane ? p.z(j) : p.x(j)) ? '1' : '0';
  return out;
}

// Shuffles a generator set without changing the group: random invertible
// GF(2) row mix plus a random qubit relabeling.
std::vector<PauliString> scramble(const std::vector<PauliString>& gens, std::mt19937_64& rng) {
  const int m = static_cast<int>(gens.size());
  const int n = gens[0].num_qubits();
  std::vector<PauliString> mixed = gens;
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int step = 0; step < 4 * m; ++step) {
    const int dst = pick(rng), src = pick(rng);
    if (dst != src) mixed[static_cast<size_t>(dst)] =
        multiply(mixed[static_cast<size_t>(dst)], mixed[static_cast<size_t>(src)]);
  }
  std::vector<int> relabel(static_cast<size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<PauliString> out;
  for (const PauliString& g : mixed) {
    PauliString p(n);
    for (int j = 0; j < n; ++j) p.set_letter(j, g.letter(relabel[static_cast<size_t>(j)]));
    out.push_back(p);
  }
  return out;
}

void check_standard_form_invariants(const CheckMatrix& h) {
  const StandardForm sf = to_standard_form(h);
  const int n = h.n, m = h.num_rows();

  // Block template: I1 on the first r diagonal entries, zero X tail, I2.
  for (int i = 0; i < sf.r; ++i)
    for (int j = 0; j < sf.r; ++j) CHECK(sf.hs.xblock.at(i, j) == (i == j ? 1 : 0));
  for (int i = sf.r; i < m; ++i)
    for (int j = 0; j < n; ++j) CHECK(sf.hs.xblock.at(i, j) == 0);
  for (int i = sf.r; i < m; ++i)
    for (int j = sf.r; j < m; ++j)
      CHECK(sf.hs.zblock.at(i, j) == (i == j ? 1 : 0));

  // Rows still commute and stay independent.
  sf.hs.validate();

  // Equal row spaces once the qubit relabeling is undone: column j of
  // hs carries original qubit perm[j].
  BinMatrix original(m, 2 * n);
  BinMatrix reduced(m, 2 * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const int orig = sf.perm[static_cast<size_t>(j)];
      original.set(i, j, h.xblock.at(i, j));
      original.set(i, n + j, h.zblock.at(i, j));
      reduced.set(i, orig, sf.hs.xblock.at(i, j));
      reduced.set(i, n + orig, sf.hs.zblock.at(i, j));
    }
  }
  for (int i = 0; i < m; ++i) {
    CHECK(row_space_contains(original, reduced.row(i)));
    CHECK(row_space_contains(reduced, original.row(i)));
  }

  // Logical operators commute with every row and pair up anticommuting.
  for (int i = 0; i < h.k; ++i) {
    for (int row = 0; row < m; ++row) {
      CHECK(symplectic_product(sf.xlogical[static_cast<size_t>(i)], sf.hs.row(row)) == 0);
      CHECK(symplectic_product(sf.zlogical[static_cast<size_t>(i)], sf.hs.row(row)) == 0);
    }
    for (int j = 0; j < h.k; ++j)
      CHECK(symplectic_product(sf.xlogical[static_cast<size_t>(i)],
                               sf.zlogical[static_cast<size_t>(j)]) == (i == j ? 1 : 0));
  }
}

}  // namespace

TEST_CASE("five-qubit standard form matches the worked reduction") {
  const StandardForm sf = to_standard_form(five_qubit_hq());
  CHECK(sf.r == 4);
  CHECK(sf.perm_is_identity());
  CHECK(sf.hs.xblock.row_str(0) == "10001");
  CHECK(sf.hs.xblock.row_str(1) == "01001");
  CHECK(sf.hs.xblock.row_str(2) == "00101");
  CHECK(sf.hs.xblock.row_str(3) == "00011");
  CHECK(sf.hs.zblock.row_str(0) == "11011");
  CHECK(sf.hs.zblock.row_str(1) == "00110");
  CHECK(sf.hs.zblock.row_str(2) == "11000");
  CHECK(sf.hs.zblock.row_str(3) == "10111");

  CHECK(pauli_bits(sf.xlogical[0], false) == "00001");
  CHECK(pauli_bits(sf.xlogical[0], true) == "10010");
  CHECK(pauli_bits(sf.zlogical[0], false) == "00000");
  CHECK(pauli_bits(sf.zlogical[0], true) == "11111");

  // Standard-form letters as printed in the derivation.
  CHECK(sf.hs.row(0).letters() == "YZIZY");
  CHECK(sf.hs.row(1).letters() == "IXZZX");
  CHECK(sf.hs.row(2).letters() == "ZZXIX");
  CHECK(sf.hs.row(3).letters() == "ZIZYY");
}

TEST_CASE("steane standard form reproduces the published relabeling") {
  const StandardForm sf = to_standard_form(steane_hq());
  CHECK(sf.r == 3);
  CHECK(sf.perm == std::vector<int>{4, 5, 6, 0, 1, 3, 2});
  CHECK(sf.hs.xblock.row_str(0) == "1001110");
  CHECK(sf.hs.xblock.row_str(1) == "0101011");
  CHECK(sf.hs.xblock.row_str(2) == "0010111");
  CHECK(sf.hs.zblock.row_str(3) == "1011001");
  CHECK(sf.hs.zblock.row_str(4) == "1100101");
  CHECK(sf.hs.zblock.row_str(5) == "1110010");
  for (int i = 0; i < 3; ++i) {
    CHECK(sf.hs.zblock.row_str(i) == "0000000");
    CHECK(sf.hs.xblock.row_str(3 + i) == "0000000");
  }
  CHECK(pauli_bits(sf.xlogical[0], false) == "0001101");
  CHECK(pauli_bits(sf.xlogical[0], true) == "0000000");
  CHECK(pauli_bits(sf.zlogical[0], false) == "0000000");
  CHECK(pauli_bits(sf.zlogical[0], true) == "0110001");
}

TEST_CASE("a matrix already in standard form is a fixed point") {
  const StandardForm once = to_standard_form(five_qubit_hq());
  const StandardForm twice = to_standard_form(once.hs);
  CHECK(twice.perm_is_identity());
  CHECK(twice.hs.xblock == once.hs.xblock);
  CHECK(twice.hs.zblock == once.hs.zblock);
}

TEST_CASE("logical operators with all-zero blocks") {
  const CheckMatrix h = CheckMatrix::from_generators(
      {PauliString::parse("XII"), PauliString::parse("IZI")});
  const StandardForm sf = to_standard_form(h);
  CHECK(sf.r == 1);
  CHECK(sf.xlogical[0].letters() == "IIX");
  CHECK(sf.zlogical[0].letters() == "IIZ");
}

TEST_CASE("standard form rejects bad inputs") {
  CHECK_THROWS_WITH_AS(CheckMatrix::from_generators(
                           {PauliString::parse("XZZXI"), PauliString::parse("XZZXI"),
                            PauliString::parse("IXZZX"), PauliString::parse("XIXZZ")}),
                       doctest::Contains("dependent"), ValidationError);
  CHECK_THROWS_WITH_AS(CheckMatrix::from_generators(
                           {PauliString::parse("XI"), PauliString::parse("ZI")}),
                       doctest::Contains("do not commute"), ValidationError);
}

TEST_CASE("css construction") {
  const CheckMatrix steane = steane_hq();
  CHECK(steane.n == 7);
  CHECK(steane.k == 1);
  CHECK(steane.row(0).letters() == "XXIXXII");
  CHECK(steane.row(3).letters() == "ZZIZZII");
  for (int i = 0; i < 3; ++i) {
    CHECK(steane.xblock.row_str(i) == kHamming[static_cast<size_t>(i)]);
    CHECK(steane.zblock.row_str(3 + i) == kHamming[static_cast<size_t>(i)]);
    CHECK(steane.zblock.row_str(i) == "0000000");
    CHECK(steane.xblock.row_str(3 + i) == "0000000");
  }

  const BinMatrix rep = BinMatrix::from_rows({"11"});
  const CheckMatrix small = css_check_matrix(rep, rep);
  CHECK(small.xblock.row_str(0) == "11");
  CHECK(small.xblock.row_str(1) == "00");
  CHECK(small.zblock.row_str(0) == "00");
  CHECK(small.zblock.row_str(1) == "11");
  CHECK(symplectic_product(small.row(0), small.row(1)) == 0);

  CHECK_THROWS_WITH_AS(
      css_check_matrix(BinMatrix::from_rows({"10"}), BinMatrix::from_rows({"10"})),
      doctest::Contains("dual containment"), ValidationError);
}

TEST_CASE("row space membership") {
  const BinMatrix m = BinMatrix::from_rows({"1100", "0110"});
  CHECK(row_space_contains(m, {0, 0, 0, 0}));
  CHECK(row_space_contains(m, {1, 0, 1, 0}));
  CHECK_FALSE(row_space_contains(m, {0, 0, 0, 1}));
  const BinMatrix rank1 = BinMatrix::from_rows({"101"});
  CHECK_FALSE(row_space_contains(rank1, {0, 1, 0}));
  CHECK_THROWS_AS(row_space_contains(rank1, {0, 1}), ValidationError);
}

TEST_CASE("standard form invariants hold across scrambled catalog codes") {
  std::mt19937_64 rng(23);
  const std::vector<std::vector<PauliString>> bases = {
      {PauliString::parse("XZZXI"), PauliString::parse("IXZZX"), PauliString::parse("XIXZZ"),
       PauliString::parse("ZXIXZ")},
      {PauliString::parse("XXXX"), PauliString::parse("ZZZZ")},
      {PauliString::parse("ZZIIIIIII"), PauliString::parse("ZIZIIIIII"),
       PauliString::parse("IIIZZIIII"), PauliString::parse("IIIZIZIII"),
       PauliString::parse("IIIIIIZZI"), PauliString::parse("IIIIIIZIZ"),
       PauliString::parse("XXXXXXIII"), PauliString::parse("XXXIIIXXX")},
  };
  for (const auto& gens : bases) {
    check_standard_form_invariants(CheckMatrix::from_generators(gens));
    for (int trial = 0; trial < 8; ++trial)
      check_standard_form_invariants(CheckMatrix::from_generators(scramble(gens, rng)));
  }
  check_standard_form_invariants(steane_hq());
}
