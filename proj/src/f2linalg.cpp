#include "stabforge/f2linalg.hpp"

#include <numeric>
#include <sstream>

namespace stabforge {

BinMatrix::BinMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) {
    rows_ = rows < 0 ? 0 : rows;
    cols_ = cols < 0 ? 0 : cols;
  }
  bits_.assign(static_cast<size_t>(rows_) * static_cast<size_t>(cols_), 0);
}

BinMatrix BinMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ValidationError("matrix needs at least one row");
  BinMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size())
      throw ValidationError("matrix rows have unequal lengths");
    for (size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] != '0' && rows[r][c] != '1')
        throw ValidationError("matrix rows must consist of 0s and 1s");
      m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c] == '1');
    }
  }
  return m;
}

size_t BinMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw ValidationError("matrix index out of range");
  return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
}

void BinMatrix::xor_row(int dst, int src) {
  for (int c = 0; c < cols_; ++c)
    bits_[index(dst, c)] ^= bits_[index(src, c)];
}

void BinMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c)
    std::swap(bits_[index(a, c)], bits_[index(b, c)]);
}

void BinMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r)
    std::swap(bits_[index(r, a)], bits_[index(r, b)]);
}

std::vector<std::uint8_t> BinMatrix::row(int r) const {
  std::vector<std::uint8_t> out(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out[static_cast<size_t>(c)] = bits_[index(r, c)];
  return out;
}

std::string BinMatrix::row_str(int r) const {
  std::string out(static_cast<size_t>(cols_), '0');
  for (int c = 0; c < cols_; ++c)
    if (at(r, c)) out[static_cast<size_t>(c)] = '1';
  return out;
}

int BinMatrix::rank() const {
  BinMatrix work = *this;
  int pivots = 0;
  for (int c = 0; c < cols_ && pivots < rows_; ++c) {
    int prow = -1;
    for (int r = pivots; r < rows_; ++r)
      if (work.at(r, c)) { prow = r; break; }
    if (prow < 0) continue;
    work.swap_rows(pivots, prow);
    for (int r = 0; r < rows_; ++r)
      if (r != pivots && work.at(r, c)) work.xor_row(r, pivots);
    ++pivots;
  }
  return pivots;
}

bool row_space_contains(const BinMatrix& m, const std::vector<std::uint8_t>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw ValidationError("vector length does not match matrix columns");
  // Eliminate v against the row-reduced matrix; zero residue means membership.
  BinMatrix work = m;
  std::vector<std::uint8_t> res = v;
  int pivots = 0;
  for (int c = 0; c < m.cols() && pivots < m.rows(); ++c) {
    int prow = -1;
    for (int r = pivots; r < m.rows(); ++r)
      if (work.at(r, c)) { prow = r; break; }
    if (prow < 0) continue;
    work.swap_rows(pivots, prow);
    for (int r = 0; r < m.rows(); ++r)
      if (r != pivots && work.at(r, c)) work.xor_row(r, pivots);
    if (res[static_cast<size_t>(c)]) {
      for (int cc = 0; cc < m.cols(); ++cc)
        res[static_cast<size_t>(cc)] ^= static_cast<std::uint8_t>(work.at(pivots, cc));
    }
    ++pivots;
  }
  for (auto bit : res)
    if (bit) return false;
  return true;
}

CheckMatrix CheckMatrix::from_generators(const std::vector<PauliString>& generators) {
  if (generators.empty()) throw ValidationError("code needs at least one stabilizer generator");
  const int n = generators[0].num_qubits();
  const int rows = static_cast<int>(generators.size());
  CheckMatrix h;
  h.n = n;
  h.k = n - rows;
  h.xblock = BinMatrix(rows, n);
  h.zblock = BinMatrix(rows, n);
  for (int i = 0; i < rows; ++i) {
    if (generators[static_cast<size_t>(i)].num_qubits() != n) {
      std::ostringstream msg;
      msg << "generator " << i << " has width "
          << generators[static_cast<size_t>(i)].num_qubits() << ", expected " << n;
      throw ValidationError(msg.str());
    }
    for (int j = 0; j < n; ++j) {
      h.xblock.set(i, j, generators[static_cast<size_t>(i)].x(j));
      h.zblock.set(i, j, generators[static_cast<size_t>(i)].z(j));
    }
  }
  h.validate();
  return h;
}

PauliString CheckMatrix::row(int i) const {
  PauliString p(n);
  for (int j = 0; j < n; ++j) {
    const bool xb = xblock.at(i, j), zb = zblock.at(i, j);
    p.set_letter(j, xb ? (zb ? PauliLetter::Y : PauliLetter::X)
                       : (zb ? PauliLetter::Z : PauliLetter::I));
  }
  return p;
}

std::vector<std::uint8_t> CheckMatrix::joint_row(int i) const {
  std::vector<std::uint8_t> out(static_cast<size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    out[static_cast<size_t>(j)] = static_cast<std::uint8_t>(xblock.at(i, j));
    out[static_cast<size_t>(n + j)] = static_cast<std::uint8_t>(zblock.at(i, j));
  }
  return out;
}

void CheckMatrix::validate() const {
  const int rows = num_rows();
  for (int i = 0; i < rows; ++i) {
    for (int j = i + 1; j < rows; ++j) {
      if (symplectic_product(row(i), row(j))) {
        std::ostringstream msg;
        msg << "generators " << i << " (" << row(i).letters() << ") and " << j << " ("
            << row(j).letters() << ") do not commute";
        throw ValidationError(msg.str());
      }
    }
  }
  BinMatrix joint(rows, 2 * n);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) {
      joint.set(i, j, xblock.at(i, j));
      joint.set(i, n + j, zblock.at(i, j));
    }
  }
  if (joint.rank() != rows)
    throw ValidationError("generators are dependent over GF(2)");
  if (rows > n) throw ValidationError("more generators than qubits");
}

bool StandardForm::perm_is_identity() const {
  for (size_t j = 0; j < perm.size(); ++j)
    if (perm[j] != static_cast<int>(j)) return false;
  return true;
}

namespace {

// Rotation used for CSS matrices given with systematic [A|I] classical
// blocks: put the identity block first. Applies only when the plain
// elimination would need column swaps anyway (leading block singular).
bool css_systematic_relabeling(const CheckMatrix& h, std::vector<int>& order) {
  const int n = h.n, rows = h.num_rows();
  int mx = 0;
  for (int i = 0; i < rows; ++i) {
    bool has_x = false, has_z = false;
    for (int j = 0; j < n; ++j) {
      has_x = has_x || h.xblock.at(i, j);
      has_z = has_z || h.zblock.at(i, j);
    }
    if (has_x && has_z) return false;  // mixed row: not CSS layout
    if (has_x) {
      if (i != mx) return false;  // X rows must come first
      ++mx;
    }
  }
  if (mx == 0 || mx >= n) return false;
  for (int i = 0; i < mx; ++i)
    for (int j = 0; j < mx; ++j)
      if (h.xblock.at(i, n - mx + j) != (i == j ? 1 : 0)) return false;
  BinMatrix lead(mx, mx);
  for (int i = 0; i < mx; ++i)
    for (int j = 0; j < mx; ++j) lead.set(i, j, h.xblock.at(i, j));
  if (lead.rank() == mx) return false;
  order.clear();
  for (int j = 0; j < mx; ++j) order.push_back(n - mx + j);
  for (int j = 0; j < n - mx; ++j) order.push_back(j);
  return true;
}

}  // namespace

StandardForm to_standard_form(const CheckMatrix& h) {
  h.validate();
  const int n = h.n, k = h.k, rows = h.num_rows();

  StandardForm sf;
  sf.hs = h;
  sf.perm.resize(static_cast<size_t>(n));
  std::iota(sf.perm.begin(), sf.perm.end(), 0);

  std::vector<int> order;
  if (css_systematic_relabeling(h, order)) {
    BinMatrix x(rows, n), z(rows, n);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < n; ++j) {
        x.set(i, j, h.xblock.at(i, order[static_cast<size_t>(j)]));
        z.set(i, j, h.zblock.at(i, order[static_cast<size_t>(j)]));
      }
    }
    sf.hs.xblock = x;
    sf.hs.zblock = z;
    sf.perm = order;
  }

  BinMatrix& x = sf.hs.xblock;
  BinMatrix& z = sf.hs.zblock;
  auto swap_qubits = [&](int a, int b) {
    x.swap_cols(a, b);
    z.swap_cols(a, b);
    std::swap(sf.perm[static_cast<size_t>(a)], sf.perm[static_cast<size_t>(b)]);
  };
  auto swap_generators = [&](int a, int b) {
    x.swap_rows(a, b);
    z.swap_rows(a, b);
  };

  // Stage 1: bring the X block to [I1 A1 A2; 0 0 0], rank r.
  int r = 0;
  while (r < rows) {
    int prow = -1;
    for (int i = r; i < rows && prow < 0; ++i)
      if (x.at(i, r)) prow = i;
    if (prow < 0) {
      int cbest = -1;
      for (int c = r + 1; c < n && cbest < 0; ++c)
        for (int i = r; i < rows; ++i)
          if (x.at(i, c)) { cbest = c; break; }
      if (cbest < 0) break;  // remaining X rows are zero: rank found
      swap_qubits(r, cbest);
      for (int i = r; i < rows && prow < 0; ++i)
        if (x.at(i, r)) prow = i;
    }
    swap_generators(r, prow);
    for (int i = 0; i < rows; ++i) {
      if (i != r && x.at(i, r)) {
        x.xor_row(i, r);
        z.xor_row(i, r);
      }
    }
    ++r;
  }
  sf.r = r;

  // Stage 2: bring the Z block of the zero-X rows to [D I2 E], touching
  // only those rows so the top blocks B, C1, C2 stay as stage 1 left them.
  for (int t = 0; t < rows - r; ++t) {
    const int prowpos = r + t, pcol = r + t;
    int prow = -1;
    for (int i = prowpos; i < rows && prow < 0; ++i)
      if (z.at(i, pcol)) prow = i;
    if (prow < 0) {
      int cbest = -1;
      for (int c = pcol + 1; c < n && cbest < 0; ++c)
        for (int i = prowpos; i < rows; ++i)
          if (z.at(i, c)) { cbest = c; break; }
      if (cbest < 0) throw ValidationError("generators are dependent over GF(2)");
      swap_qubits(pcol, cbest);
      for (int i = prowpos; i < rows && prow < 0; ++i)
        if (z.at(i, pcol)) prow = i;
    }
    swap_generators(prowpos, prow);
    for (int i = r; i < rows; ++i) {
      if (i != prowpos && z.at(i, pcol)) {
        z.xor_row(i, prowpos);
        x.xor_row(i, prowpos);
      }
    }
  }

  const int s = rows - r;  // n-k-r
  auto sub = [](const BinMatrix& m, int r0, int c0, int nr, int nc) {
    BinMatrix out(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) out.set(i, j, m.at(r0 + i, c0 + j));
    return out;
  };
  sf.a1 = sub(x, 0, r, r, s);
  sf.a2 = sub(x, 0, rows, r, k);
  sf.b = sub(z, 0, 0, r, r);
  sf.c1 = sub(z, 0, r, r, s);
  sf.c2 = sub(z, 0, rows, r, k);
  sf.d = sub(z, r, 0, s, r);
  sf.e = sub(z, r, rows, s, k);

  auto logicals = logical_operators(sf);
  sf.xlogical = std::move(logicals.first);
  sf.zlogical = std::move(logicals.second);
  return sf;
}

std::pair<std::vector<PauliString>, std::vector<PauliString>> logical_operators(
    const StandardForm& sf) {
  const int n = sf.hs.n, k = sf.hs.k, r = sf.r;
  const int s = n - k - r;
  std::vector<PauliString> xl, zl;
  for (int i = 0; i < k; ++i) {
    PauliString xi(n);
    for (int t = 0; t < s; ++t)
      if (sf.e.at(t, i)) xi.set_letter(r + t, PauliLetter::X);
    xi.set_letter(n - k + i, PauliLetter::X);
    // Z part V1 = E^T C1^T + C2^T over the first r qubits.
    for (int j = 0; j < r; ++j) {
      int bit = sf.c2.at(j, i);
      for (int t = 0; t < s; ++t) bit ^= sf.e.at(t, i) & sf.c1.at(j, t);
      if (bit) {
        xi.set_letter(j, xi.x(j) ? PauliLetter::Y : PauliLetter::Z);
      }
    }
    xl.push_back(xi);

    PauliString zi(n);
    for (int j = 0; j < r; ++j)
      if (sf.a2.at(j, i)) zi.set_letter(j, PauliLetter::Z);
    zi.set_letter(n - k + i, PauliLetter::Z);
    zl.push_back(zi);
  }
  return {xl, zl};
}

CheckMatrix css_check_matrix(const BinMatrix& h1, const BinMatrix& h2) {
  if (h1.cols() != h2.cols())
    throw ValidationError("CSS factors must have the same number of columns");
  const int n = h1.cols();
  for (int i = 0; i < h2.rows(); ++i) {
    for (int j = 0; j < h1.rows(); ++j) {
      int dot = 0;
      for (int c = 0; c < n; ++c) dot ^= h2.at(i, c) & h1.at(j, c);
      if (dot) {
        std::ostringstream msg;
        msg << "dual containment violated: h2 row " << i << " and h1 row " << j
            << " have odd overlap";
        throw ValidationError(msg.str());
      }
    }
  }
  const int rows = h1.rows() + h2.rows();
  if (rows > n) throw ValidationError("more generators than qubits");
  CheckMatrix h;
  h.n = n;
  h.k = n - rows;
  h.xblock = BinMatrix(rows, n);
  h.zblock = BinMatrix(rows, n);
  for (int i = 0; i < h1.rows(); ++i)
    for (int j = 0; j < n; ++j) h.xblock.set(i, j, h1.at(i, j));
  for (int i = 0; i < h2.rows(); ++i)
    for (int j = 0; j < n; ++j) h.zblock.set(h1.rows() + i, j, h2.at(i, j));
  h.validate();
  return h;
}

}  // namespace stabforge
