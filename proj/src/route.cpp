#include "stabforge/route.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace stabforge {

CouplingGraph CouplingGraph::grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw ValidationError("grid dimensions must be at least 1x1");
  CouplingGraph g;
  g.sites = rows * cols;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int site = r * cols + c;
      if (c + 1 < cols) g.add_edge(site, site + 1);
      if (r + 1 < rows) g.add_edge(site, site + cols);
    }
  }
  return g;
}

CouplingGraph grid_graph(int rows, int cols) { return CouplingGraph::grid(rows, cols); }

void CouplingGraph::add_edge(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= sites || b >= sites)
    throw ValidationError("invalid coupling edge");
  edges.insert({std::min(a, b), std::max(a, b)});
}

bool CouplingGraph::adjacent(int a, int b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::vector<int> CouplingGraph::neighbors(int site) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == site) out.push_back(b);
    if (b == site) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// BFS distances from `from`, optionally restricted to allowed sites.
std::vector<int> bfs_dist(const CouplingGraph& g, int from,
                          const std::vector<bool>* allowed = nullptr) {
  std::vector<int> dist(static_cast<size_t>(g.sites), -1);
  std::queue<int> frontier;
  dist[static_cast<size_t>(from)] = 0;
  frontier.push(from);
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop();
    for (int next : g.neighbors(cur)) {
      if (allowed && !(*allowed)[static_cast<size_t>(next)]) continue;
      if (dist[static_cast<size_t>(next)] < 0) {
        dist[static_cast<size_t>(next)] = dist[static_cast<size_t>(cur)] + 1;
        frontier.push(next);
      }
    }
  }
  return dist;
}

}  // namespace

bool CouplingGraph::connected() const {
  if (sites == 0) return false;
  const auto dist = bfs_dist(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int CouplingGraph::diameter() const {
  int best = 0;
  for (int s = 0; s < sites; ++s) {
    const auto dist = bfs_dist(*this, s);
    for (int d : dist) best = std::max(best, d);
  }
  return best;
}

int Layout::sites_needed() const {
  int best = -1;
  for (int s : site_of) best = std::max(best, s);
  return best + 1;
}

int Layout::logical_at(int site) const {
  for (size_t q = 0; q < site_of.size(); ++q)
    if (site_of[q] == site) return static_cast<int>(q);
  return -1;
}

void Layout::validate(const CouplingGraph& g, int nqubits) const {
  if (static_cast<int>(site_of.size()) < nqubits)
    throw ValidationError("layout covers " + std::to_string(site_of.size()) +
                          " qubits, circuit has " + std::to_string(nqubits));
  std::vector<bool> used(static_cast<size_t>(g.sites), false);
  for (size_t q = 0; q < site_of.size(); ++q) {
    const int s = site_of[q];
    if (s < 0 || s >= g.sites)
      throw ValidationError("layout places q" + std::to_string(q) + " on invalid site " +
                            std::to_string(s));
    if (used[static_cast<size_t>(s)])
      throw ValidationError("layout places two qubits on site " + std::to_string(s));
    used[static_cast<size_t>(s)] = true;
  }
}

RoutedResult route(const Circuit& c, const CouplingGraph& g, const Layout& l0) {
  if (!g.connected()) throw ValidationError("coupling graph is not connected");
  l0.validate(g, c.nqubits);

  std::vector<bool> occupied(static_cast<size_t>(g.sites), false);
  for (int q = 0; q < c.nqubits; ++q) occupied[static_cast<size_t>(l0.site(q))] = true;

  RoutedResult result;
  result.circuit = Circuit(c.nqubits, c.ncbits);
  result.final_layout = l0;
  Layout& cur = result.final_layout;

  std::vector<int> at_site(static_cast<size_t>(g.sites), -1);
  for (int q = 0; q < c.nqubits; ++q) at_site[static_cast<size_t>(cur.site(q))] = q;

  for (const Gate& gate : c.gates) {
    if (gate.kind == GateKind::CCX)
      throw ValidationError(
          "cannot route CCX: the coupling grid has no triangle of pairwise-adjacent sites");
    if (gate.qubits.size() == 2) {
      const int a = gate.qubits[0], b = gate.qubits[1];
      while (!g.adjacent(cur.site(a), cur.site(b))) {
        const auto dist = bfs_dist(g, cur.site(b), &occupied);
        const int sa = cur.site(a);
        if (dist[static_cast<size_t>(sa)] < 0)
          throw ValidationError("no path of occupied sites between gate operands");
        int step = -1;
        for (int nb : g.neighbors(sa)) {
          if (!occupied[static_cast<size_t>(nb)]) continue;
          if (dist[static_cast<size_t>(nb)] == dist[static_cast<size_t>(sa)] - 1) {
            step = nb;
            break;  // neighbors come back sorted: lowest site index wins
          }
        }
        if (step < 0)
          throw ValidationError("no path of occupied sites between gate operands");
        const int partner = at_site[static_cast<size_t>(step)];
        result.circuit.append(Gate::swap(a, partner));
        ++result.swap_count;
        std::swap(cur.site_of[static_cast<size_t>(a)],
                  cur.site_of[static_cast<size_t>(partner)]);
        std::swap(at_site[static_cast<size_t>(sa)], at_site[static_cast<size_t>(step)]);
      }
    }
    result.circuit.append(gate);
  }
  return result;
}

Circuit decompose_swaps(const Circuit& c) {
  Circuit out(c.nqubits, c.ncbits);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::SWAP) {
      out.append(Gate::cx(g.qubits[0], g.qubits[1]));
      out.append(Gate::cx(g.qubits[1], g.qubits[0]));
      out.append(Gate::cx(g.qubits[0], g.qubits[1]));
    } else {
      out.append(g);
    }
  }
  return out;
}

bool is_compliant(const Circuit& c, const CouplingGraph& g, const Layout& l0) {
  l0.validate(g, c.nqubits);
  Layout cur = l0;
  for (const Gate& gate : c.gates) {
    const auto& q = gate.qubits;
    if (q.size() >= 2) {
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = i + 1; j < q.size(); ++j)
          if (!g.adjacent(cur.site(q[i]), cur.site(q[j]))) return false;
    }
    if (gate.kind == GateKind::SWAP)
      std::swap(cur.site_of[static_cast<size_t>(q[0])], cur.site_of[static_cast<size_t>(q[1])]);
  }
  return true;
}

Circuit to_physical(const Circuit& c, const Layout& l0) {
  Layout cur = l0;
  auto wire_of_site = [&](int site) {
    const int w = l0.logical_at(site);
    if (w < 0) throw ValidationError("routed circuit touches an unoccupied site");
    return w;
  };
  Circuit out(c.nqubits, c.ncbits);
  for (const Gate& gate : c.gates) {
    Gate mapped = gate;
    for (size_t i = 0; i < gate.qubits.size(); ++i)
      mapped.qubits[i] = wire_of_site(cur.site(gate.qubits[i]));
    out.append(mapped);
    if (gate.kind == GateKind::SWAP)
      std::swap(cur.site_of[static_cast<size_t>(gate.qubits[0])],
                cur.site_of[static_cast<size_t>(gate.qubits[1])]);
  }
  return out;
}

std::vector<int> net_wire_permutation(const Layout& l0, const Layout& final_layout) {
  std::vector<int> perm(final_layout.site_of.size());
  for (size_t q = 0; q < final_layout.site_of.size(); ++q) {
    const int wire = l0.logical_at(final_layout.site_of[q]);
    if (wire < 0) throw ValidationError("final layout uses a site outside the initial layout");
    perm[q] = wire;
  }
  return perm;
}

std::pair<CouplingGraph, Layout> parse_layout(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int rows = -1, cols = -1;
  std::vector<std::pair<int, int>> placements;  // logical -> (row, col) in file order
  std::vector<int> logicals;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "grid") {
      if (tok.size() != 3)
        throw ValidationError("line " + std::to_string(line_no) + ": expected 'grid <rows> <cols>'");
      rows = std::stoi(tok[1]);
      cols = std::stoi(tok[2]);
      continue;
    }
    if (tok[0].size() >= 2 && tok[0][0] == 'q') {
      if (rows < 0)
        throw ValidationError("line " + std::to_string(line_no) + ": placement before grid header");
      if (tok.size() != 3)
        throw ValidationError("line " + std::to_string(line_no) + ": expected 'q<i> <row> <col>'");
      int logical = 0;
      try {
        logical = std::stoi(tok[0].substr(1));
      } catch (const std::exception&) {
        throw ValidationError("line " + std::to_string(line_no) + ": bad qubit label " + tok[0]);
      }
      logicals.push_back(logical);
      placements.emplace_back(std::stoi(tok[1]), std::stoi(tok[2]));
      continue;
    }
    throw ValidationError("line " + std::to_string(line_no) + ": unrecognized layout line");
  }
  if (rows < 0) throw ValidationError("layout file is missing the grid header");
  CouplingGraph g = CouplingGraph::grid(rows, cols);
  Layout l;
  l.site_of.assign(placements.size(), -1);
  for (size_t i = 0; i < placements.size(); ++i) {
    const int q = logicals[i];
    if (q < 0 || q >= static_cast<int>(placements.size()))
      throw ValidationError("layout qubit label q" + std::to_string(q) + " out of range");
    if (l.site_of[static_cast<size_t>(q)] != -1)
      throw ValidationError("layout places q" + std::to_string(q) + " twice");
    const auto [r, c] = placements[i];
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw ValidationError("layout places q" + std::to_string(q) + " off the grid");
    l.site_of[static_cast<size_t>(q)] = r * cols + c;
  }
  l.validate(g, static_cast<int>(l.site_of.size()));
  return {g, l};
}

std::string serialize_layout(int rows, int cols, const Layout& l) {
  std::ostringstream out;
  out << "grid " << rows << " " << cols << "\n";
  for (size_t q = 0; q < l.site_of.size(); ++q)
    out << "q" << q << " " << l.site_of[q] / cols << " " << l.site_of[q] % cols << "\n";
  return out.str();
}

}  // namespace stabforge
