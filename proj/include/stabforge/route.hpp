#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stabforge/circuit.hpp"

namespace stabforge {

// Physical adjacency between sites. Must be connected.
struct CouplingGraph {
  int sites = 0;
  std::set<std::pair<int, int>> edges;  // pairs stored with first < second

  static CouplingGraph grid(int rows, int cols);

  void add_edge(int a, int b);
  bool adjacent(int a, int b) const;
  std::vector<int> neighbors(int site) const;  // ascending
  bool connected() const;
  int diameter() const;
};

CouplingGraph grid_graph(int rows, int cols);

// Injective map logical qubit -> physical site.
struct Layout {
  std::vector<int> site_of;

  int sites_needed() const;
  int site(int logical) const { return site_of[static_cast<size_t>(logical)]; }
  int logical_at(int site) const;  // -1 when unoccupied
  void validate(const CouplingGraph& g, int nqubits) const;

  bool operator==(const Layout& other) const = default;
};

struct RoutedResult {
  Circuit circuit;      // logical operands; SWAP(a,b) exchanges the sites of a and b
  Layout final_layout;  // where each logical qubit ends up
  int swap_count = 0;
};

// Greedy swap insertion: gates are processed in order and when a 2-qubit
// gate's operands sit on non-adjacent sites, the first operand is moved
// along a shortest path of occupied sites (ties broken by lowest site
// index) until adjacent, one SWAP per step. Swaps are not undone;
// final_layout records the net placement. CCX gates are rejected: a grid
// has no triangle of pairwise-adjacent sites.
RoutedResult route(const Circuit& c, const CouplingGraph& g, const Layout& l0);

// Each SWAP(a,b) becomes CX(a,b) CX(b,a) CX(a,b); other gates pass through.
Circuit decompose_swaps(const Circuit& c);

// Replays the layout through the circuit's SWAP gates and checks that
// every multi-qubit gate acts on pairwise-adjacent sites at its point in
// the list.
bool is_compliant(const Circuit& c, const CouplingGraph& g, const Layout& l0);

// Rewrites a routed (logical-operand) circuit onto fixed wires that are in
// one-to-one correspondence with the initial sites: wire w is the site
// l0.site(w). SWAPs become literal state swaps, so the result can be fed
// directly to the simulator. Logical qubit q's state ends on the wire
// holding its final site.
Circuit to_physical(const Circuit& c, const Layout& l0);

// Wire permutation left behind by routing: entry q is the wire of
// to_physical's output that holds logical qubit q's state.
std::vector<int> net_wire_permutation(const Layout& l0, const Layout& final_layout);

// Layout file: "grid <rows> <cols>" then one "q<i> <row> <col>" line per
// logical qubit.
std::pair<CouplingGraph, Layout> parse_layout(std::string_view text);
std::string serialize_layout(int rows, int cols, const Layout& l);

}  // namespace stabforge
