#pragma once

#include <optional>
#include <string>
#include <vector>

#include "consec/errors.hpp"

namespace consec {

// Finite digraph with opaque vertex labels.  Loops allowed, no parallel
// edges.  Edges are kept sorted.
struct Digraph {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  bool has_edge(int u, int v) const;
  std::vector<std::vector<int>> out_adjacency() const;
  std::vector<std::vector<int>> in_adjacency() const;
};

// Strongly connected components in topological order of the condensation;
// vertices inside a component ascending.
std::vector<std::vector<int>> sccs(const Digraph& g);

// Throws InputError on the empty digraph.
bool is_strongly_connected(const Digraph& g);

// A simple cycle as a vertex sequence v1..vk,v1 (first repeated at the
// end), if any cycle exists.  Deterministic: smallest start vertex, then
// shortest, ties by smallest predecessor.
std::optional<std::vector<int>> has_cycle(const Digraph& g);

struct InOutCycleWitness {
  std::vector<int> cycle;  // closed walk, first vertex repeated at the end
  int in_vertex = -1;      // on the cycle, ambient in-degree > 1
  int out_vertex = -1;     // on the cycle, ambient out-degree > 1
};

// Present iff some cycle contains a vertex of ambient in-degree > 1 and a
// vertex of ambient out-degree > 1.  Decided per strongly connected
// component; the witness cycle may repeat vertices.
std::optional<InOutCycleWitness> has_in_out_cycle(const Digraph& g);

// Two optional vertex-disjoint simple cycles joined by a simple path whose
// internal vertices avoid both cycles; the parts cover the digraph exactly.
// Cycles are stored without the closing repeat.
struct BicycleDecomposition {
  std::optional<std::vector<int>> initial_cycle;
  std::optional<std::vector<int>> terminal_cycle;
  std::vector<int> connecting_path;
};

std::optional<BicycleDecomposition> is_bicycle(const Digraph& g);

// A vertex witnessing why g is not a bicycle (best effort; -1 when g is a
// bicycle or has no vertices).
int bicycle_violation_vertex(const Digraph& g);

// Deterministic byte output: vertices in index order, edges sorted.
std::string to_dot(const Digraph& g, const std::string& name = "G");

}  // namespace consec
