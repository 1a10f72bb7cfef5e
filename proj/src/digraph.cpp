#include "consec/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace consec {

bool Digraph::has_edge(int u, int v) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Digraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(labels.size());
  for (auto [u, v] : edges) adj[u].push_back(v);
  return adj;
}

std::vector<std::vector<int>> Digraph::in_adjacency() const {
  std::vector<std::vector<int>> adj(labels.size());
  for (auto [u, v] : edges) adj[v].push_back(u);
  return adj;
}

std::vector<std::vector<int>> sccs(const Digraph& g) {
  int n = g.vertex_count();
  auto adj = g.out_adjacency();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int next_index = 0;

  // Iterative Tarjan; components come out in reverse topological order.
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<int, size_t>> call;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, edge_pos] = call.back();
      if (edge_pos == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      bool descended = false;
      while (edge_pos < adj[v].size()) {
        int w = adj[v][edge_pos++];
        if (index[w] == -1) {
          call.emplace_back(w, 0);
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        std::vector<int> component;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = static_cast<int>(out.size());
          component.push_back(w);
          if (w == v) break;
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_strongly_connected(const Digraph& g) {
  if (g.vertex_count() == 0) throw InputError("empty digraph");
  return sccs(g).size() == 1;
}

namespace {

// Shortest path from `from` to `to` through `allowed` vertices, breaking
// ties toward smaller predecessors; empty when unreachable.
std::vector<int> shortest_path(const Digraph& g, int from, int to,
                               const std::set<int>& allowed) {
  if (from == to) return {from};
  auto adj = g.out_adjacency();
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> queue{from};
  std::vector<bool> seen(g.vertex_count(), false);
  seen[from] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (!allowed.count(w) || seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      if (w == to) {
        std::vector<int> path{to};
        for (int cur = v; cur != -1; cur = parent[cur]) path.push_back(cur);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return {};
}

}  // namespace

std::optional<std::vector<int>> has_cycle(const Digraph& g) {
  auto adj = g.out_adjacency();
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (g.has_edge(start, start)) return std::vector<int>{start, start};
    // Shortest return walk start -> ... -> start; BFS paths are simple.
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<int> queue;
    for (int w : adj[start]) {
      if (w == start || seen[w]) continue;
      seen[w] = true;
      queue.push_back(w);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[v]) {
        if (w == start) {
          std::vector<int> cycle{start};
          std::vector<int> back;
          for (int cur = v; cur != -1; cur = parent[cur]) back.push_back(cur);
          std::reverse(back.begin(), back.end());
          cycle.insert(cycle.end(), back.begin(), back.end());
          cycle.push_back(start);
          return cycle;
        }
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<InOutCycleWitness> has_in_out_cycle(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (auto [u, v] : g.edges) {
    ++outdeg[u];
    ++indeg[v];
  }
  for (const auto& comp : sccs(g)) {
    bool cyclic = comp.size() >= 2 ||
                  (comp.size() == 1 && g.has_edge(comp[0], comp[0]));
    if (!cyclic) continue;
    int u = -1, v = -1;
    for (int w : comp) {
      if (u == -1 && indeg[w] > 1) u = w;
      if (v == -1 && outdeg[w] > 1) v = w;
    }
    if (u == -1 || v == -1) continue;
    // Any two vertices of one component lie on a common closed walk.
    std::set<int> allowed(comp.begin(), comp.end());
    std::vector<int> walk;
    if (u == v) {
      walk.push_back(u);
      auto adj = g.out_adjacency();
      std::sort(adj[u].begin(), adj[u].end());
      std::vector<int> ret;
      for (int w : adj[u]) {
        if (!allowed.count(w)) continue;
        ret = shortest_path(g, w, u, allowed);
        if (!ret.empty()) break;
      }
      walk.insert(walk.end(), ret.begin(), ret.end());
    } else {
      auto forward = shortest_path(g, u, v, allowed);
      auto back = shortest_path(g, v, u, allowed);
      walk = forward;
      walk.insert(walk.end(), back.begin() + 1, back.end());
    }
    return InOutCycleWitness{walk, u, v};
  }
  return std::nullopt;
}

namespace {

std::optional<BicycleDecomposition> bicycle_impl(const Digraph& g,
                                                 int* violation) {
  auto fail = [&](int v) -> std::optional<BicycleDecomposition> {
    if (violation) *violation = v;
    return std::nullopt;
  };
  int n = g.vertex_count();
  if (n == 0) return fail(-1);

  auto components = sccs(g);
  std::vector<int> comp_of(n, -1);
  for (size_t c = 0; c < components.size(); ++c)
    for (int v : components[c]) comp_of[v] = static_cast<int>(c);

  std::vector<std::vector<int>> cycles;  // simple-cycle vertex orders
  std::vector<int> cycle_of(n, -1);
  for (const auto& comp : components) {
    bool cyclic = comp.size() >= 2 ||
                  (comp.size() == 1 && g.has_edge(comp[0], comp[0]));
    if (!cyclic) continue;
    if (cycles.size() == 2) return fail(comp[0]);
    // The component must be exactly one simple cycle: one intra in- and
    // out-edge per vertex.
    std::set<int> members(comp.begin(), comp.end());
    std::vector<int> next(n, -1);
    for (int v : comp) {
      int intra_out = 0, intra_in = 0;
      for (auto [a, b] : g.edges) {
        if (a == v && members.count(b)) {
          ++intra_out;
          next[v] = b;
        }
        if (b == v && members.count(a)) ++intra_in;
      }
      if (intra_out != 1 || intra_in != 1) return fail(v);
    }
    std::vector<int> order{comp[0]};
    for (int cur = next[comp[0]]; cur != comp[0]; cur = next[cur])
      order.push_back(cur);
    for (int v : order) cycle_of[v] = static_cast<int>(cycles.size());
    cycles.push_back(std::move(order));
  }

  // Everything outside the cycles must be a single simple path.
  std::vector<std::pair<int, int>> path_edges;
  for (auto [u, v] : g.edges)
    if (cycle_of[u] == -1 || cycle_of[v] == -1 || cycle_of[u] != cycle_of[v])
      path_edges.push_back({u, v});

  std::vector<int> pout(n, -1), pin(n, -1);
  for (auto [u, v] : path_edges) {
    if (pout[u] != -1 || pin[v] != -1) return fail(u);
    pout[u] = v;
    pin[v] = u;
  }

  std::vector<int> path;
  if (!path_edges.empty()) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (pout[v] != -1 && pin[v] == -1) {
        if (start != -1) return fail(v);
        start = v;
      }
    if (start == -1) return fail(path_edges[0].first);
    std::set<int> visited;
    for (int cur = start; cur != -1; cur = pout[cur]) {
      if (visited.count(cur)) return fail(cur);
      visited.insert(cur);
      path.push_back(cur);
    }
    if (path.size() != path_edges.size() + 1) return fail(start);
  }

  BicycleDecomposition deco;
  if (path.empty()) {
    if (cycles.size() == 2) return fail(cycles[1][0]);  // disconnected cycles
    if (cycles.size() == 1) {
      if (static_cast<int>(cycles[0].size()) != n) return fail(-1);
      deco.initial_cycle = cycles[0];
      return deco;
    }
    if (n != 1) return fail(0);  // edgeless vertices beyond one
    deco.connecting_path = {0};
    return deco;
  }

  // Internal path vertices stay off the cycles.
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (cycle_of[path[i]] != -1) return fail(path[i]);
  int start_cycle = cycle_of[path.front()];
  int end_cycle = cycle_of[path.back()];
  if (cycles.size() == 2) {
    if (start_cycle == -1 || end_cycle == -1 || start_cycle == end_cycle)
      return fail(path.front());
    deco.initial_cycle = cycles[start_cycle];
    deco.terminal_cycle = cycles[end_cycle];
  } else if (cycles.size() == 1) {
    if (start_cycle == 0 && end_cycle == 0) return fail(path.front());
    if (start_cycle == 0)
      deco.initial_cycle = cycles[0];
    else if (end_cycle == 0)
      deco.terminal_cycle = cycles[0];
    else
      return fail(cycles[0][0]);  // cycle disconnected from the path
  }
  deco.connecting_path = path;

  // Exact cover of the vertex set.
  std::vector<bool> covered(n, false);
  for (const auto& cyc : cycles)
    for (int v : cyc) covered[v] = true;
  for (int v : path) covered[v] = true;
  for (int v = 0; v < n; ++v)
    if (!covered[v]) return fail(v);
  return deco;
}

}  // namespace

std::optional<BicycleDecomposition> is_bicycle(const Digraph& g) {
  return bicycle_impl(g, nullptr);
}

int bicycle_violation_vertex(const Digraph& g) {
  int violation = -1;
  if (bicycle_impl(g, &violation)) return -1;
  return violation;
}

std::string to_dot(const Digraph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string escaped;
    for (char c : g.labels[v]) {
      if (c == '"' || c == '\\') escaped.push_back('\\');
      escaped.push_back(c);
    }
    out << "  " << v << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [u, v] : g.edges) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace consec
