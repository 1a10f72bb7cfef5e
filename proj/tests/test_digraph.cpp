#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "consec/digraph.hpp"

using namespace consec;

namespace {

Digraph make(std::vector<std::string> labels,
             std::vector<std::pair<std::string, std::string>> edges) {
  Digraph g;
  std::map<std::string, int> idx;
  for (const std::string& l : labels) {
    idx[l] = g.vertex_count();
    g.labels.push_back(l);
  }
  for (auto& [u, v] : edges) g.edges.emplace_back(idx.at(u), idx.at(v));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// The word factor graphs the theory keeps returning to.
Digraph in_out_example() {
  return make({"rlr", "lrl", "rll", "rrl"}, {{"lrl", "rll"},
                                             {"lrl", "rlr"},
                                             {"rlr", "lrl"},
                                             {"rrl", "rll"},
                                             {"rrl", "rlr"}});
}

Digraph cycle_with_tail() {
  return make({"rlr", "lrl", "rll"},
              {{"rlr", "lrl"}, {"lrl", "rlr"}, {"lrl", "rll"}});
}

Digraph two_loop_chain() {
  return make({"ll", "lr", "rr"},
              {{"ll", "ll"}, {"ll", "lr"}, {"lr", "rr"}, {"rr", "rr"}});
}

// All simple cycles, by DFS from every minimal start vertex.
bool brute_in_out_cycle(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (auto [u, v] : g.edges) {
    ++outdeg[u];
    ++indeg[v];
  }
  auto adj = g.out_adjacency();
  bool found = false;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    if (found) return;
    for (int w : adj[v]) {
      if (w == start) {
        bool in_ok = false, out_ok = false;
        for (int u : path) {
          in_ok = in_ok || indeg[u] > 1;
          out_ok = out_ok || outdeg[u] > 1;
        }
        if (in_ok && out_ok) found = true;
      } else if (w > start && !on_path[w]) {
        path.push_back(w);
        on_path[w] = true;
        self(self, start, w);
        on_path[w] = false;
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    path = {s};
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(dfs, s, s);
  }
  return found;
}

Digraph random_digraph(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::bernoulli_distribution edge(0.3);
  Digraph g;
  int n = size(rng);
  for (int v = 0; v < n; ++v) g.labels.push_back(std::to_string(v));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (edge(rng)) g.edges.emplace_back(u, v);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace

TEST_CASE("sccs partitions and orders components") {
  CHECK(sccs(two_loop_chain()).size() == 3);

  Digraph lone = make({"v"}, {});
  CHECK(sccs(lone).size() == 1);

  std::vector<std::vector<int>> comps = sccs(cycle_with_tail());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});  // rlr, lrl
  CHECK(comps[1] == std::vector<int>{2});     // rll

  // Topological order of the condensation: edges go forward.
  Digraph chain = make({"a", "b", "c"}, {{"b", "c"}, {"a", "b"}});
  std::vector<std::vector<int>> cs = sccs(chain);
  CHECK(cs == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("strong connectivity") {
  CHECK_FALSE(is_strongly_connected(two_loop_chain()));
  CHECK(is_strongly_connected(make({"v"}, {})));
  CHECK(is_strongly_connected(
      make({"a", "b"},
           {{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}})));
  CHECK_THROWS_AS(is_strongly_connected(Digraph{}), InputError);
}

TEST_CASE("cycle detection") {
  Digraph loop = make({"v"}, {{"v", "v"}});
  CHECK(has_cycle(loop) == std::vector<int>{0, 0});

  std::optional<std::vector<int>> c = has_cycle(in_out_example());
  REQUIRE(c.has_value());
  CHECK(*c == std::vector<int>{0, 1, 0});  // rlr -> lrl -> rlr

  Digraph dag = make({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK_FALSE(has_cycle(dag));
}

TEST_CASE("in-out cycles") {
  std::optional<InOutCycleWitness> w = has_in_out_cycle(in_out_example());
  REQUIRE(w.has_value());
  CHECK(w->cycle.front() == w->cycle.back());
  for (size_t i = 0; i + 1 < w->cycle.size(); ++i)
    CHECK(in_out_example().has_edge(w->cycle[i], w->cycle[i + 1]));
  int indeg = 0, outdeg = 0;
  for (auto [u, v] : in_out_example().edges) {
    if (v == w->in_vertex) ++indeg;
    if (u == w->out_vertex) ++outdeg;
  }
  CHECK(indeg > 1);
  CHECK(outdeg > 1);

  CHECK_FALSE(has_in_out_cycle(cycle_with_tail()));
  CHECK_FALSE(has_in_out_cycle(make({"v"}, {{"v", "v"}})));
}

TEST_CASE("in-out cycle detection matches brute force on random digraphs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    Digraph g = random_digraph(rng, 7);
    CHECK(has_in_out_cycle(g).has_value() == brute_in_out_cycle(g));
  }
}

TEST_CASE("bicycle recognition") {
  std::optional<BicycleDecomposition> d = is_bicycle(two_loop_chain());
  REQUIRE(d.has_value());
  CHECK(d->initial_cycle == std::vector<int>{0});
  CHECK(d->terminal_cycle == std::vector<int>{2});
  CHECK(d->connecting_path == std::vector<int>{0, 1, 2});

  Digraph hexagon = make({"0", "1", "2", "3", "4", "5"},
                         {{"0", "1"},
                          {"1", "2"},
                          {"2", "3"},
                          {"3", "4"},
                          {"4", "5"},
                          {"5", "0"}});
  std::optional<BicycleDecomposition> h = is_bicycle(hexagon);
  REQUIRE(h.has_value());
  CHECK(h->initial_cycle.has_value());
  CHECK(h->connecting_path.empty());

  Digraph disjoint = make({"a", "b"}, {{"a", "a"}, {"b", "b"}});
  CHECK_FALSE(is_bicycle(disjoint));
  CHECK(bicycle_violation_vertex(disjoint) >= 0);

  CHECK(is_bicycle(make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})));
  CHECK(is_bicycle(make({"v"}, {{"v", "v"}})));
  CHECK(is_bicycle(make({"v"}, {})));
  CHECK_FALSE(is_bicycle(in_out_example()));

  // cycle rlr <-> lrl plus the tail lrl -> rll: initial cycle and path
  std::optional<BicycleDecomposition> tail = is_bicycle(cycle_with_tail());
  REQUIRE(tail.has_value());
  CHECK(tail->initial_cycle.has_value());
  CHECK_FALSE(tail->terminal_cycle.has_value());
  CHECK(d->connecting_path.back() == 2);
}

TEST_CASE("bicycles never contain in-out cycles") {
  std::mt19937 rng(7);
  int seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Digraph g = random_digraph(rng, 5);
    if (is_bicycle(g)) {
      ++seen;
      CHECK_FALSE(has_in_out_cycle(g));
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("bicycle decomposition covers the graph exactly") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    Digraph g = random_digraph(rng, 5);
    std::optional<BicycleDecomposition> d = is_bicycle(g);
    if (!d) continue;
    std::set<int> covered(d->connecting_path.begin(),
                          d->connecting_path.end());
    std::set<std::pair<int, int>> covered_edges;
    for (size_t i = 0; i + 1 < d->connecting_path.size(); ++i)
      covered_edges.insert({d->connecting_path[i], d->connecting_path[i + 1]});
    for (const auto& cyc : {d->initial_cycle, d->terminal_cycle}) {
      if (!cyc) continue;
      for (size_t i = 0; i < cyc->size(); ++i) {
        covered.insert((*cyc)[i]);
        covered_edges.insert({(*cyc)[i], (*cyc)[(i + 1) % cyc->size()]});
      }
    }
    CHECK(static_cast<int>(covered.size()) == g.vertex_count());
    CHECK(covered_edges ==
          std::set<std::pair<int, int>>(g.edges.begin(), g.edges.end()));
  }
}

TEST_CASE("deterministic DOT output") {
  CHECK(to_dot(make({"a\"q", "b"}, {{"a\"q", "b"}})) ==
        "digraph G {\n"
        "  0 [label=\"a\\\"q\"];\n"
        "  1 [label=\"b\"];\n"
        "  0 -> 1;\n"
        "}\n");
  CHECK(to_dot(two_loop_chain()) == to_dot(two_loop_chain()));
}
