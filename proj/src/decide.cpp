#include "consec/decide.hpp"

#include <algorithm>

#include "consec/oracle.hpp"

namespace consec {

std::string answer_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    default: return "undetermined";
  }
}

std::string Witness::type_string() const {
  switch (type) {
    case Type::cycle: return "cycle";
    case Type::in_out_cycle: return "in_out_cycle";
    case Type::not_strongly_connected: return "not_strongly_connected";
    case Type::not_bicycle: return "not_bicycle";
    case Type::missing_extension: return "missing_extension";
    case Type::antichain: return "antichain";
    case Type::non_joinable_pair: return "non_joinable_pair";
    default: return "none";
  }
}

namespace {

std::vector<std::string> label_vertices(const FactorGraph& fg,
                                        const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(fg.graph.labels[v]);
  return out;
}

// Least member of the avoidance set below length b, if any; used for the
// degenerate case where the factor graph has no vertices.
std::optional<Structure> least_short_member(const Problem& p) {
  for (int n = 1; n < p.b; ++n) {
    std::vector<Structure> cs = enumerate_avoidance(p, n);
    if (!cs.empty()) return cs.front();
  }
  return std::nullopt;
}

// Bounded search for a walk realized by at least two structures.  Walks of
// up to max(3, |V|) edges are tried, cycles first when cycles_only is set.
// Returns the walk when found; gives up quietly at the walk budget.
std::optional<std::vector<int>> find_ambiguous_walk(const Problem& p,
                                                    const FactorGraph& fg,
                                                    bool cycles_only) {
  int n = static_cast<int>(fg.vertices.size());
  int max_edges = std::max(3, n);
  auto adj = fg.graph.out_adjacency();
  long budget = p.limits.max_paths;
  std::vector<int> walk;
  std::optional<std::vector<int>> found;

  auto dfs = [&](auto&& self, int v) -> bool {
    if (budget-- <= 0) return false;
    walk.push_back(v);
    if (walk.size() >= 2 && (!cycles_only || walk.front() == walk.back())) {
      if (sigma_at_least(p, fg, walk, 2)) {
        found = walk;
        walk.pop_back();
        return true;
      }
    }
    if (static_cast<int>(walk.size()) <= max_edges)
      for (int w : adj[v])
        if (self(self, w)) {
          walk.pop_back();
          return true;
        }
    walk.pop_back();
    return false;
  };
  for (int v = 0; v < n && !found; ++v) dfs(dfs, v);
  return found;
}

}  // namespace

std::optional<Structure> extension_condition(const Problem& p) {
  if (p.b <= 1) return std::nullopt;
  std::vector<Structure> top = enumerate_avoidance(p, p.b);
  for (int n = 1; n < p.b; ++n)
    for (const Structure& s : enumerate_avoidance(p, n)) {
      bool extends = false;
      for (const Structure& t : top)
        if (consecutive_leq(s, t)) {
          extends = true;
          break;
        }
      if (!extends) return s;
    }
  return std::nullopt;
}

Verdict decide_wqo(const Problem& p) {
  Verdict v;
  v.problem = "wqo";
  v.dimension = p.b;
  if (p.kind.name == KindName::linear_order) {
    v.answer = Answer::yes;
    v.notes = "linear orders form a chain under the consecutive order";
    return v;
  }
  FactorGraph fg = build(p, p.b);
  if (fg.vertices.empty()) {
    v.answer = Answer::yes;
    v.notes = "avoidance set is finite: no members at the basis length";
    return v;
  }
  switch (p.kind.classification()) {
    case Classification::bountiful: {
      if (auto cyc = has_cycle(fg.graph)) {
        v.answer = Answer::no;
        v.witness.type = Witness::Type::cycle;
        v.witness.cycle = *cyc;
        v.witness.labels = label_vertices(fg, *cyc);
        v.notes =
            "factor-graph cycle pumps to an infinite antichain for this kind";
      } else {
        v.answer = Answer::yes;
        v.notes = "factor graph is acyclic, so the avoidance set is finite";
      }
      return v;
    }
    case Classification::valid_unambiguous: {
      if (auto ioc = has_in_out_cycle(fg.graph)) {
        v.answer = Answer::no;
        v.witness.type = Witness::Type::in_out_cycle;
        v.witness.cycle = ioc->cycle;
        v.witness.in_vertex = ioc->in_vertex;
        v.witness.out_vertex = ioc->out_vertex;
        v.witness.labels = label_vertices(fg, ioc->cycle);
        v.notes = "in-out cycle pumps to an infinite antichain of words";
      } else {
        v.answer = Answer::yes;
        v.notes = "no in-out cycle, so every antichain is finite";
      }
      return v;
    }
    case Classification::valid_other: {
      if (auto ioc = has_in_out_cycle(fg.graph)) {
        v.answer = Answer::no;
        v.witness.type = Witness::Type::in_out_cycle;
        v.witness.cycle = ioc->cycle;
        v.witness.in_vertex = ioc->in_vertex;
        v.witness.out_vertex = ioc->out_vertex;
        v.witness.labels = label_vertices(fg, ioc->cycle);
        v.notes = "in-out cycle pumps to an infinite antichain";
        return v;
      }
      if (auto amb = find_ambiguous_walk(p, fg, true)) {
        v.answer = Answer::no;
        v.witness.type = Witness::Type::cycle;
        v.witness.cycle = *amb;
        v.witness.labels = label_vertices(fg, *amb);
        v.notes =
            "cycle realized by more than one structure pumps to an infinite "
            "antichain";
        return v;
      }
      v.answer = Answer::undetermined;
      v.notes =
          "no in-out cycle and no ambiguous cycle found within the search "
          "bound; no complete criterion is known for this kind";
      return v;
    }
  }
  return v;
}

Verdict decide_atomicity(const Problem& p) {
  Verdict v;
  v.problem = "atomicity";
  v.dimension = p.b;
  if (p.kind.name == KindName::linear_order) {
    v.answer = Answer::yes;
    v.notes = "linear orders of any two lengths join into the longer one";
    return v;
  }
  if (auto missing = extension_condition(p)) {
    v.answer = Answer::no;
    v.witness.type = Witness::Type::missing_extension;
    v.witness.structures = {*missing};
    v.notes =
        "a short member has no consecutive extension to the basis length, "
        "so it joins with nothing longer";
    return v;
  }
  FactorGraph fg = build(p, p.b);
  if (fg.vertices.empty()) {
    // The extension condition passed, so nothing exists below length b
    // either: the avoidance set is empty.
    v.answer = Answer::yes;
    v.notes = "avoidance set is empty; joint embedding holds vacuously";
    return v;
  }
  std::vector<std::vector<int>> comps = sccs(fg.graph);
  bool sc = comps.size() == 1;
  auto fail_components = [&]() {
    v.witness.type = Witness::Type::not_strongly_connected;
    v.witness.component_a = comps[0].front();
    v.witness.component_b = comps.back().front();
    v.witness.labels = {fg.graph.labels[v.witness.component_a],
                        fg.graph.labels[v.witness.component_b]};
  };
  switch (p.kind.classification()) {
    case Classification::bountiful: {
      if (sc) {
        v.answer = Answer::yes;
        v.notes =
            "factor graph strongly connected and every short member extends";
      } else {
        v.answer = Answer::no;
        fail_components();
        v.notes =
            "factor graph splits into several strong components, so members "
            "from different components never join";
      }
      return v;
    }
    case Classification::valid_unambiguous: {
      if (sc || is_bicycle(fg.graph)) {
        v.answer = Answer::yes;
        v.notes =
            "factor graph is strongly connected or a bicycle and every short "
            "member extends";
      } else {
        v.answer = Answer::no;
        if (comps.size() > 1) {
          fail_components();
          v.notes = "factor graph is neither strongly connected nor a bicycle";
        } else {
          v.witness.type = Witness::Type::not_bicycle;
          v.witness.violation_vertex = bicycle_violation_vertex(fg.graph);
          v.witness.labels = {fg.graph.labels[v.witness.violation_vertex]};
          v.notes = "factor graph is neither strongly connected nor a bicycle";
        }
      }
      return v;
    }
    case Classification::valid_other: {
      if (sc) {
        v.answer = Answer::yes;
        v.notes =
            "factor graph strongly connected and every short member extends";
        return v;
      }
      if (!is_bicycle(fg.graph)) {
        v.answer = Answer::no;
        if (comps.size() > 1) {
          fail_components();
        } else {
          v.witness.type = Witness::Type::not_bicycle;
          v.witness.violation_vertex = bicycle_violation_vertex(fg.graph);
          v.witness.labels = {fg.graph.labels[v.witness.violation_vertex]};
        }
        v.notes = "factor graph is neither strongly connected nor a bicycle";
        return v;
      }
      if (auto amb = find_ambiguous_walk(p, fg, false)) {
        v.answer = Answer::no;
        v.witness.type = Witness::Type::cycle;
        v.witness.cycle = *amb;
        v.witness.labels = label_vertices(fg, *amb);
        v.notes =
            "bicycle with a walk realized by more than one structure; the "
            "realizations never join";
        return v;
      }
      v.answer = Answer::undetermined;
      v.notes =
          "bicycle with no ambiguous walk found within the search bound; no "
          "complete criterion is known for this kind";
      return v;
    }
  }
  return v;
}

namespace {

std::vector<int> pump_path(const std::vector<int>& cycle, int iu, int iv,
                           int src, int dst, int reps) {
  int len = static_cast<int>(cycle.size());
  std::vector<int> path{src};
  for (int r = 0; r < reps; ++r)
    for (int s = 0; s < len; ++s) path.push_back(cycle[(iu + s) % len]);
  // path now ends one step short of u; close the loop and run on to v
  path.push_back(cycle[iu]);
  if (iv != iu)
    for (int s = (iu + 1) % len;; s = (s + 1) % len) {
      path.push_back(cycle[s]);
      if (s == iv) break;
    }
  path.push_back(dst);
  return path;
}

}  // namespace

std::vector<Structure> antichain_witness(const Problem& p, int k) {
  if (k < 0) throw InputError("witness count must be non-negative");
  if (k == 0) return {};
  for (int m = p.b; m <= p.b + p.limits.max_lift; ++m) {
    FactorGraph fg = build(p, m);
    if (fg.vertices.empty()) break;
    auto ioc = has_in_out_cycle(fg.graph);
    if (!ioc) continue;
    std::vector<int> cycle(ioc->cycle.begin(), ioc->cycle.end() - 1);
    int len = static_cast<int>(cycle.size());
    auto pos = [&](int v) {
      return static_cast<int>(std::find(cycle.begin(), cycle.end(), v) -
                              cycle.begin());
    };
    int iu = pos(ioc->in_vertex), iv = pos(ioc->out_vertex);
    int cyc_pred = cycle[(iu - 1 + len) % len];
    int cyc_succ = cycle[(iv + 1) % len];
    auto in_adj = fg.graph.in_adjacency();
    auto out_adj = fg.graph.out_adjacency();
    auto off_cycle = [&](int v) {
      return std::find(cycle.begin(), cycle.end(), v) == cycle.end();
    };
    auto pick = [&](const std::vector<int>& options, int avoid) {
      int fallback = -1;
      for (int o : options) {
        if (o == avoid) continue;
        if (off_cycle(o)) return o;
        if (fallback < 0) fallback = o;
      }
      return fallback;
    };
    int src = pick(in_adj[ioc->in_vertex], cyc_pred);
    int dst = pick(out_adj[ioc->out_vertex], cyc_succ);
    if (src < 0 || dst < 0) continue;

    std::vector<Structure> xs;
    bool ok = true;
    for (int i = 1; i <= k && ok; ++i) {
      auto s = realize_any(p, fg, pump_path(cycle, iu, iv, src, dst, i));
      if (s)
        xs.push_back(std::move(*s));
      else
        ok = false;
    }
    if (ok && !verify_antichain(p, xs)) return xs;
  }
  throw LimitError("no verified antichain within the dimension-lifting cap");
}

}  // namespace consec
