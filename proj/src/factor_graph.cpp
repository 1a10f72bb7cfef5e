#include "consec/factor_graph.hpp"

#include <algorithm>
#include <sstream>

namespace consec {

Problem make_problem(Kind kind, std::vector<Structure> basis, Limits limits) {
  std::vector<std::string> bad;
  std::vector<Structure> kept;
  std::vector<std::string> seen;
  for (const Structure& raw : basis) {
    if (raw.length < 1) {
      bad.push_back("length-0 structure is not a valid basis element");
      continue;
    }
    std::string why;
    try {
      if (!is_member(kind, raw))
        why = raw.encode() + " is not a member of kind " + kind.name_string();
    } catch (const InputError& e) {
      why = raw.encode() + ": " + e.what();
    }
    if (!why.empty()) {
      bad.push_back(why);
      continue;
    }
    std::string enc = raw.encode();
    if (std::find(seen.begin(), seen.end(), enc) != seen.end()) continue;
    seen.push_back(enc);
    kept.push_back(raw);
  }
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "invalid basis elements:";
    for (const std::string& b : bad) msg << "\n  " << b;
    throw InputError(msg.str());
  }
  Problem p{std::move(kind), std::move(kept), 1, limits};
  for (const Structure& s : p.basis) p.b = std::max(p.b, s.length);
  std::sort(p.basis.begin(), p.basis.end(), encoding_less);
  return p;
}

int FactorGraph::index_of(const Structure& s) const {
  auto it = index_.find(s.encode());
  return it == index_.end() ? -1 : it->second;
}

FactorGraph build(const Problem& p, int m) {
  if (m < p.b)
    throw InputError("factor-graph dimension must be at least the max basis length");
  FactorGraph fg;
  fg.m = m;
  for (Structure& s : enumerate_kind(p.kind, m, p.limits))
    if (avoids(s, p.basis)) fg.vertices.push_back(std::move(s));

  fg.graph.labels.reserve(fg.vertices.size());
  std::map<std::string, std::vector<int>> by_prefix;
  for (size_t i = 0; i < fg.vertices.size(); ++i) {
    fg.graph.labels.push_back(fg.vertices[i].encode());
    fg.index_[fg.graph.labels.back()] = static_cast<int>(i);
    by_prefix[restrict(fg.vertices[i], {1, m - 1}).encode()].push_back(
        static_cast<int>(i));
  }
  for (size_t u = 0; u < fg.vertices.size(); ++u) {
    std::string suffix = restrict(fg.vertices[u], {m - (m - 1) + 1, m}).encode();
    auto it = by_prefix.find(suffix);
    if (it == by_prefix.end()) continue;
    for (int v : it->second)
      fg.graph.edges.emplace_back(static_cast<int>(u), v);
  }
  std::sort(fg.graph.edges.begin(), fg.graph.edges.end());
  return fg;
}

std::vector<int> path_of(const Problem& p, const FactorGraph& fg,
                         const Structure& s) {
  if (s.length < fg.m)
    throw InputError("structure shorter than the factor-graph dimension");
  if (!avoids(s, p.basis))
    throw InputError("structure does not avoid the basis");
  std::vector<int> path;
  for (int i = 1; i + fg.m - 1 <= s.length; ++i) {
    int v = fg.index_of(restrict(s, {i, i + fg.m - 1}));
    if (v < 0) throw InputError("window is not a factor-graph vertex");
    path.push_back(v);
  }
  return path;
}

namespace {

std::vector<Structure> realize(const Problem& p, const FactorGraph& fg,
                               const std::vector<int>& path, int len_cap,
                               long max_results) {
  if (path.empty()) throw InputError("empty path");
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!fg.graph.has_edge(path[i], path[i + 1]))
      throw InputError("not a path of the factor graph");
  if (fg.m + static_cast<int>(path.size()) - 1 > len_cap)
    throw LimitError("path realization exceeds the length cap");

  std::vector<Structure> cands{fg.vertices[path[0]]};
  for (size_t step = 1; step < path.size(); ++step) {
    const Structure& vertex = fg.vertices[path[step]];
    std::vector<Structure> next;
    for (const Structure& c : cands) {
      for (Structure& theta :
           combine_all(p.kind, c, vertex, fg.m - 1, p.limits)) {
        // Combining guarantees the window path; basis avoidance of the new
        // rightmost windows is the only extra constraint.
        if (!avoids(theta, p.basis)) continue;
        next.push_back(std::move(theta));
        if (max_results > 0 &&
            static_cast<long>(next.size()) >= max_results &&
            step + 1 == path.size())
          return next;
      }
      if (static_cast<long>(next.size()) > p.limits.max_sigma)
        throw LimitError("path realization exceeds the candidate cap");
    }
    cands = std::move(next);
    if (cands.empty()) break;
  }
  std::sort(cands.begin(), cands.end(), encoding_less);
  return cands;
}

}  // namespace

std::vector<Structure> structures_of_path(const Problem& p,
                                          const FactorGraph& fg,
                                          const std::vector<int>& path,
                                          int len_cap) {
  return realize(p, fg, path, len_cap, 0);
}

bool sigma_at_least(const Problem& p, const FactorGraph& fg,
                    const std::vector<int>& path, long count) {
  int len = fg.m + static_cast<int>(path.size()) - 1;
  return static_cast<long>(realize(p, fg, path, len, count).size()) >= count;
}

namespace {

bool realize_dfs(const Problem& p, const FactorGraph& fg,
                 const std::vector<int>& path, size_t step,
                 const Structure& cur, long& budget, Structure& out) {
  if (budget-- <= 0) throw LimitError("path realization search budget spent");
  if (step == path.size()) {
    out = cur;
    return true;
  }
  const Structure& vertex = fg.vertices[path[step]];
  std::optional<Structure> quick =
      combine_any(p.kind, cur, vertex, fg.m - 1);
  if (quick && avoids(*quick, p.basis) &&
      realize_dfs(p, fg, path, step + 1, *quick, budget, out))
    return true;
  std::vector<Structure> options;
  try {
    options = combine_all(p.kind, cur, vertex, fg.m - 1, p.limits);
  } catch (const LimitError&) {
    return false;  // too many spanning choices; the quick witness was the shot
  }
  for (const Structure& theta : options) {
    if (quick && theta.encode() == quick->encode()) continue;
    if (!avoids(theta, p.basis)) continue;
    if (realize_dfs(p, fg, path, step + 1, theta, budget, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<Structure> realize_any(const Problem& p, const FactorGraph& fg,
                                     const std::vector<int>& path) {
  if (path.empty()) throw InputError("empty path");
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!fg.graph.has_edge(path[i], path[i + 1]))
      throw InputError("not a path of the factor graph");
  Structure out;
  long budget = p.limits.max_sigma;
  if (!avoids(fg.vertices[path[0]], p.basis)) return std::nullopt;
  if (realize_dfs(p, fg, path, 1, fg.vertices[path[0]], budget, out))
    return out;
  return std::nullopt;
}

}  // namespace consec
