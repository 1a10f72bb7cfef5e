#include "consec/double_ascent.hpp"

#include <algorithm>
#include <set>

namespace consec {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::vector<int> consecutive_inversions(const Permutation& p) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

bool is_double_ascent(const Permutation& p) {
  return is_permutation(p) && consecutive_inversions(p).size() <= 1;
}

std::optional<int> value_consecutive_leq(const Permutation& s,
                                         const Permutation& t) {
  if (s.size() > t.size()) return std::nullopt;
  int n = static_cast<int>(t.size()), m = static_cast<int>(s.size());
  for (int k = 1; k + m - 1 <= n; ++k) {
    std::vector<int> window;
    for (int v : t)
      if (v >= k && v <= k + m - 1) window.push_back(v - k + 1);
    if (window == s) return k;
  }
  return std::nullopt;
}

Permutation associated_permutation(const std::string& w) {
  for (char c : w)
    if (c != 'l' && c != 'r') throw InputError("word must be over {l, r}");
  Permutation p;
  for (int v = 1; v <= static_cast<int>(w.size()); ++v)
    if (w[v - 1] == 'l') p.push_back(v);
  for (int v = 1; v <= static_cast<int>(w.size()); ++v)
    if (w[v - 1] == 'r') p.push_back(v);
  return p;
}

std::vector<std::string> associated_words(const Permutation& p) {
  if (!is_permutation(p)) throw InputError("not a permutation");
  std::vector<int> inv = consecutive_inversions(p);
  if (inv.size() > 1) throw InputError("not a double ascent");
  int n = static_cast<int>(p.size());
  if (inv.empty()) {
    std::vector<std::string> all;
    for (int a = 0; a <= n; ++a)
      all.push_back(std::string(a, 'l') + std::string(n - a, 'r'));
    std::sort(all.begin(), all.end());
    return all;
  }
  // The unique word: value v reads l exactly when it sits left of the
  // descent.
  int d = inv[0];
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[p[i]] = i + 1;
  std::string w;
  for (int v = 1; v <= n; ++v) w.push_back(pos[v] <= d ? 'l' : 'r');
  return {w};
}

std::vector<std::string> basis_words(const std::vector<Permutation>& basis) {
  std::set<std::string> out;
  for (const Permutation& p : basis)
    for (std::string& w : associated_words(p)) out.insert(std::move(w));
  return {out.begin(), out.end()};
}

std::vector<Permutation> enumerate_double_ascents(
    int n, const std::vector<Permutation>& basis) {
  if (n < 1) throw InputError("length must be positive");
  std::set<Permutation> seen;
  // Every double ascent is hit by the word map; enumerate {l,r}^n through it.
  for (long mask = 0; mask < (1L << n); ++mask) {
    std::string w(n, 'l');
    for (int i = 0; i < n; ++i)
      if (mask & (1L << i)) w[i] = 'r';
    Permutation p = associated_permutation(w);
    bool avoided = true;
    for (const Permutation& b : basis)
      if (value_consecutive_leq(b, p)) {
        avoided = false;
        break;
      }
    if (avoided) seen.insert(std::move(p));
  }
  return {seen.begin(), seen.end()};
}

namespace {

void check_basis(const std::vector<Permutation>& basis) {
  if (basis.empty()) throw InputError("double-ascent basis must be non-empty");
  for (const Permutation& p : basis)
    if (!is_double_ascent(p))
      throw InputError("basis element is not a double ascent");
}

}  // namespace

Problem word_problem(const std::vector<Permutation>& basis,
                     const Limits& lim) {
  check_basis(basis);
  std::vector<std::string> alphabet{"l", "r"};
  std::vector<Structure> ws;
  for (const std::string& w : basis_words(basis))
    ws.push_back(word_to_structure(w, alphabet));
  return make_problem(Kind::word(alphabet), std::move(ws), lim);
}

Verdict decide_wqo_da(const std::vector<Permutation>& basis,
                      const Limits& lim) {
  Verdict v = decide_wqo(word_problem(basis, lim));
  v.notes = "via the l/r word encoding: " + v.notes;
  return v;
}

Verdict decide_atomicity_da(const std::vector<Permutation>& basis,
                            const Limits& lim) {
  check_basis(basis);
  Problem wp = word_problem(basis, lim);
  Verdict v;
  v.problem = "atomicity";
  v.dimension = wp.b;

  // Extension is checked on the permutations themselves; single ascents blur
  // the word correspondence.
  int b = 0;
  for (const Permutation& p : basis) b = std::max(b, (int)p.size());
  std::vector<Permutation> top = enumerate_double_ascents(b, basis);
  for (int n = 1; n < b; ++n)
    for (const Permutation& s : enumerate_double_ascents(n, basis)) {
      bool extends = false;
      for (const Permutation& t : top)
        if (value_consecutive_leq(s, t)) {
          extends = true;
          break;
        }
      if (!extends) {
        v.answer = Answer::no;
        v.witness.type = Witness::Type::missing_extension;
        v.witness.structures = {permutation_to_structure(s)};
        v.notes =
            "via the l/r word encoding: a short double ascent has no "
            "extension to the basis length";
        return v;
      }
    }

  FactorGraph fg = build(wp, wp.b);
  if (fg.vertices.empty()) {
    v.answer = Answer::yes;
    v.notes = "via the l/r word encoding: avoidance set is empty";
    return v;
  }
  std::vector<std::vector<int>> comps = sccs(fg.graph);
  if (comps.size() == 1 || is_bicycle(fg.graph)) {
    v.answer = Answer::yes;
    v.notes =
        "via the l/r word encoding: word factor graph is strongly connected "
        "or a bicycle and every short double ascent extends";
    return v;
  }
  v.answer = Answer::no;
  if (comps.size() > 1) {
    v.witness.type = Witness::Type::not_strongly_connected;
    v.witness.component_a = comps[0].front();
    v.witness.component_b = comps.back().front();
    v.witness.labels = {fg.graph.labels[v.witness.component_a],
                        fg.graph.labels[v.witness.component_b]};
  } else {
    v.witness.type = Witness::Type::not_bicycle;
    v.witness.violation_vertex = bicycle_violation_vertex(fg.graph);
    v.witness.labels = {fg.graph.labels[v.witness.violation_vertex]};
  }
  v.notes =
      "via the l/r word encoding: word factor graph is neither strongly "
      "connected nor a bicycle";
  return v;
}

namespace {

bool left_right_form(const Problem& p, const Structure& s) {
  std::string w = structure_to_word(s, p.kind.alphabet);
  auto first_r = w.find('r');
  return first_r == std::string::npos ||
         w.find('l', first_r) == std::string::npos;
}

std::vector<std::vector<int>> weak_components(const Digraph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> stack{start};
    comp[start] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [a, b] : g.edges) {
        int other = a == v ? b : b == v ? a : -1;
        if (other != -1 && comp[other] == -1) {
          comp[other] = c;
          stack.push_back(other);
        }
      }
    }
    ++c;
  }
  std::vector<std::vector<int>> out(c);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

Digraph induced(const Digraph& g, const std::vector<int>& vs) {
  Digraph h;
  std::vector<int> idx(g.vertex_count(), -1);
  for (size_t i = 0; i < vs.size(); ++i) {
    idx[vs[i]] = static_cast<int>(i);
    h.labels.push_back(g.labels[vs[i]]);
  }
  for (auto [u, v] : g.edges)
    if (idx[u] != -1 && idx[v] != -1) h.edges.emplace_back(idx[u], idx[v]);
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

}  // namespace

LeftRightReport left_right_diagnostics(const Problem& p,
                                       const FactorGraph& fg) {
  if (p.kind.name != KindName::word || p.kind.alphabet.size() != 2)
    throw InputError("left-right diagnostics expect a word problem over {l,r}");
  LeftRightReport rep;
  auto qualifies = [&](const std::vector<int>& vs) {
    for (int v : vs)
      if (!left_right_form(p, fg.vertices[v])) return false;
    return static_cast<bool>(is_bicycle(induced(fg.graph, vs)));
  };
  if (!fg.vertices.empty()) {
    std::vector<int> all(fg.vertices.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    rep.is_left_right_bicycle = qualifies(all);
    for (const auto& comp : weak_components(fg.graph))
      if (qualifies(comp)) {
        rep.isolated = true;
        break;
      }
  }
  return rep;
}

}  // namespace consec
