#include "consec/kind.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace consec {

Kind Kind::graph() { return {KindName::graph, Signature{{2}}, {}}; }
Kind Kind::simple_graph() { return {KindName::simple_graph, Signature{{2}}, {}}; }
Kind Kind::digraph() { return {KindName::digraph, Signature{{2}}, {}}; }
Kind Kind::tournament() { return {KindName::tournament, Signature{{2}}, {}}; }
Kind Kind::relational(Signature sig) {
  for (int a : sig.arities)
    if (a < 1) throw InputError("signature arities must be >= 1");
  return {KindName::relational, std::move(sig), {}};
}
Kind Kind::word(std::vector<std::string> alphabet) {
  if (alphabet.empty()) throw InputError("word alphabet must be non-empty");
  std::set<std::string> seen(alphabet.begin(), alphabet.end());
  if (seen.size() != alphabet.size())
    throw InputError("word alphabet letters must be distinct");
  Signature sig;
  sig.arities.assign(alphabet.size(), 1);
  return {KindName::word, std::move(sig), std::move(alphabet)};
}
Kind Kind::linear_order() { return {KindName::linear_order, Signature{}, {}}; }
Kind Kind::permutation() { return {KindName::permutation, Signature{{2}}, {}}; }
Kind Kind::equivalence() { return {KindName::equivalence, Signature{{2}}, {}}; }
Kind Kind::poset() { return {KindName::poset, Signature{{2}}, {}}; }

Classification Kind::classification() const {
  switch (name) {
    case KindName::graph:
    case KindName::simple_graph:
    case KindName::digraph:
    case KindName::tournament:
      return Classification::bountiful;
    case KindName::relational:
      // A relation of arity >= 2 can span both windows of a combination;
      // all-unary signatures pin every tuple inside one window, making
      // combinations unique.
      for (int a : sig.arities)
        if (a >= 2) return Classification::bountiful;
      return Classification::valid_unambiguous;
    case KindName::word:
    case KindName::linear_order:
      return Classification::valid_unambiguous;
    case KindName::permutation:
    case KindName::equivalence:
    case KindName::poset:
      return Classification::valid_other;
  }
  throw InputError("unknown kind");
}

std::string Kind::name_string() const {
  switch (name) {
    case KindName::graph: return "graph";
    case KindName::simple_graph: return "simple_graph";
    case KindName::digraph: return "digraph";
    case KindName::tournament: return "tournament";
    case KindName::relational: return "relational";
    case KindName::word: return "word";
    case KindName::linear_order: return "linear_order";
    case KindName::permutation: return "permutation";
    case KindName::equivalence: return "equivalence";
    case KindName::poset: return "poset";
  }
  return "?";
}

namespace {

bool has(const std::vector<Tuple>& rel, int a, int b) {
  return std::binary_search(rel.begin(), rel.end(), Tuple{a, b});
}

bool reflexive(const std::vector<Tuple>& rel, int n) {
  for (int i = 1; i <= n; ++i)
    if (!has(rel, i, i)) return false;
  return true;
}

bool symmetric(const std::vector<Tuple>& rel) {
  for (const Tuple& t : rel)
    if (!has(rel, t[1], t[0])) return false;
  return true;
}

bool transitive(const std::vector<Tuple>& rel) {
  for (const Tuple& t : rel)
    for (const Tuple& u : rel)
      if (t[1] == u[0] && !has(rel, t[0], u[1])) return false;
  return true;
}

bool antisymmetric(const std::vector<Tuple>& rel) {
  for (const Tuple& t : rel)
    if (t[0] != t[1] && has(rel, t[1], t[0])) return false;
  return true;
}

bool irreflexive(const std::vector<Tuple>& rel) {
  for (const Tuple& t : rel)
    if (t[0] == t[1]) return false;
  return true;
}

bool total_exactly_one(const std::vector<Tuple>& rel, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (has(rel, i, j) == has(rel, j, i)) return false;
  return true;
}

void validate_shape(const Kind& k, const Structure& s) {
  if (s.relations.size() != k.sig.arities.size())
    throw InputError("structure does not match kind signature");
  for (size_t slot = 0; slot < s.relations.size(); ++slot)
    for (const Tuple& t : s.relations[slot]) {
      if (static_cast<int>(t.size()) != k.sig.arities[slot])
        throw InputError("tuple arity does not match kind signature");
      for (int e : t)
        if (e < 1 || e > s.length)
          throw InputError("tuple entry out of range");
    }
}

// All arity-length tuples over [1,n], lexicographic.
std::vector<Tuple> all_tuples(int n, int arity) {
  std::vector<Tuple> out;
  Tuple cur(arity, 1);
  if (n < 1) return out;
  while (true) {
    out.push_back(cur);
    int pos = arity - 1;
    while (pos >= 0 && cur[pos] == n) cur[pos--] = 1;
    if (pos < 0) break;
    ++cur[pos];
  }
  return out;
}

void sort_by_encoding(std::vector<Structure>& xs) {
  std::vector<std::pair<std::string, Structure>> keyed;
  keyed.reserve(xs.size());
  for (Structure& s : xs) keyed.emplace_back(s.encode(), std::move(s));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  xs.clear();
  for (auto& [key, s] : keyed) xs.push_back(std::move(s));
}

}  // namespace

bool is_member(const Kind& k, const Structure& s) {
  validate_shape(k, s);
  switch (k.name) {
    case KindName::graph:
      return symmetric(s.relations[0]);
    case KindName::simple_graph:
      return symmetric(s.relations[0]) && irreflexive(s.relations[0]);
    case KindName::digraph:
    case KindName::relational:
      return true;
    case KindName::tournament:
      return irreflexive(s.relations[0]) &&
             total_exactly_one(s.relations[0], s.length);
    case KindName::word: {
      // The unary slots must partition [1,n].
      std::vector<int> count(s.length + 1, 0);
      for (const auto& rel : s.relations)
        for (const Tuple& t : rel) ++count[t[0]];
      for (int i = 1; i <= s.length; ++i)
        if (count[i] != 1) return false;
      return true;
    }
    case KindName::linear_order:
      return true;  // no explicit relations
    case KindName::permutation:
      return reflexive(s.relations[0], s.length) &&
             total_exactly_one(s.relations[0], s.length) &&
             transitive(s.relations[0]);
    case KindName::equivalence:
      return reflexive(s.relations[0], s.length) &&
             symmetric(s.relations[0]) && transitive(s.relations[0]);
    case KindName::poset:
      return reflexive(s.relations[0], s.length) &&
             antisymmetric(s.relations[0]) && transitive(s.relations[0]);
  }
  throw InputError("unknown kind");
}

long relation_bits(const Kind& k, int n) {
  long bits = 0;
  for (int a : k.sig.arities) {
    long slot = 1;
    for (int i = 0; i < a; ++i) slot *= n;
    bits += slot;
  }
  return bits;
}

namespace {

std::vector<Structure> enumerate_words(const Kind& k, int n) {
  int m = static_cast<int>(k.alphabet.size());
  std::vector<Structure> out;
  std::vector<int> letters(n, 0);
  while (true) {
    Structure s;
    s.length = n;
    s.relations.resize(m);
    for (int i = 0; i < n; ++i) s.relations[letters[i]].push_back({i + 1});
    out.push_back(std::move(s));
    int pos = n - 1;
    while (pos >= 0 && letters[pos] == m - 1) letters[pos--] = 0;
    if (pos < 0) break;
    ++letters[pos];
  }
  sort_by_encoding(out);
  return out;
}

std::vector<Structure> enumerate_permutations(int n) {
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Structure> out;
  do {
    out.push_back(permutation_to_structure(line));
  } while (std::next_permutation(line.begin(), line.end()));
  sort_by_encoding(out);
  return out;
}

}  // namespace

std::vector<Structure> enumerate_kind(const Kind& k, int n, const Limits& lim) {
  if (n < 1) throw InputError("enumeration length must be >= 1");
  if (relation_bits(k, n) > lim.max_bits)
    throw LimitError("enumeration cap exceeded for " + k.name_string() +
                     " of length " + std::to_string(n));
  switch (k.name) {
    case KindName::word:
      return enumerate_words(k, n);
    case KindName::linear_order: {
      Structure s;
      s.length = n;
      return {s};
    }
    case KindName::permutation:
      return enumerate_permutations(n);
    default:
      break;
  }

  std::vector<std::vector<Tuple>> candidates;
  std::vector<std::pair<int, int>> bit_index;  // (slot, tuple index)
  for (size_t slot = 0; slot < k.sig.arities.size(); ++slot) {
    candidates.push_back(all_tuples(n, k.sig.arities[slot]));
    for (size_t i = 0; i < candidates.back().size(); ++i)
      bit_index.emplace_back(static_cast<int>(slot), static_cast<int>(i));
  }
  int bits = static_cast<int>(bit_index.size());

  std::vector<Structure> out;
  for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
    Structure s;
    s.length = n;
    s.relations.resize(k.sig.arities.size());
    for (int b = 0; b < bits; ++b)
      if (mask & (1ul << b)) {
        auto [slot, idx] = bit_index[b];
        s.relations[slot].push_back(candidates[slot][idx]);
      }
    if (is_member(k, s)) out.push_back(std::move(s));
  }
  sort_by_encoding(out);
  return out;
}

namespace {

// Union of the tuples of s with the tuples of t shifted to start at point
// p-x+1.  The overlap window agrees by assumption, so the union is
// consistent; spanning tuples (min entry <= p-x and max entry > p) are
// absent and free.
Structure combine_base(const Structure& s, const Structure& t, int x) {
  int p = s.length;
  Structure out;
  out.length = s.length + t.length - x;
  out.relations.resize(s.relations.size());
  for (size_t slot = 0; slot < s.relations.size(); ++slot) {
    std::set<Tuple> merged(s.relations[slot].begin(), s.relations[slot].end());
    for (const Tuple& t0 : t.relations[slot]) {
      Tuple shifted;
      shifted.reserve(t0.size());
      for (int e : t0) shifted.push_back(e + p - x);
      merged.insert(std::move(shifted));
    }
    out.relations[slot].assign(merged.begin(), merged.end());
  }
  return out;
}

void check_overlap_legal(const Structure& s, const Structure& t, int x) {
  if (s.relations.size() != t.relations.size())
    throw InputError("structures have different signatures");
  if (x < 0 || x > std::min(s.length, t.length))
    throw InputError("overlap amount out of range");
  if (x >= 1 &&
      restrict(s, {s.length - x + 1, s.length}) != restrict(t, {1, x}))
    throw InputError("not a legal overlap");
}

std::vector<std::pair<int, Tuple>> spanning_tuples(const Kind& k,
                                                   const Structure& s,
                                                   const Structure& t, int x) {
  int p = s.length;
  int n = s.length + t.length - x;
  std::vector<std::pair<int, Tuple>> out;
  for (size_t slot = 0; slot < k.sig.arities.size(); ++slot) {
    for (Tuple& tup : all_tuples(n, k.sig.arities[slot])) {
      auto [lo, hi] = std::minmax_element(tup.begin(), tup.end());
      if (*lo <= p - x && *hi > p)
        out.emplace_back(static_cast<int>(slot), std::move(tup));
    }
  }
  return out;
}

void insert_tuple(std::vector<Tuple>& rel, Tuple t) {
  auto it = std::lower_bound(rel.begin(), rel.end(), t);
  if (it == rel.end() || *it != t) rel.insert(it, std::move(t));
}

// The per-kind witness construction: identify the overlapping points, then
// repair the spanning region the way the kind requires.
std::optional<Structure> combine_witness(const Kind& k, const Structure& s,
                                         const Structure& t, int x) {
  Structure base = combine_base(s, t, x);
  int p = s.length;
  int n = base.length;
  switch (k.name) {
    case KindName::graph:
    case KindName::simple_graph:
    case KindName::digraph:
    case KindName::relational:
    case KindName::word:
    case KindName::linear_order:
      return base;
    case KindName::tournament:
      for (int a = 1; a <= p - x; ++a)
        for (int b = p + 1; b <= n; ++b)
          insert_tuple(base.relations[0], {a, b});
      return base;
    case KindName::equivalence: {
      // Join of the two equivalences: symmetric-transitive closure via
      // union-find over linked classes.
      std::vector<int> parent(n + 1);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      for (const Tuple& t0 : base.relations[0]) parent[find(t0[0])] = find(t0[1]);
      base.relations[0].clear();
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (find(a) == find(b)) base.relations[0].push_back({a, b});
      return base;
    }
    case KindName::poset: {
      // a <= b when both lie in one part and that part orders them, or when
      // they straddle the parts and some overlap point c gives a <= c <= b.
      auto& rel = base.relations[0];
      std::vector<Tuple> extra;
      for (int a = 1; a <= p - x; ++a)
        for (int b = p + 1; b <= n; ++b)
          for (int c = p - x + 1; c <= p; ++c) {
            if (has(rel, a, c) && has(rel, c, b)) extra.push_back({a, b});
            if (has(rel, b, c) && has(rel, c, a)) extra.push_back({b, a});
          }
      for (Tuple& e : extra) insert_tuple(rel, std::move(e));
      return is_member(k, base) ? std::optional<Structure>(base) : std::nullopt;
    }
    case KindName::permutation: {
      // Linearly extend the union of the two position orders; cross-part
      // positions are not determined, so any extension is a witness.
      auto& rel = base.relations[0];
      std::vector<std::vector<int>> before(n + 1);
      std::vector<int> indeg(n + 1, 0);
      for (const Tuple& t0 : rel)
        if (t0[0] != t0[1]) {
          before[t0[0]].push_back(t0[1]);
          ++indeg[t0[1]];
        }
      std::vector<int> order;
      std::set<int> ready;
      for (int v = 1; v <= n; ++v)
        if (indeg[v] == 0) ready.insert(v);
      while (!ready.empty()) {
        int v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (int w : before[v])
          if (--indeg[w] == 0) ready.insert(w);
      }
      if (static_cast<int>(order.size()) != n) return std::nullopt;
      std::vector<int> rank(n + 1, 0);
      for (int i = 0; i < n; ++i) rank[order[i]] = i;
      rel.clear();
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          if (rank[a] <= rank[b]) rel.push_back({a, b});
      return base;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Structure> combine_all(const Kind& k, const Structure& s,
                                   const Structure& t, int x,
                                   const Limits& lim) {
  check_overlap_legal(s, t, x);
  Structure base = combine_base(s, t, x);
  auto spanning = spanning_tuples(k, s, t, x);
  if (static_cast<int>(spanning.size()) > lim.max_spanning_bits)
    throw LimitError("combine_all spanning-tuple cap exceeded");

  std::vector<Structure> out;
  int bits = static_cast<int>(spanning.size());
  for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
    Structure cand = base;
    for (int b = 0; b < bits; ++b)
      if (mask & (1ul << b)) {
        auto& [slot, tup] = spanning[b];
        insert_tuple(cand.relations[slot], tup);
      }
    if (is_member(k, cand)) out.push_back(std::move(cand));
  }
  sort_by_encoding(out);
  return out;
}

std::optional<Structure> combine_any(const Kind& k, const Structure& s,
                                     const Structure& t, int x) {
  check_overlap_legal(s, t, x);
  if (auto w = combine_witness(k, s, t, x))
    if (is_member(k, *w)) return w;
  return std::nullopt;
}

ScaleReport check_valid_at_scale(const Kind& k, int max_len,
                                 const Limits& lim) {
  ScaleReport report{"valid:" + k.name_string()};
  std::vector<std::vector<Structure>> by_len(max_len + 1);
  for (int n = 1; n <= max_len; ++n) by_len[n] = enumerate_kind(k, n, lim);
  for (int p = 1; p <= max_len; ++p)
    for (int q = 1; q <= max_len; ++q)
      for (const Structure& s : by_len[p])
        for (const Structure& t : by_len[q])
          for (int x : overlap_amounts(s, t)) {
            ++report.pairs_checked;
            if (!combine_any(k, s, t, x))
              report.failures.push_back({s, t, x, 0});
          }
  return report;
}

ScaleReport check_bountiful_at_scale(const Kind& k, int m, const Limits& lim) {
  ScaleReport report{"bountiful:" + k.name_string()};
  if (m < 1) throw InputError("bountifulness scale must be >= 1");
  std::vector<Structure> members = enumerate_kind(k, m, lim);
  for (const Structure& s : members)
    for (const Structure& t : members) {
      if (m >= 2 &&
          restrict(s, {2, m}) != restrict(t, {1, m - 1}))
        continue;
      if (m == 1) {
        // Every ordered pair of length-1 members overlaps on 0 points only;
        // the m-1 overlap is empty, handled by juxtaposition.
      }
      ++report.pairs_checked;
      long count =
          static_cast<long>(combine_all(k, s, t, m - 1, lim).size());
      if (count < 2) report.failures.push_back({s, t, m - 1, count});
    }
  return report;
}

Structure word_to_structure(const std::string& w,
                            const std::vector<std::string>& alphabet) {
  Structure s;
  s.length = static_cast<int>(w.size());
  s.relations.resize(alphabet.size());
  for (int i = 0; i < s.length; ++i) {
    std::string letter(1, w[i]);
    auto it = std::find(alphabet.begin(), alphabet.end(), letter);
    if (it == alphabet.end())
      throw InputError("letter '" + letter + "' not in alphabet");
    s.relations[it - alphabet.begin()].push_back({i + 1});
  }
  return s;
}

std::string structure_to_word(const Structure& s,
                              const std::vector<std::string>& alphabet) {
  if (s.relations.size() != alphabet.size())
    throw InputError("structure does not match alphabet");
  std::string out(s.length, '?');
  for (size_t slot = 0; slot < s.relations.size(); ++slot)
    for (const Tuple& t : s.relations[slot]) {
      if (out[t[0] - 1] != '?') throw InputError("not a word structure");
      out[t[0] - 1] = alphabet[slot][0];
    }
  if (out.find('?') != std::string::npos)
    throw InputError("not a word structure");
  return out;
}

Structure permutation_to_structure(const std::vector<int>& one_line) {
  int n = static_cast<int>(one_line.size());
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = one_line[i];
    if (v < 1 || v > n || pos[v] != 0)
      throw InputError("not a permutation of [1,n]");
    pos[v] = i + 1;
  }
  Structure s;
  s.length = n;
  s.relations.resize(1);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (pos[u] <= pos[v]) s.relations[0].push_back({u, v});
  return s;
}

std::vector<int> structure_to_permutation(const Structure& s) {
  if (s.relations.size() != 1) throw InputError("not a permutation structure");
  int n = s.length;
  // Value u sits at position n - |{v : u before v}| + 1.
  std::vector<int> line(n, 0);
  std::vector<int> later(n + 1, 0);
  for (const Tuple& t : s.relations[0]) ++later[t[0]];
  for (int u = 1; u <= n; ++u) {
    int position = n - later[u] + 1;
    if (position < 1 || position > n || line[position - 1] != 0)
      throw InputError("not a permutation structure");
    line[position - 1] = u;
  }
  return line;
}

}  // namespace consec
