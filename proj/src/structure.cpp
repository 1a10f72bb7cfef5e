#include "consec/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace consec {

std::string Structure::encode() const {
  std::ostringstream out;
  out << "n=" << length;
  for (size_t slot = 0; slot < relations.size(); ++slot) {
    out << ";R" << slot + 1 << "={";
    bool first_tuple = true;
    for (const Tuple& t : relations[slot]) {
      if (!first_tuple) out << ",";
      first_tuple = false;
      out << "(";
      for (size_t i = 0; i < t.size(); ++i) {
        if (i) out << ",";
        out << t[i];
      }
      out << ")";
    }
    out << "}";
  }
  return out.str();
}

bool encoding_less(const Structure& a, const Structure& b) {
  return a.encode() < b.encode();
}

static void sort_unique(std::vector<Tuple>& tuples) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

Structure canonicalize(const std::set<int>& points,
                       const std::vector<std::vector<Tuple>>& relations,
                       const Signature& sig) {
  if (relations.size() != sig.arities.size())
    throw InputError("relation slot count does not match signature");
  std::map<int, int> relabel;
  int next = 1;
  for (int p : points) relabel[p] = next++;

  Structure out;
  out.length = static_cast<int>(points.size());
  out.relations.resize(relations.size());
  for (size_t slot = 0; slot < relations.size(); ++slot) {
    for (const Tuple& t : relations[slot]) {
      if (static_cast<int>(t.size()) != sig.arities[slot])
        throw InputError("tuple arity does not match signature");
      Tuple mapped;
      mapped.reserve(t.size());
      for (int entry : t) {
        auto it = relabel.find(entry);
        if (it == relabel.end())
          throw InputError("tuple entry outside the given point set");
        mapped.push_back(it->second);
      }
      out.relations[slot].push_back(std::move(mapped));
    }
    sort_unique(out.relations[slot]);
  }
  return out;
}

Structure restrict(const Structure& s, Interval iv) {
  if (iv.lo < 1 || iv.hi > s.length || iv.lo > iv.hi + 1)
    throw InputError("restriction interval out of range");
  Structure out;
  out.length = iv.hi - iv.lo + 1;
  out.relations.resize(s.relations.size());
  for (size_t slot = 0; slot < s.relations.size(); ++slot) {
    for (const Tuple& t : s.relations[slot]) {
      bool inside = true;
      for (int entry : t)
        if (entry < iv.lo || entry > iv.hi) { inside = false; break; }
      if (!inside) continue;
      Tuple shifted;
      shifted.reserve(t.size());
      for (int entry : t) shifted.push_back(entry - iv.lo + 1);
      out.relations[slot].push_back(std::move(shifted));
    }
    // Input tuples are sorted; shifting preserves the order.
  }
  return out;
}

bool is_isomorphic(const Structure& a, const Structure& b) {
  if (a.relations.size() != b.relations.size())
    throw InputError("structures have different signatures");
  return a == b;
}

std::optional<int> consecutive_leq(const Structure& s, const Structure& t) {
  if (s.relations.size() != t.relations.size())
    throw InputError("structures have different signatures");
  if (s.length > t.length) return std::nullopt;
  for (int k = 1; k + s.length - 1 <= t.length; ++k) {
    if (restrict(t, {k, k + s.length - 1}) == s) return k;
  }
  return std::nullopt;
}

bool avoids(const Structure& s, const std::vector<Structure>& basis) {
  for (const Structure& b : basis)
    if (consecutive_leq(b, s)) return false;
  return true;
}

std::vector<int> overlap_amounts(const Structure& s, const Structure& t) {
  std::vector<int> out;
  int limit = std::min(s.length, t.length);
  for (int x = 1; x <= limit; ++x) {
    if (restrict(s, {s.length - x + 1, s.length}) == restrict(t, {1, x}))
      out.push_back(x);
  }
  return out;
}

}  // namespace consec
