#pragma once

#include <map>
#include <vector>

#include "consec/digraph.hpp"
#include "consec/kind.hpp"

namespace consec {

// A finitely based avoidance problem: kind, canonical deduplicated basis,
// and b = max basis length (1 when the basis is empty).
struct Problem {
  Kind kind;
  std::vector<Structure> basis;
  int b = 1;
  Limits limits;
};

// Canonicalizes, validates membership and deduplicates; rejects length-0
// basis elements and non-members with a per-element diagnostic.
Problem make_problem(Kind kind, std::vector<Structure> basis,
                     Limits limits = {});

// Vertices are the length-m members of the avoidance set in canonical
// order; edge u -> v iff the length-(m-1) suffix window of u matches the
// prefix window of v.
struct FactorGraph {
  int m = 1;
  std::vector<Structure> vertices;
  Digraph graph;  // labels are canonical encodings

  int index_of(const Structure& s) const;  // -1 when absent

 private:
  friend FactorGraph build(const Problem&, int);
  std::map<std::string, int> index_;
};

FactorGraph build(const Problem& p, int m);

// The window path of s: vertex indices of restrict(s,[i,i+m-1]) for
// ascending i.  Requires |s| >= m and s in the avoidance set.
std::vector<int> path_of(const Problem& p, const FactorGraph& fg,
                         const Structure& s);

// All structures whose window path equals `path`, built by iterated
// combining along the path, canonical order.  May be empty for invalid
// kinds; valid kinds always produce at least one element.
std::vector<Structure> structures_of_path(const Problem& p,
                                          const FactorGraph& fg,
                                          const std::vector<int>& path,
                                          int len_cap);

// True when the path is realized by at least `count` structures; stops
// early rather than materializing everything.
bool sigma_at_least(const Problem& p, const FactorGraph& fg,
                    const std::vector<int>& path, long count);

// One structure realizing `path`, found by depth-first search over the
// per-step combining choices without materializing the full set.
std::optional<Structure> realize_any(const Problem& p, const FactorGraph& fg,
                                     const std::vector<int>& path);

}  // namespace consec
