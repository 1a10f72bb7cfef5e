#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "consec/errors.hpp"

namespace consec {

using Tuple = std::vector<int>;

// Arities of the explicit relations.  The underlying linear order on [1,n]
// is implicit and never stored.  Zero explicit relations is allowed
// (linear orders).
struct Signature {
  std::vector<int> arities;

  bool operator==(const Signature&) const = default;
};

// A finite relational structure on [1,n].  Relations are kept canonical:
// one lexicographically sorted, duplicate-free tuple list per signature
// slot.  Equality of canonical structures is plain equality.
struct Structure {
  int length = 0;
  std::vector<std::vector<Tuple>> relations;

  bool operator==(const Structure&) const = default;

  // Canonical text form `n=<len>;R1={(a,b),...};R2=...`, deterministic.
  std::string encode() const;
};

// Canonical-encoding order, the tie-breaking order used everywhere.
bool encoding_less(const Structure& a, const Structure& b);

// Interval of point indices, 1-based, empty when lo == hi + 1.
struct Interval {
  int lo = 1;
  int hi = 0;
};

// Relabels `points` order-preservingly onto [1,|points|].
Structure canonicalize(const std::set<int>& points,
                       const std::vector<std::vector<Tuple>>& relations,
                       const Signature& sig);

// Canonicalized induced substructure on the points of `iv`; keeps exactly
// the tuples with all entries inside the interval.
Structure restrict(const Structure& s, Interval iv);

bool is_isomorphic(const Structure& a, const Structure& b);

// Smallest offset k with restrict(t,[k,k+|s|-1]) == s, if any.
std::optional<int> consecutive_leq(const Structure& s, const Structure& t);

bool avoids(const Structure& s, const std::vector<Structure>& basis);

// All x >= 1 with the length-x suffix window of s isomorphic to the
// length-x prefix window of t, ascending.
std::vector<int> overlap_amounts(const Structure& s, const Structure& t);

}  // namespace consec
