#pragma once

#include <optional>
#include <string>
#include <vector>

#include "consec/decide.hpp"

namespace consec {

// Permutations in one-line notation.  A double ascent has at most one
// descent between consecutive entries; the l/r word encoding below reduces
// their wqo and atomicity problems to word factor graphs over {l, r}.

using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
bool is_double_ascent(const Permutation& p);

// Positions i (1-based) with p[i] > p[i+1], ascending.
std::vector<int> consecutive_inversions(const Permutation& p);

// Least k such that the entries of t with values in [k, k+|s|-1], read in
// position order, reduce to s.
std::optional<int> value_consecutive_leq(const Permutation& s,
                                         const Permutation& t);

// The double ascent built from a word over {l, r}: values carrying l in
// ascending order, then values carrying r in ascending order.
Permutation associated_permutation(const std::string& w);

// All words mapping to p: the n+1 splits l^a r^c for a single ascent of
// length n, a unique word otherwise.  Sorted.
std::vector<std::string> associated_words(const Permutation& p);

// Union of associated_words over the basis, deduplicated and sorted.
std::vector<std::string> basis_words(const std::vector<Permutation>& basis);

// All double ascents of length n avoiding `basis` under the value order,
// sorted lexicographically.
std::vector<Permutation> enumerate_double_ascents(
    int n, const std::vector<Permutation>& basis = {});

Verdict decide_wqo_da(const std::vector<Permutation>& basis,
                      const Limits& lim = {});
Verdict decide_atomicity_da(const std::vector<Permutation>& basis,
                            const Limits& lim = {});

struct LeftRightReport {
  bool is_left_right_bicycle = false;  // the whole graph qualifies
  bool isolated = false;               // some weak component qualifies
};

// A left-right bicycle is a bicycle (a lone looped vertex counts as the
// degenerate case) all of whose vertices are words of the form l^a r^c.
// Such a component signals single ascents that extend only among
// themselves.
LeftRightReport left_right_diagnostics(const Problem& p,
                                       const FactorGraph& fg);

// The word problem the reduction runs on.
Problem word_problem(const std::vector<Permutation>& basis,
                     const Limits& lim = {});

}  // namespace consec
