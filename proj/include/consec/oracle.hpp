#pragma once

#include <optional>
#include <string>
#include <vector>

#include "consec/factor_graph.hpp"

namespace consec {

// Brute-force reference procedures.  Everything here is defined directly in
// terms of enumeration and the consecutive order, independently of the
// factor-graph machinery, so it can arbitrate disagreements.

// Members of p.kind of length n avoiding p.basis, in canonical-encoding
// order.
std::vector<Structure> enumerate_avoidance(const Problem& p, int n);

// Whether some member of length n avoids the basis.  Searches by extending
// one point at a time, pruning by the rightmost length-b window, so it
// reaches lengths far beyond the enumeration cap.
bool avoidance_nonempty(const Problem& p, int n);

// The least (by length, then canonical encoding) structure of the avoidance
// set embedding both s and t consecutively, up to length max_len.  Exact
// least as long as the lengths involved stay within the enumeration cap;
// beyond that the search is constructive and returns some witness, favoring
// small length.
std::optional<Structure> jep_search(const Problem& p, const Structure& s,
                                    const Structure& t, int max_len);

// Verifies pairwise consecutive incomparability and basis avoidance.
// Returns an explanation of the first failure, or nullopt when the family
// is a genuine antichain of the avoidance set.
std::optional<std::string> verify_antichain(const Problem& p,
                                            const std::vector<Structure>& xs);

struct OracleReport {
  bool agree = true;
  std::string detail;  // re-runnable description of the first mismatch
};

// Cross-checks a claimed avoidance-set listing at length n against
// enumerate_avoidance.
OracleReport check_avoidance_listing(const Problem& p, int n,
                                     const std::vector<Structure>& claimed);

}  // namespace consec
