#pragma once

#include <optional>
#include <string>
#include <vector>

#include "consec/factor_graph.hpp"

namespace consec {

enum class Answer { yes, no, undetermined };

std::string answer_string(Answer a);

// Every variant carries enough to re-check it independently.
struct Witness {
  enum class Type {
    none,
    cycle,
    in_out_cycle,
    not_strongly_connected,
    not_bicycle,
    missing_extension,
    antichain,
    non_joinable_pair,
  };
  Type type = Type::none;
  std::vector<int> cycle;               // closed vertex walk, first == last
  int in_vertex = -1;                   // in_out_cycle
  int out_vertex = -1;
  int component_a = -1;                 // representatives of two components
  int component_b = -1;
  int violation_vertex = -1;            // not_bicycle
  std::vector<Structure> structures;    // missing_extension / antichain / pair
  std::vector<std::string> labels;      // encodings of referenced vertices

  std::string type_string() const;
};

struct Verdict {
  std::string problem;  // "wqo" or "atomicity"
  Answer answer = Answer::undetermined;
  Witness witness;
  std::string notes;    // the criterion applied, in words
  int dimension = 0;    // factor-graph dimension examined
};

// Well quasi-order decider.  Dispatches on the kind's classification;
// "undetermined" only for the kinds whose theory is partial.
Verdict decide_wqo(const Problem& p);

// Atomicity (joint embedding) decider, same dispatch.
Verdict decide_atomicity(const Problem& p);

// Least member of the avoidance set of length < b with no consecutive
// extension to length b, or nullopt when every short member extends.
std::optional<Structure> extension_condition(const Problem& p);

// k pairwise consecutively-incomparable members of the avoidance set,
// built by pumping an in-out cycle, lifting the dimension until one
// appears.  Verified before return.
std::vector<Structure> antichain_witness(const Problem& p, int k);

}  // namespace consec
