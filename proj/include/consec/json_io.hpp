#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "consec/decide.hpp"
#include "consec/double_ascent.hpp"

namespace consec {

using json = nlohmann::ordered_json;

// A parsed problem file.  Double-ascent inputs keep the permutation basis;
// everything else lands directly in `problem`.
struct ProblemFile {
  bool double_ascent = false;
  std::vector<Permutation> da_basis;  // double-ascent inputs only
  Problem problem;                    // for double ascents: the word problem
};

// Parses {"kind": {...}, "basis": [...]}.  Word bases are strings,
// permutation bases arrays, everything else relation-list objects
// {"length": n, "relations": [[[1,2],...], ...]}.  Throws InputError on
// malformed or non-member input.
ProblemFile parse_problem(const json& j, const Limits& lim = {});
ProblemFile parse_problem_text(const std::string& text,
                               const Limits& lim = {});

// One basis-style structure entry under an already-parsed problem's kind.
Structure parse_structure(const ProblemFile& pf, const json& entry);

json kind_to_json(const Kind& k);
json structure_to_json(const Problem& p, const Structure& s);
json verdict_to_json(const Problem& p, const Verdict& v);
json factor_graph_to_json(const Problem& p, const FactorGraph& fg);

}  // namespace consec
