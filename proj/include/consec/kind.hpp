#pragma once

#include <optional>
#include <string>
#include <vector>

#include "consec/structure.hpp"

namespace consec {

enum class KindName {
  graph,
  simple_graph,
  digraph,
  tournament,
  relational,
  word,
  linear_order,
  permutation,
  equivalence,
  poset,
};

enum class Classification { bountiful, valid_unambiguous, valid_other };

// A structure type: fixed signature (except `relational`, which carries a
// user signature, and `word`, which carries an alphabet of unary slots),
// membership predicate, enumerator and combine constructor.
struct Kind {
  KindName name = KindName::digraph;
  Signature sig;
  std::vector<std::string> alphabet;  // word kinds only

  static Kind graph();
  static Kind simple_graph();
  static Kind digraph();
  static Kind tournament();
  static Kind relational(Signature sig);
  static Kind word(std::vector<std::string> alphabet);
  static Kind linear_order();
  static Kind permutation();
  static Kind equivalence();
  static Kind poset();

  Classification classification() const;
  std::string name_string() const;

  bool operator==(const Kind&) const = default;
};

// Throws InputError when s does not match k's signature.
bool is_member(const Kind& k, const Structure& s);

// All pairwise non-isomorphic members of k of length n, in
// canonical-encoding order.
std::vector<Structure> enumerate_kind(const Kind& k, int n,
                                      const Limits& lim = {});

// Total relation-bit count of a length-n structure of kind k, the quantity
// the enumeration cap bounds.
long relation_bits(const Kind& k, int n);

// All members of k of length |s|+|t|-x whose prefix window is s and whose
// shifted window is t, in canonical-encoding order.  x must be a legal
// overlap of s and t.
std::vector<Structure> combine_all(const Kind& k, const Structure& s,
                                   const Structure& t, int x,
                                   const Limits& lim = {});

// One combining structure built by the per-kind identification construction,
// without enumerating alternatives.  Cheap non-emptiness witness.
std::optional<Structure> combine_any(const Kind& k, const Structure& s,
                                     const Structure& t, int x);

struct CombineFailure {
  Structure s;
  Structure t;
  int x = 0;
  long count = 0;
};

struct ScaleReport {
  std::string check;
  long pairs_checked = 0;
  std::vector<CombineFailure> failures;

  bool pass() const { return failures.empty(); }
};

// Asserts combine_all non-empty for every overlapping pair of members of
// length <= max_len.
ScaleReport check_valid_at_scale(const Kind& k, int max_len,
                                 const Limits& lim = {});

// Asserts |combine_all| >= 2 for every pair of length-m members with
// overlap m-1.
ScaleReport check_bountiful_at_scale(const Kind& k, int m,
                                     const Limits& lim = {});

// Word helpers: a word is a structure with one unary slot per letter, in
// alphabet order, partitioning [1,n].
Structure word_to_structure(const std::string& w,
                            const std::vector<std::string>& alphabet);
std::string structure_to_word(const Structure& s,
                              const std::vector<std::string>& alphabet);

// Permutation helpers.  Points are values; the explicit relation is the
// full position order {(u,v) : u appears no later than v}.
Structure permutation_to_structure(const std::vector<int>& one_line);
std::vector<int> structure_to_permutation(const Structure& s);

}  // namespace consec
