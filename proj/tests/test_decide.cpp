#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "consec/decide.hpp"
#include "consec/oracle.hpp"

using namespace consec;

namespace {

std::vector<std::string> ab{"a", "b"};

Problem word_av(std::vector<std::string> basis) {
  std::vector<Structure> bs;
  for (const std::string& w : basis) bs.push_back(word_to_structure(w, ab));
  return make_problem(Kind::word(ab), std::move(bs));
}

Problem graph_av(Kind k, std::vector<Structure> basis) {
  return make_problem(std::move(k), std::move(basis), {});
}

Structure two_point_edge(bool directed) {
  Structure s;
  s.length = 2;
  s.relations = {directed ? std::vector<Tuple>{{1, 2}}
                          : std::vector<Tuple>{{1, 2}, {2, 1}}};
  return s;
}

}  // namespace

TEST_CASE("wqo for words hinges on in-out cycles") {
  Verdict free = decide_wqo(word_av({}));
  CHECK(free.answer == Answer::no);
  CHECK(free.witness.type == Witness::Type::in_out_cycle);

  Verdict finite = decide_wqo(word_av({"aa", "bb", "aba"}));
  CHECK(finite.answer == Answer::yes);

  Verdict split = decide_wqo(word_av({"ab", "ba"}));
  CHECK(split.answer == Answer::yes);  // aa* and bb* chains only
}

TEST_CASE("wqo for bountiful kinds hinges on any cycle") {
  Verdict v = decide_wqo(graph_av(Kind::simple_graph(), {two_point_edge(false)}));
  CHECK(v.answer == Answer::no);
  REQUIRE(v.witness.type == Witness::Type::cycle);
  // the self-loop on the edgeless 2-point graph
  CHECK(v.witness.cycle == std::vector<int>{0, 0});
  CHECK(v.witness.labels.front() == "n=2;R1={}");

  CHECK(decide_wqo(graph_av(Kind::digraph(), {})).answer == Answer::no);
  CHECK(decide_wqo(make_problem(Kind::linear_order(), {}, {})).answer ==
        Answer::yes);
}

TEST_CASE("atomicity matches the worked examples") {
  Verdict split = decide_atomicity(word_av({"ab", "ba"}));
  CHECK(split.answer == Answer::no);
  CHECK(split.witness.type == Witness::Type::not_strongly_connected);

  CHECK(decide_atomicity(graph_av(Kind::digraph(), {})).answer == Answer::yes);

  Verdict gap = decide_atomicity(word_av({"ab", "ba", "aa"}));
  CHECK(gap.answer == Answer::no);
  REQUIRE(gap.witness.type == Witness::Type::missing_extension);
  CHECK(structure_to_word(gap.witness.structures[0], ab) == "a");

  CHECK(decide_atomicity(word_av({"aa", "bb", "aba"})).answer == Answer::yes);
  CHECK(decide_atomicity(make_problem(Kind::linear_order(), {}, {})).answer ==
        Answer::yes);
}

TEST_CASE("extension_condition returns the least counterexample") {
  std::optional<Structure> missing =
      extension_condition(word_av({"ab", "ba", "aa"}));
  REQUIRE(missing.has_value());
  CHECK(structure_to_word(*missing, ab) == "a");

  CHECK_FALSE(extension_condition(word_av({})));  // b = 1
  CHECK_FALSE(extension_condition(word_av({"aa", "bb", "aba"})));
}

TEST_CASE("partial kinds answer what the theory supports") {
  // equivalence relations, empty basis: the one-vertex factor graph has no
  // in-out cycle but its loop is realized by two structures
  Problem eq = make_problem(Kind::equivalence(), {}, {});
  Verdict w = decide_wqo(eq);
  CHECK(w.answer == Answer::no);
  CHECK(w.witness.type == Witness::Type::cycle);

  CHECK(decide_atomicity(eq).answer == Answer::yes);

  // permutations avoiding 21: only ascending runs remain, a chain; the
  // decider cannot certify wqo and says so
  Problem perm =
      make_problem(Kind::permutation(), {permutation_to_structure({2, 1})}, {});
  CHECK(decide_wqo(perm).answer == Answer::undetermined);
  CHECK(decide_atomicity(perm).answer == Answer::yes);
}

TEST_CASE("antichain witnesses verify") {
  Problem p0 = word_av({});
  std::vector<Structure> xs = antichain_witness(p0, 3);
  CHECK(xs.size() == 3);
  CHECK_FALSE(verify_antichain(p0, xs));

  CHECK(antichain_witness(p0, 1).size() == 1);

  Problem sg = graph_av(Kind::simple_graph(), {two_point_edge(false)});
  std::vector<Structure> gs = antichain_witness(sg, 4);
  CHECK(gs.size() == 4);
  CHECK_FALSE(verify_antichain(sg, gs));

  std::vector<Structure> ds = antichain_witness(graph_av(Kind::digraph(), {}), 6);
  CHECK(ds.size() == 6);
  CHECK_FALSE(verify_antichain(graph_av(Kind::digraph(), {}), ds));
}

TEST_CASE("verdicts are deterministic") {
  for (int round = 0; round < 2; ++round) {
    Verdict a = decide_wqo(word_av({}));
    Verdict b = decide_wqo(word_av({}));
    CHECK(a.witness.cycle == b.witness.cycle);
    CHECK(a.notes == b.notes);
    CHECK(antichain_witness(word_av({}), 3) ==
          antichain_witness(word_av({}), 3));
  }
}

TEST_CASE("finiteness matches the wqo verdict on random bountiful bases") {
  std::mt19937 rng(424242);
  std::vector<Kind> kinds{Kind::graph(), Kind::simple_graph(),
                          Kind::digraph(), Kind::tournament(),
                          Kind::relational(Signature{{2}})};
  for (const Kind& k : kinds) {
    std::vector<Structure> pool;
    for (int n = 1; n <= 2; ++n)
      for (Structure& s : enumerate_kind(k, n)) pool.push_back(std::move(s));
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Structure> basis;
      for (int c = count(rng); c > 0; --c) basis.push_back(pool[pick(rng)]);
      Problem p = make_problem(k, std::move(basis), {});
      FactorGraph fg = build(p, p.b);
      Verdict v = decide_wqo(p);
      int top = p.b + fg.graph.vertex_count() + 1;
      bool all_inhabited = true, any_inhabited = false;
      for (int n = p.b + 1; n <= top; ++n) {
        bool in = avoidance_nonempty(p, n);
        all_inhabited = all_inhabited && in;
        any_inhabited = any_inhabited || in;
        if (!in) break;
      }
      if (v.answer == Answer::yes) {
        // finite avoidance set: inhabitation must die out within the window
        CHECK_FALSE(all_inhabited);
      } else {
        CHECK(v.answer == Answer::no);
        CHECK(all_inhabited);
      }
    }
  }
}

TEST_CASE("atomic verdicts imply joint embedding at desk scale") {
  std::vector<Problem> atomic{word_av({}), word_av({"aa", "bb", "aba"}),
                              make_problem(Kind::tournament(), {}, {}),
                              make_problem(Kind::equivalence(), {}, {})};
  for (const Problem& p : atomic) {
    REQUIRE(decide_atomicity(p).answer == Answer::yes);
    FactorGraph fg = build(p, p.b);
    std::vector<Structure> members;
    for (int n = 1; n <= p.b + 2; ++n)
      for (Structure& s : enumerate_avoidance(p, n))
        members.push_back(std::move(s));
    for (const Structure& s : members)
      for (const Structure& t : members) {
        int bound = s.length + t.length + fg.graph.vertex_count();
        CHECK(jep_search(p, s, t, bound).has_value());
      }
  }
}
