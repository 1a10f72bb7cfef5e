#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "consec/oracle.hpp"

using namespace consec;

namespace {

std::vector<std::string> ab{"a", "b"};

Problem word_av(std::vector<std::string> basis) {
  std::vector<Structure> bs;
  for (const std::string& w : basis) bs.push_back(word_to_structure(w, ab));
  return make_problem(Kind::word(ab), std::move(bs));
}

std::vector<std::string> words_of(const std::vector<Structure>& xs) {
  std::vector<std::string> out;
  for (const Structure& s : xs) out.push_back(structure_to_word(s, ab));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("enumerate_avoidance filters by the basis") {
  CHECK(words_of(enumerate_avoidance(word_av({"ab", "ba"}), 3)) ==
        std::vector<std::string>{"aaa", "bbb"});
  CHECK(enumerate_avoidance(word_av({"aa", "bb", "aba"}), 4).empty());
  CHECK(enumerate_avoidance(word_av({"ab", "ba"}), 1).size() == 2);

  Problem p = word_av({"aa"});
  for (const Structure& s : enumerate_avoidance(p, 4))
    CHECK(avoids(s, p.basis));
  CHECK(enumerate_avoidance(p, 4).size() + 3 ==
        enumerate_kind(p.kind, 4).size() - 5);  // 8 of 16 contain aa
}

TEST_CASE("avoidance_nonempty agrees with enumeration and scales past it") {
  Problem grow = word_av({"ab", "ba"});
  Problem die = word_av({"aa", "bb", "aba"});
  for (int n = 1; n <= 6; ++n) {
    CHECK(avoidance_nonempty(grow, n) ==
          !enumerate_avoidance(grow, n).empty());
    CHECK(avoidance_nonempty(die, n) == !enumerate_avoidance(die, n).empty());
  }
  CHECK(avoidance_nonempty(grow, 40));
  CHECK_FALSE(avoidance_nonempty(die, 40));

  Problem digraphs = make_problem(Kind::digraph(), {}, {});
  CHECK(avoidance_nonempty(digraphs, 30));  // far beyond the enumeration cap
}

TEST_CASE("jep_search finds least joiners") {
  Problem split = word_av({"ab", "ba"});
  CHECK_FALSE(jep_search(split, word_to_structure("aa", ab),
                         word_to_structure("bb", ab), 12));

  Structure aa = word_to_structure("aa", ab);
  CHECK(jep_search(split, aa, aa, 12) == aa);

  Problem tight = word_av({"aa", "bb", "aba"});
  std::optional<Structure> j = jep_search(
      tight, word_to_structure("ab", ab), word_to_structure("ba", ab), 3);
  REQUIRE(j.has_value());
  CHECK(structure_to_word(*j, ab) == "bab");
}

TEST_CASE("jep_search keeps working past the enumeration cap") {
  Problem p = make_problem(Kind::tournament(), {}, {});
  std::vector<Structure> c3 = enumerate_kind(p.kind, 3);
  for (const Structure& s : c3)
    for (const Structure& t : c3) {
      std::optional<Structure> j = jep_search(p, s, t, 8);
      REQUIRE(j.has_value());
      CHECK(consecutive_leq(s, *j));
      CHECK(consecutive_leq(t, *j));
    }
}

TEST_CASE("verify_antichain explains failures") {
  Problem p0 = word_av({});
  std::vector<Structure> good{word_to_structure("aa", ab),
                              word_to_structure("aba", ab),
                              word_to_structure("abba", ab)};
  CHECK_FALSE(verify_antichain(p0, good));
  CHECK_FALSE(verify_antichain(p0, {good[0]}));

  std::vector<Structure> bad{word_to_structure("ab", ab),
                             word_to_structure("aab", ab)};
  std::optional<std::string> why = verify_antichain(p0, bad);
  REQUIRE(why.has_value());
  CHECK(why->find("embeds in") != std::string::npos);

  Problem strict = word_av({"bb"});
  CHECK(verify_antichain(strict, {word_to_structure("abba", ab)}).has_value());
}

TEST_CASE("avoidance listings are cross-checked with a re-runnable report") {
  Problem p = word_av({"ab", "ba"});
  std::vector<Structure> right = enumerate_avoidance(p, 3);
  CHECK(check_avoidance_listing(p, 3, right).agree);

  std::vector<Structure> wrong = right;
  wrong.push_back(word_to_structure("aab", ab));
  OracleReport rep = check_avoidance_listing(p, 3, wrong);
  CHECK_FALSE(rep.agree);
  CHECK(rep.detail.find("re-run") != std::string::npos);
}
