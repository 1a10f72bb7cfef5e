#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "consec/json_io.hpp"

namespace fs = std::filesystem;
using consec::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CONSEC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path fixture(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "consec_cli_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

const std::string word_free =
    R"({"kind":{"name":"word","alphabet":["a","b"]},"basis":[]})";
const std::string word_split =
    R"({"kind":{"name":"word","alphabet":["a","b"]},"basis":["ab","ba"]})";
const std::string word_gap =
    R"({"kind":{"name":"word","alphabet":["a","b"]},"basis":["ab","ba","aa"]})";
const std::string digraph_free =
    R"({"kind":{"name":"digraph"},"basis":[]})";
const std::string da_asc =
    R"({"kind":{"name":"double_ascent"},"basis":[[1,2,3]]})";

}  // namespace

TEST_CASE("decide prints a verdict object") {
  fs::path p = fixture("split.json", word_split);
  RunResult r = run_cli("decide --problem wqo --input " + p.string());
  REQUIRE(r.status == 0);
  json v = json::parse(r.out);
  CHECK(v["problem"] == "wqo");
  CHECK(v["answer"] == "yes");
  CHECK(v["kind"]["name"] == "word");
  CHECK(v["dimension"] == 2);

  RunResult a = run_cli("decide --problem atomicity --input " + p.string());
  json va = json::parse(a.out);
  CHECK(va["answer"] == "no");
  CHECK(va["witness"]["type"] == "not_strongly_connected");
}

TEST_CASE("missing extension names the stranded member") {
  fs::path p = fixture("gap.json", word_gap);
  RunResult r =
      run_cli("decide --problem atomicity --verify --input " + p.string());
  REQUIRE(r.status == 0);
  json v = json::parse(r.out);
  CHECK(v["answer"] == "no");
  CHECK(v["witness"]["type"] == "missing_extension");
  CHECK(v["witness"]["structures"][0]["word"] == "a");
}

TEST_CASE("verdict output is byte-deterministic") {
  fs::path p = fixture("free.json", word_free);
  std::string args = "decide --problem wqo --witness 3 --input " + p.string();
  RunResult first = run_cli(args);
  RunResult second = run_cli(args);
  REQUIRE(first.status == 0);
  CHECK(first.out == second.out);
  json v = json::parse(first.out);
  CHECK(v["answer"] == "no");
  CHECK(v["antichain"].size() == 3);
}

TEST_CASE("verified witnesses pass their own audit") {
  fs::path p = fixture("free.json", word_free);
  RunResult r = run_cli("witness --count 3 --verify --input " + p.string());
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["antichain"].size() == 3);

  RunResult d = run_cli("decide --problem wqo --verify --witness 2 --input " +
                        p.string());
  CHECK(d.status == 0);
}

TEST_CASE("double ascent problems report the word basis") {
  fs::path p = fixture("da.json", da_asc);
  RunResult r = run_cli("decide --problem wqo --input " + p.string());
  REQUIRE(r.status == 0);
  json v = json::parse(r.out);
  CHECK(v["answer"] == "no");
  CHECK(v["word_basis"] == json::array({"lll", "llr", "lrr", "rrr"}));

  RunResult e = run_cli("enumerate --length 4 --input " + p.string());
  json m = json::parse(e.out);
  CHECK(m["members"].size() == 5);
  CHECK(m["members"][0] == json::array({1, 3, 2, 4}));
}

TEST_CASE("factor graph export") {
  fs::path p = fixture("split.json", word_split);
  fs::path dot = fs::temp_directory_path() / "consec_cli_tests" / "g.dot";
  RunResult r = run_cli("factor-graph --dimension 2 --emit-dot " +
                        dot.string() + " --input " + p.string());
  REQUIRE(r.status == 0);
  json g = json::parse(r.out);
  CHECK(g["dimension"] == 2);
  CHECK(g["vertices"].size() == 2);  // aa and bb
  CHECK(g["edges"].size() == 2);     // a loop on each

  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("digraph") != std::string::npos);
  CHECK(text.find("label=\"n=2;R1={(1),(2)};R2={}\"") != std::string::npos);
  CHECK(text.find("0 -> 0;") != std::string::npos);
  CHECK(text.find("1 -> 1;") != std::string::npos);
}

TEST_CASE("enumerate counts members") {
  fs::path p = fixture("dg.json", digraph_free);
  RunResult r = run_cli("enumerate --length 2 --input " + p.string());
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["members"].size() == 16);
}

TEST_CASE("oracle checks") {
  fs::path p = fixture("free.json", word_free);
  RunResult r =
      run_cli("oracle --check nonempty --length 40 --input " + p.string());
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["pass"] == true);

  fs::path items = fixture("items.json", R"(["ab","ba"])");
  RunResult j = run_cli("oracle --check jep --items " + items.string() +
                        " --input " + p.string());
  REQUIRE(j.status == 0);
  json out = json::parse(j.out);
  CHECK(out["pass"] == true);
  CHECK(out["joiner"]["word"] == "aba");

  fs::path anti = fixture("anti.json", R"(["bab","ba"])");
  RunResult a = run_cli("oracle --check antichain --items " + anti.string() +
                        " --input " + p.string());
  json av = json::parse(a.out);
  CHECK(av["pass"] == false);
  CHECK(av["counterexample"].get<std::string>().find("embeds in") !=
        std::string::npos);
}

TEST_CASE("check-kind reports scale audits") {
  fs::path p = fixture("dg.json", digraph_free);
  RunResult r = run_cli("check-kind --max-length 2 --input " + p.string());
  REQUIRE(r.status == 0);
  json v = json::parse(r.out);
  CHECK(v["valid"]["pass"] == true);
  CHECK(v["bountiful"]["pass"] == true);
}

TEST_CASE("exit codes separate bad input from blown limits") {
  fs::path bad = fixture("bad.json", "{not json");
  CHECK(run_cli("decide --problem wqo --input " + bad.string()).status == 2);

  fs::path missing_kind = fixture("nk.json", R"({"basis":[]})");
  CHECK(run_cli("decide --problem wqo --input " + missing_kind.string())
            .status == 2);

  fs::path dg = fixture("dg.json", digraph_free);
  CHECK(run_cli("enumerate --length 10 --input " + dg.string()).status == 3);

  CHECK(run_cli("decide --problem wqo --input /nonexistent.json").status == 2);
}
