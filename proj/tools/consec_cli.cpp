#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "consec/json_io.hpp"
#include "consec/oracle.hpp"

namespace {

using consec::json;

consec::Limits limits_from_env() {
  consec::Limits lim;
  if (const char* bits = std::getenv("CONSEC_MAX_BITS")) {
    int v = std::atoi(bits);
    if (v > 0) lim.max_bits = v;
  }
  return lim;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw consec::InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw consec::InputError("cannot write " + path);
  out << text;
}

consec::ProblemFile load_problem(const std::string& path,
                                 const consec::Limits& lim) {
  return consec::parse_problem_text(slurp(path), lim);
}

// Independent re-checks of a verdict's witness before it is printed.
void verify_verdict(const consec::Problem& p, const consec::Verdict& v) {
  using consec::Witness;
  auto bail = [](const std::string& why) {
    throw consec::InputError("witness verification failed: " + why);
  };
  switch (v.witness.type) {
    case Witness::Type::none:
      return;
    case Witness::Type::cycle:
    case Witness::Type::in_out_cycle: {
      consec::FactorGraph fg = consec::build(p, v.dimension);
      const auto& c = v.witness.cycle;
      for (size_t i = 0; i + 1 < c.size(); ++i)
        if (!fg.graph.has_edge(c[i], c[i + 1]))
          bail("claimed cycle is not a walk of the factor graph");
      if (c.front() != c.back()) bail("claimed cycle is not closed");
      if (v.problem == "wqo" && v.answer == consec::Answer::no) {
        std::vector<consec::Structure> xs = consec::antichain_witness(p, 3);
        if (auto why = consec::verify_antichain(p, xs)) bail(*why);
      }
      return;
    }
    case Witness::Type::not_strongly_connected: {
      consec::FactorGraph fg = consec::build(p, v.dimension);
      for (const auto& comp : consec::sccs(fg.graph)) {
        bool a = std::find(comp.begin(), comp.end(),
                           v.witness.component_a) != comp.end();
        bool b = std::find(comp.begin(), comp.end(),
                           v.witness.component_b) != comp.end();
        if (a && b) bail("representatives share a strong component");
      }
      return;
    }
    case Witness::Type::not_bicycle: {
      consec::FactorGraph fg = consec::build(p, v.dimension);
      if (consec::is_bicycle(fg.graph)) bail("graph is a bicycle after all");
      return;
    }
    case Witness::Type::missing_extension: {
      const consec::Structure& s = v.witness.structures.at(0);
      for (const consec::Structure& t : consec::enumerate_avoidance(p, p.b))
        if (consec::consecutive_leq(s, t))
          bail("claimed non-extendable member does extend");
      return;
    }
    case Witness::Type::antichain: {
      if (auto why = consec::verify_antichain(p, v.witness.structures))
        bail(*why);
      return;
    }
    default:
      return;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Deciders for finitely based avoidance sets under the "
               "consecutive order"};
  app.require_subcommand(1);
  consec::Limits lim = limits_from_env();

  std::string input, problem_kind = "wqo", emit_dot, items_path, check;
  int dimension = 0, length = 0, witness_count = 0, max_length = 3,
      max_len = 0;
  bool verify = false;

  CLI::App* decide = app.add_subcommand("decide", "Decide wqo or atomicity");
  decide->add_option("--problem", problem_kind, "wqo or atomicity")
      ->check(CLI::IsMember({"wqo", "atomicity"}))
      ->required();
  decide->add_option("--input", input, "problem file")->required();
  decide->add_option("--dimension", dimension, "factor-graph dimension");
  decide->add_option("--emit-dot", emit_dot, "write the factor graph as DOT");
  decide->add_option("--witness", witness_count,
                     "attach an antichain of this size to a no-verdict");
  decide->add_flag("--verify", verify, "re-check the witness before printing");

  CLI::App* fgraph = app.add_subcommand("factor-graph", "Build and export");
  fgraph->add_option("--input", input)->required();
  fgraph->add_option("--dimension", dimension);
  fgraph->add_option("--emit-dot", emit_dot);

  CLI::App* enumerate = app.add_subcommand("enumerate",
                                           "List avoidance-set members");
  enumerate->add_option("--input", input)->required();
  enumerate->add_option("--length", length)->required();

  CLI::App* witness = app.add_subcommand("witness", "Antichain witness");
  witness->add_option("--input", input)->required();
  witness->add_option("--count", witness_count)->required();
  witness->add_flag("--verify", verify);

  CLI::App* check_kind = app.add_subcommand(
      "check-kind", "Combining sanity reports for the kind");
  check_kind->add_option("--input", input)->required();
  check_kind->add_option("--max-length", max_length);

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle->add_option("--input", input)->required();
  oracle
      ->add_option("--check", check,
                   "nonempty | jep | antichain (jep/antichain read --items)")
      ->check(CLI::IsMember({"nonempty", "jep", "antichain"}))
      ->required();
  oracle->add_option("--length", length);
  oracle->add_option("--max-len", max_len, "jep search length bound");
  oracle->add_option("--items", items_path,
                     "JSON array of structures, basis entry format");

  CLI11_PARSE(app, argc, argv);

  if (decide->parsed()) {
    consec::ProblemFile pf = load_problem(input, lim);
    consec::Verdict v;
    if (pf.double_ascent)
      v = problem_kind == "wqo" ? consec::decide_wqo_da(pf.da_basis, lim)
                                : consec::decide_atomicity_da(pf.da_basis, lim);
    else
      v = problem_kind == "wqo" ? consec::decide_wqo(pf.problem)
                                : consec::decide_atomicity(pf.problem);
    if (verify) verify_verdict(pf.problem, v);
    json out = consec::verdict_to_json(pf.problem, v);
    if (pf.double_ascent) {
      json wb = json::array();
      for (const consec::Structure& s : pf.problem.basis)
        wb.push_back(consec::structure_to_word(s, pf.problem.kind.alphabet));
      out["word_basis"] = wb;
    }
    if (witness_count > 0 && v.problem == "wqo" &&
        v.answer == consec::Answer::no) {
      std::vector<consec::Structure> xs =
          consec::antichain_witness(pf.problem, witness_count);
      if (verify)
        if (auto why = consec::verify_antichain(pf.problem, xs))
          throw consec::InputError("witness verification failed: " + *why);
      json a = json::array();
      for (const consec::Structure& s : xs)
        a.push_back(consec::structure_to_json(pf.problem, s));
      out["antichain"] = a;
    }
    if (!emit_dot.empty()) {
      int m = dimension > 0 ? dimension : pf.problem.b;
      if (m < pf.problem.b)
        throw consec::InputError("dimension below the max basis length");
      write_file(emit_dot,
                 consec::to_dot(consec::build(pf.problem, m).graph));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (fgraph->parsed()) {
    consec::ProblemFile pf = load_problem(input, lim);
    int m = dimension > 0 ? dimension : pf.problem.b;
    if (m < pf.problem.b)
      throw consec::InputError("dimension below the max basis length");
    consec::FactorGraph fg = consec::build(pf.problem, m);
    if (!emit_dot.empty()) write_file(emit_dot, consec::to_dot(fg.graph));
    std::cout << consec::factor_graph_to_json(pf.problem, fg).dump() << "\n";
    return 0;
  }

  if (enumerate->parsed()) {
    consec::ProblemFile pf = load_problem(input, lim);
    json out;
    out["length"] = length;
    json members = json::array();
    if (pf.double_ascent) {
      for (const consec::Permutation& p :
           consec::enumerate_double_ascents(length, pf.da_basis))
        members.push_back(p);
    } else {
      for (const consec::Structure& s :
           consec::enumerate_avoidance(pf.problem, length))
        members.push_back(consec::structure_to_json(pf.problem, s));
    }
    out["members"] = members;
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (witness->parsed()) {
    consec::ProblemFile pf = load_problem(input, lim);
    std::vector<consec::Structure> xs =
        consec::antichain_witness(pf.problem, witness_count);
    if (verify)
      if (auto why = consec::verify_antichain(pf.problem, xs))
        throw consec::InputError("witness verification failed: " + *why);
    json out;
    json a = json::array();
    for (const consec::Structure& s : xs)
      a.push_back(consec::structure_to_json(pf.problem, s));
    out["antichain"] = a;
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (check_kind->parsed()) {
    consec::ProblemFile pf = load_problem(input, lim);
    json out;
    consec::ScaleReport valid =
        consec::check_valid_at_scale(pf.problem.kind, max_length, lim);
    out["valid"] = {{"pairs_checked", valid.pairs_checked},
                    {"pass", valid.pass()}};
    if (pf.problem.kind.classification() == consec::Classification::bountiful) {
      consec::ScaleReport bounty =
          consec::check_bountiful_at_scale(pf.problem.kind, max_length, lim);
      out["bountiful"] = {{"pairs_checked", bounty.pairs_checked},
                          {"pass", bounty.pass()}};
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (oracle->parsed()) {
    consec::ProblemFile pf = load_problem(input, lim);
    std::vector<consec::Structure> items;
    if (!items_path.empty()) {
      json j = json::parse(slurp(items_path), nullptr, false);
      if (j.is_discarded() || !j.is_array())
        throw consec::InputError("--items must be a JSON array");
      for (const json& e : j) items.push_back(consec::parse_structure(pf, e));
    }
    json out;
    out["check"] = check;
    if (check == "nonempty") {
      if (length < 1) throw consec::InputError("--length required");
      out["length"] = length;
      out["pass"] = consec::avoidance_nonempty(pf.problem, length);
    } else if (check == "jep") {
      if (items.size() != 2)
        throw consec::InputError("jep needs exactly two --items structures");
      int bound = max_len > 0 ? max_len
                              : items[0].length + items[1].length + 8;
      auto joiner =
          consec::jep_search(pf.problem, items[0], items[1], bound);
      out["pass"] = joiner.has_value();
      out["bound"] = bound;
      if (joiner)
        out["joiner"] = consec::structure_to_json(pf.problem, *joiner);
    } else {
      auto why = consec::verify_antichain(pf.problem, items);
      out["pass"] = !why.has_value();
      if (why) out["counterexample"] = *why;
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const consec::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return 3;
  } catch (const consec::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
}
