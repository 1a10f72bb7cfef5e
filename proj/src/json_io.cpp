#include "consec/json_io.hpp"

#include <algorithm>

namespace consec {

namespace {

Kind parse_kind(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string())
    throw InputError("kind descriptor must be an object with a \"name\"");
  std::string name = j["name"].get<std::string>();
  if (name == "graph") return Kind::graph();
  if (name == "simple_graph") return Kind::simple_graph();
  if (name == "digraph") return Kind::digraph();
  if (name == "tournament") return Kind::tournament();
  if (name == "linear_order") return Kind::linear_order();
  if (name == "permutation") return Kind::permutation();
  if (name == "equivalence") return Kind::equivalence();
  if (name == "poset") return Kind::poset();
  if (name == "word") {
    if (!j.contains("alphabet") || !j["alphabet"].is_array() ||
        j["alphabet"].empty())
      throw InputError("word kind needs a non-empty \"alphabet\" array");
    std::vector<std::string> alphabet;
    for (const json& a : j["alphabet"]) {
      if (!a.is_string() || a.get<std::string>().empty())
        throw InputError("alphabet letters must be non-empty strings");
      alphabet.push_back(a.get<std::string>());
    }
    std::vector<std::string> sorted = alphabet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InputError("alphabet letters must be distinct");
    return Kind::word(std::move(alphabet));
  }
  if (name == "relational") {
    if (!j.contains("signature") || !j["signature"].is_array())
      throw InputError("relational kind needs a \"signature\" array");
    Signature sig;
    for (const json& a : j["signature"]) {
      if (!a.is_number_integer() || a.get<int>() < 1)
        throw InputError("signature arities must be positive integers");
      sig.arities.push_back(a.get<int>());
    }
    return Kind::relational(std::move(sig));
  }
  throw InputError("unknown kind \"" + name + "\"");
}

Structure parse_relational_entry(const Kind& k, const json& e) {
  if (!e.is_object() || !e.contains("length"))
    throw InputError("structure entries need {\"length\": n, \"relations\": [...]}");
  if (!e["length"].is_number_integer() || e["length"].get<int>() < 1)
    throw InputError("structure length must be a positive integer");
  Structure s;
  s.length = e["length"].get<int>();
  size_t slots = k.sig.arities.size();
  json rels = e.value("relations", json::array());
  if (!rels.is_array() || rels.size() != slots)
    throw InputError("expected one relation list per signature slot (" +
                     std::to_string(slots) + ")");
  s.relations.resize(slots);
  for (size_t r = 0; r < slots; ++r) {
    if (!rels[r].is_array())
      throw InputError("relations must be arrays of tuples");
    for (const json& t : rels[r]) {
      if (!t.is_array() || static_cast<int>(t.size()) != k.sig.arities[r])
        throw InputError("tuple arity mismatch in relation " +
                         std::to_string(r + 1));
      Tuple tup;
      for (const json& x : t) {
        if (!x.is_number_integer() || x.get<int>() < 1 ||
            x.get<int>() > s.length)
          throw InputError("tuple entries must lie in [1, length]");
        tup.push_back(x.get<int>());
      }
      s.relations[r].push_back(std::move(tup));
    }
    std::sort(s.relations[r].begin(), s.relations[r].end());
    s.relations[r].erase(
        std::unique(s.relations[r].begin(), s.relations[r].end()),
        s.relations[r].end());
  }
  return s;
}

Permutation parse_permutation_entry(const json& e) {
  if (!e.is_array() || e.empty())
    throw InputError("permutations are non-empty one-line arrays");
  Permutation p;
  for (const json& x : e) {
    if (!x.is_number_integer())
      throw InputError("permutation entries must be integers");
    p.push_back(x.get<int>());
  }
  if (!is_permutation(p))
    throw InputError("not a permutation of [1, n]");
  return p;
}

Structure parse_entry(const Kind& k, const json& e) {
  switch (k.name) {
    case KindName::word:
      if (!e.is_string())
        throw InputError("word basis entries are strings");
      return word_to_structure(e.get<std::string>(), k.alphabet);
    case KindName::permutation:
      return permutation_to_structure(parse_permutation_entry(e));
    case KindName::linear_order: {
      if (e.is_number_integer() && e.get<int>() >= 1) {
        Structure s;
        s.length = e.get<int>();
        return s;
      }
      return parse_relational_entry(k, e);
    }
    default:
      return parse_relational_entry(k, e);
  }
}

}  // namespace

ProblemFile parse_problem(const json& j, const Limits& lim) {
  if (!j.is_object() || !j.contains("kind"))
    throw InputError("problem files are objects with \"kind\" and \"basis\"");
  json basis = j.value("basis", json::array());
  if (!basis.is_array()) throw InputError("\"basis\" must be an array");

  ProblemFile pf;
  if (j["kind"].is_object() && j["kind"].value("name", "") == "double_ascent") {
    pf.double_ascent = true;
    for (const json& e : basis)
      pf.da_basis.push_back(parse_permutation_entry(e));
    if (pf.da_basis.empty())
      throw InputError("double-ascent problems need a non-empty basis");
    pf.problem = word_problem(pf.da_basis, lim);
    return pf;
  }
  Kind k = parse_kind(j["kind"]);
  std::vector<Structure> bs;
  for (const json& e : basis) bs.push_back(parse_entry(k, e));
  pf.problem = make_problem(std::move(k), std::move(bs), lim);
  return pf;
}

ProblemFile parse_problem_text(const std::string& text, const Limits& lim) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return parse_problem(j, lim);
}

Structure parse_structure(const ProblemFile& pf, const json& entry) {
  if (pf.double_ascent) {
    Permutation p = parse_permutation_entry(entry);
    if (!is_double_ascent(p)) throw InputError("not a double ascent");
    std::vector<std::string> ws = associated_words(p);
    return word_to_structure(ws.front(), pf.problem.kind.alphabet);
  }
  return parse_entry(pf.problem.kind, entry);
}

json kind_to_json(const Kind& k) {
  json j;
  j["name"] = k.name_string();
  if (k.name == KindName::word) j["alphabet"] = k.alphabet;
  if (k.name == KindName::relational) j["signature"] = k.sig.arities;
  return j;
}

json structure_to_json(const Problem& p, const Structure& s) {
  json j;
  j["encoding"] = s.encode();
  if (p.kind.name == KindName::word)
    j["word"] = structure_to_word(s, p.kind.alphabet);
  if (p.kind.name == KindName::permutation)
    j["permutation"] = structure_to_permutation(s);
  return j;
}

json verdict_to_json(const Problem& p, const Verdict& v) {
  json j;
  j["problem"] = v.problem;
  j["answer"] = answer_string(v.answer);
  j["criterion"] = v.notes;
  j["kind"] = kind_to_json(p.kind);
  j["dimension"] = v.dimension;
  json w;
  w["type"] = v.witness.type_string();
  if (!v.witness.cycle.empty()) w["vertices"] = v.witness.cycle;
  if (v.witness.in_vertex >= 0) w["in_vertex"] = v.witness.in_vertex;
  if (v.witness.out_vertex >= 0) w["out_vertex"] = v.witness.out_vertex;
  if (v.witness.component_a >= 0) {
    w["component_a"] = v.witness.component_a;
    w["component_b"] = v.witness.component_b;
  }
  if (v.witness.violation_vertex >= 0)
    w["violation_vertex"] = v.witness.violation_vertex;
  if (!v.witness.structures.empty()) {
    json xs = json::array();
    for (const Structure& s : v.witness.structures)
      xs.push_back(structure_to_json(p, s));
    w["structures"] = xs;
  }
  if (!v.witness.labels.empty()) w["labels"] = v.witness.labels;
  j["witness"] = w;
  return j;
}

json factor_graph_to_json(const Problem& p, const FactorGraph& fg) {
  json j;
  j["dimension"] = fg.m;
  json vs = json::array();
  for (const Structure& s : fg.vertices) vs.push_back(structure_to_json(p, s));
  j["vertices"] = vs;
  json es = json::array();
  for (auto [u, v] : fg.graph.edges) es.push_back(json::array({u, v}));
  j["edges"] = es;
  return j;
}

}  // namespace consec
