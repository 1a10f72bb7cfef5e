#include "consec/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace consec {

std::vector<Structure> enumerate_avoidance(const Problem& p, int n) {
  std::vector<Structure> out;
  for (Structure& s : enumerate_kind(p.kind, n, p.limits))
    if (avoids(s, p.basis)) out.push_back(std::move(s));
  return out;
}

namespace {

// One-point extensions of a window that keep the basis avoided, reduced to
// their new rightmost window.
std::vector<Structure> window_successors(const Problem& p,
                                         const Structure& w) {
  std::vector<Structure> succ;
  for (const Structure& pt : enumerate_kind(p.kind, 1, p.limits)) {
    for (const Structure& e : combine_all(p.kind, w, pt, 0, p.limits)) {
      if (!avoids(e, p.basis)) continue;
      succ.push_back(restrict(e, {2, e.length}));
    }
  }
  std::sort(succ.begin(), succ.end(), encoding_less);
  succ.erase(std::unique(succ.begin(), succ.end(),
                         [](const Structure& a, const Structure& b) {
                           return a.encode() == b.encode();
                         }),
             succ.end());
  return succ;
}

bool reach_length(const Problem& p, const Structure& w, int remaining,
                  std::map<std::pair<std::string, int>, bool>& memo) {
  if (remaining == 0) return true;
  auto key = std::make_pair(w.encode(), remaining);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  memo[key] = false;  // cuts cycles; a revisit at equal remaining cannot help
  bool ok = false;
  for (const Structure& nxt : window_successors(p, w))
    if (reach_length(p, nxt, remaining - 1, memo)) {
      ok = true;
      break;
    }
  return memo[key] = ok;
}

}  // namespace

bool avoidance_nonempty(const Problem& p, int n) {
  if (n < 1) throw InputError("length must be positive");
  int b = p.b;
  if (n <= b) return !enumerate_avoidance(p, n).empty();
  std::map<std::pair<std::string, int>, bool> memo;
  for (const Structure& w : enumerate_avoidance(p, b))
    if (reach_length(p, w, n - b, memo)) return true;
  return false;
}

namespace {

void consider(std::optional<Structure>& best, const Structure& cand) {
  if (!best || encoding_less(cand, *best)) best = cand;
}

}  // namespace

std::optional<Structure> jep_search(const Problem& p, const Structure& s,
                                    const Structure& t, int max_len) {
  if (!is_member(p.kind, s) || !is_member(p.kind, t))
    throw InputError("joint-embedding operands must belong to the kind");
  int lo = std::max(s.length, t.length);
  for (int len = lo; len <= max_len; ++len) {
    if (relation_bits(p.kind, len) <= p.limits.max_bits) {
      for (const Structure& e : enumerate_avoidance(p, len))
        if (consecutive_leq(s, e) && consecutive_leq(t, e)) return e;
      continue;
    }
    std::optional<Structure> best;
    if (len == t.length && consecutive_leq(s, t) && avoids(t, p.basis))
      consider(best, t);
    if (len == s.length && consecutive_leq(t, s) && avoids(s, p.basis))
      consider(best, s);
    int x = s.length + t.length - len;
    if (x >= 0 && x <= std::min(s.length, t.length)) {
      const Structure* pairs[2][2] = {{&s, &t}, {&t, &s}};
      for (auto& pr : pairs) {
        std::vector<Structure> cands;
        try {
          cands = combine_all(p.kind, *pr[0], *pr[1], x, p.limits);
        } catch (const LimitError&) {
          if (auto one = combine_any(p.kind, *pr[0], *pr[1], x))
            cands.push_back(std::move(*one));
        }
        for (const Structure& c : cands)
          if (avoids(c, p.basis)) consider(best, c);
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<std::string> verify_antichain(const Problem& p,
                                            const std::vector<Structure>& xs) {
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!is_member(p.kind, xs[i]))
      return xs[i].encode() + " is not a member of the kind";
    if (!avoids(xs[i], p.basis))
      return xs[i].encode() + " does not avoid the basis";
  }
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      if (auto off = consecutive_leq(xs[i], xs[j])) {
        std::ostringstream msg;
        msg << xs[i].encode() << " embeds in " << xs[j].encode()
            << " at offset " << *off;
        return msg.str();
      }
    }
  return std::nullopt;
}

OracleReport check_avoidance_listing(const Problem& p, int n,
                                     const std::vector<Structure>& claimed) {
  std::vector<std::string> want, got;
  for (const Structure& s : enumerate_avoidance(p, n)) want.push_back(s.encode());
  for (const Structure& s : claimed) got.push_back(s.encode());
  std::sort(got.begin(), got.end());
  OracleReport rep;
  if (want == got) return rep;
  rep.agree = false;
  std::vector<std::string> missing, extra;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                      std::back_inserter(extra));
  std::ostringstream msg;
  msg << "avoidance listing mismatch at length " << n
      << " for kind " << p.kind.name_string();
  if (!missing.empty()) msg << "; missing " << missing.front();
  if (!extra.empty()) msg << "; extra " << extra.front();
  msg << "; re-run: enumerate_avoidance(problem, " << n << ")";
  rep.detail = msg.str();
  return rep;
}

}  // namespace consec
