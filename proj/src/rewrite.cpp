#include "threepage/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "threepage/decode.hpp"
#include "threepage/surface.hpp"

namespace threepage {

namespace {

struct PackedRule {
  std::string lhs, rhs;
  int id;
};

std::vector<PackedRule> packed_rules(RuleTier tier) {
  std::vector<PackedRule> out;
  auto rels = effective_relations(tier);
  for (size_t i = 0; i < rels.size(); ++i) {
    out.push_back(PackedRule{rels[i].lhs.packed(), rels[i].rhs.packed(), static_cast<int>(i)});
  }
  return out;
}

struct Parent {
  std::string prev;
  int rule = -1;
  uint32_t pos = 0;
  ApplyDir dir = ApplyDir::LtoR;
};

using Visited = std::unordered_map<std::string, Parent>;

// all one-step images of w within the length cap
void expand(const std::string& w, const std::vector<PackedRule>& rules, size_t cap,
            std::vector<std::tuple<std::string, int, uint32_t, ApplyDir>>& out) {
  out.clear();
  for (const PackedRule& r : rules) {
    for (int d = 0; d < 2; ++d) {
      const std::string& src = d == 0 ? r.lhs : r.rhs;
      const std::string& dst = d == 0 ? r.rhs : r.lhs;
      if (w.size() - src.size() + dst.size() > cap) continue;
      if (src.empty()) {
        for (size_t p = 0; p + 1 <= w.size() + 1; ++p) {
          out.emplace_back(w.substr(0, p) + dst + w.substr(p), r.id, static_cast<uint32_t>(p),
                           d == 0 ? ApplyDir::LtoR : ApplyDir::RtoL);
        }
      } else {
        size_t p = w.find(src);
        while (p != std::string::npos) {
          out.emplace_back(w.substr(0, p) + dst + w.substr(p + src.size()), r.id,
                           static_cast<uint32_t>(p), d == 0 ? ApplyDir::LtoR : ApplyDir::RtoL);
          p = w.find(src, p + 1);
        }
      }
    }
  }
}

std::vector<PathStep> build_path(const Visited& vis, const std::string& from_key,
                                 const std::vector<RelationInstance>& rels, bool invert) {
  // walk parents back to the root; steps recorded child <- parent
  std::vector<std::tuple<int, uint32_t, ApplyDir>> raw;
  std::string cur = from_key;
  while (true) {
    const Parent& p = vis.at(cur);
    if (p.rule < 0) break;
    raw.emplace_back(p.rule, p.pos, p.dir);
    cur = p.prev;
  }
  std::vector<PathStep> steps;
  if (!invert) {
    // root -> from_key order
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
      steps.push_back(PathStep{rels[std::get<0>(*it)], std::get<1>(*it), std::get<2>(*it)});
    }
  } else {
    // from_key -> root order with inverted direction
    for (auto& [rid, pos, dir] : raw) {
      steps.push_back(PathStep{rels[rid], pos,
                               dir == ApplyDir::LtoR ? ApplyDir::RtoL : ApplyDir::LtoR});
    }
  }
  return steps;
}

std::optional<std::string> tier_safe_witness(const Word& w1, const Word& w2, RuleTier tier) {
  auto b1 = page_balance(w1), b2 = page_balance(w2);
  if (b1 != b2) {
    auto s = [](const std::array<int, 3>& b) {
      return "(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," +
             std::to_string(b[2]) + ")";
    };
    return "page balance " + s(b1) + " vs " + s(b2);
  }
  auto nx = [](const Word& w) {
    int n = 0;
    for (const Letter& l : w.letters())
      if (l.kind == Kind::X) ++n;
    return n;
  };
  if (tier != RuleTier::Full && nx(w1) != nx(w2)) {
    return "singular count " + std::to_string(nx(w1)) + " vs " + std::to_string(nx(w2));
  }
  DecodeResult d1 = decode(w1), d2 = decode(w2);
  if (d1.ok() && d2.ok()) {
    if (tier != RuleTier::Full) {
      int c1 = static_cast<int>(d1.diagram->components.size());
      int c2 = static_cast<int>(d2.diagram->components.size());
      if (c1 != c2) return "component count " + std::to_string(c1) + " vs " + std::to_string(c2);
    }
    int chi1 = euler_characteristic(w1), chi2 = euler_characteristic(w2);
    if (chi1 != chi2) {
      return "euler characteristic " + std::to_string(chi1) + " vs " + std::to_string(chi2);
    }
    if (tier == RuleTier::Classical) {
      LinkDiagram D1 = to_link_diagram(w1), D2 = to_link_diagram(w2);
      auto m1 = linking_canonical(linking_matrix(D1));
      auto m2 = linking_canonical(linking_matrix(D2));
      if (m1 != m2) return "linking matrix";
      if (D1.crossings.size() <= kBracketCrossingCap &&
          D2.crossings.size() <= kBracketCrossingCap) {
        if (normalized_bracket_set(D1) != normalized_bracket_set(D2)) {
          return "kauffman bracket";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SearchBudget SearchBudget::defaults_for(size_t input_length) {
  SearchBudget b;
  b.max_word_length = input_length + 8;
  if (const char* env = std::getenv("THREEPAGE_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_states = static_cast<size_t>(v);
  }
  return b;
}

Word replay(const Word& start, const std::vector<PathStep>& path) {
  Word w = start;
  for (const PathStep& s : path) w = apply(w, s.rel, s.pos, s.dir);
  return w;
}

Verdict equivalent(const Word& w1, const Word& w2, RuleTier tier, const SearchBudget& budget) {
  return equivalent_with(effective_relations(tier), w1, w2, tier, budget);
}

Verdict equivalent_with(const std::vector<RelationInstance>& rels, const Word& w1,
                        const Word& w2, RuleTier witness_tier, const SearchBudget& budget) {
  Verdict v;
  if (w1 == w2) {
    v.outcome = Outcome::Proved;
    return v;
  }
  if (auto wit = tier_safe_witness(w1, w2, witness_tier)) {
    v.outcome = Outcome::Refuted;
    v.witness = *wit;
    return v;
  }

  std::vector<PackedRule> rules;
  for (size_t i = 0; i < rels.size(); ++i) {
    rules.push_back(PackedRule{rels[i].lhs.packed(), rels[i].rhs.packed(), static_cast<int>(i)});
  }
  const std::string k1 = w1.packed(), k2 = w2.packed();
  const size_t base_cap = std::max(w1.size(), w2.size());
  size_t states_total = 2;

  std::vector<std::tuple<std::string, int, uint32_t, ApplyDir>> buf;
  for (size_t cap = base_cap; cap <= budget.max_word_length; ++cap) {
    Visited vis[2];
    std::vector<std::string> frontier[2];
    vis[0][k1] = Parent{};
    vis[1][k2] = Parent{};
    frontier[0] = {k1};
    frontier[1] = {k2};
    size_t rounds[2] = {0, 0};  // max_depth bounds the BFS depth per side
    bool exhausted_both = false;
    while (!exhausted_both) {
      auto usable = [&](int s) { return !frontier[s].empty() && rounds[s] < budget.max_depth; };
      int side;
      if (usable(0) && usable(1)) side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
      else if (usable(0)) side = 0;
      else if (usable(1)) side = 1;
      else break;
      ++rounds[side];
      std::sort(frontier[side].begin(), frontier[side].end(),
                [](const std::string& a, const std::string& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
                });
      std::map<std::string, Parent> layer;
      for (const std::string& w : frontier[side]) {
        expand(w, rules, cap, buf);
        for (auto& [nb, rid, pos, dir] : buf) {
          if (vis[side].count(nb) || layer.count(nb)) continue;
          layer.emplace(nb, Parent{w, rid, pos, dir});
        }
      }
      if (states_total + layer.size() > budget.max_states) {
        v.outcome = Outcome::Unknown;
        v.states_visited = states_total;
        return v;
      }
      states_total += layer.size();
      std::optional<std::string> meet;
      std::vector<std::string> next;
      next.reserve(layer.size());
      for (auto& [nb, par] : layer) {
        vis[side].emplace(nb, std::move(par));
        next.push_back(nb);
        if (vis[1 - side].count(nb) && (!meet || nb < *meet)) meet = nb;
      }
      frontier[side] = std::move(next);
      if (meet) {
        std::vector<PathStep> path = build_path(vis[0], *meet, rels, false);
        std::vector<PathStep> back = build_path(vis[1], *meet, rels, true);
        path.insert(path.end(), back.begin(), back.end());
        if (replay(w1, path) != w2) {
          throw std::logic_error("equivalent: path replay failed");
        }
        v.outcome = Outcome::Proved;
        v.path = std::move(path);
        v.states_visited = states_total;
        return v;
      }
      exhausted_both = frontier[0].empty() && frontier[1].empty();
    }
  }
  v.outcome = Outcome::Unknown;
  v.states_visited = states_total;
  return v;
}

SimplifyResult simplify(const Word& w, RuleTier tier, const SearchBudget& budget) {
  const auto rels = effective_relations(tier);
  const auto rules = packed_rules(tier);
  const std::string k0 = w.packed();
  Visited vis;
  vis[k0] = Parent{};

  auto better = [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  std::string best = k0;
  // priority by (length, lex) over unexpanded states
  std::map<std::pair<size_t, std::string>, bool> pq;
  pq[{k0.size(), k0}] = true;
  std::vector<std::tuple<std::string, int, uint32_t, ApplyDir>> buf;
  while (!pq.empty() && vis.size() < budget.max_states) {
    auto it = pq.begin();
    std::string cur = it->first.second;
    pq.erase(it);
    expand(cur, rules, budget.max_word_length, buf);
    for (auto& [nb, rid, pos, dir] : buf) {
      if (vis.count(nb)) continue;
      if (vis.size() >= budget.max_states) break;
      vis.emplace(nb, Parent{cur, rid, pos, dir});
      pq[{nb.size(), nb}] = true;
      if (better(nb, best)) best = nb;
    }
  }
  SimplifyResult res;
  res.result = Word::from_packed(best);
  res.path = build_path(vis, best, rels, false);
  res.states_visited = vis.size();
  if (replay(w, res.path) != res.result) {
    throw std::logic_error("simplify: path replay failed");
  }
  return res;
}

CentralityResult is_central(const Word& w, RuleTier tier, const SearchBudget& budget) {
  CentralityResult res;
  auto bal = page_balance(w);
  if (bal != std::array<int, 3>{0, 0, 0}) {
    res.outcome = Outcome::Refuted;
    res.witness = "page balance (" + std::to_string(bal[0]) + "," + std::to_string(bal[1]) +
                  "," + std::to_string(bal[2]) + ") != (0,0,0): the class of w contains no "
                  "closed-diagram word";
    return res;
  }
  bool all_proved = true;
  for (int v = 0; v < kNumLetters; ++v) {
    Letter g = Letter::unpack(static_cast<uint8_t>(v));
    Word wg = w.append(g);
    Word gw = w.prepend(g);
    Verdict ver = equivalent(wg, gw, tier, budget);
    if (ver.outcome == Outcome::Refuted) {
      res.outcome = Outcome::Refuted;
      res.witness = "w " + format_word(Word({g})) + " vs " + format_word(Word({g})) +
                    " w: " + ver.witness;
      res.commutations.emplace_back(g, std::move(ver));
      return res;
    }
    if (!ver.proved()) all_proved = false;
    res.commutations.emplace_back(g, std::move(ver));
  }
  res.outcome = all_proved ? Outcome::Proved : Outcome::Unknown;
  return res;
}

}  // namespace threepage
