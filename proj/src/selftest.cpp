#include "threepage/selftest.hpp"

#include <algorithm>
#include <set>

#include "threepage/invariants.hpp"
#include "threepage/link_diagram.hpp"
#include "threepage/surface.hpp"

namespace threepage {

namespace {

int x_count(const Word& w) {
  int n = 0;
  for (const Letter& l : w.letters())
    if (l.kind == Kind::X) ++n;
  return n;
}

std::string side_str(const RelationInstance& r) {
  return "(" + std::to_string(static_cast<int>(r.family)) + "," +
         std::to_string(static_cast<int>(r.index)) + "," + r.tag + (r.redundant ? "*" : "") + ")";
}

// interface signatures comparable across the two sides
struct Signature {
  std::array<std::vector<bool>, 3> dirs;  // per page, is_in sequence
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairing;
  int loops;
};

Signature signature_of(const Word& w) {
  TangleInterface ti = tangle_interface(w);
  Signature s;
  for (int pg = 0; pg < 3; ++pg) {
    for (auto& [end, is_in] : ti.external[pg]) s.dirs[pg].push_back(is_in);
  }
  s.pairing = ti.pairing;
  for (auto& pr : s.pairing) {
    if (pr.second < pr.first) std::swap(pr.first, pr.second);
  }
  std::sort(s.pairing.begin(), s.pairing.end());
  s.loops = ti.closed_loops;
  return s;
}

}  // namespace

SafetyReport structural_safety(const std::array<LocalPicture, kNumLetters>& table) {
  detail::set_local_picture_override(&table);
  SafetyReport rep;
  auto done = [&]() { detail::set_local_picture_override(nullptr); };

  auto all = effective_relations(RuleTier::Full);
  for (const RelationInstance& r : all) {
    ++rep.instances_checked;
    if (page_balance(r.lhs) != page_balance(r.rhs)) {
      rep.issues.push_back({side_str(r), "page balance differs between sides"});
      continue;
    }
    if (r.family <= Family::R5 && x_count(r.lhs) != x_count(r.rhs)) {
      rep.issues.push_back({side_str(r), "singular count differs between sides"});
      continue;
    }
    Signature s1 = signature_of(r.lhs);
    Signature s2 = signature_of(r.rhs);
    if (s1.dirs != s2.dirs) {
      // the "= 1" shape: left side one through-strand in a single page
      bool allowed = false;
      if (r.rhs.empty()) {
        int pages_used = 0, total = 0;
        for (int pg = 0; pg < 3; ++pg) {
          if (!s1.dirs[pg].empty()) ++pages_used;
          total += static_cast<int>(s1.dirs[pg].size());
        }
        allowed = pages_used == 1 && total == 2 && s1.pairing.size() == 1 && s1.loops == 0;
      }
      if (!allowed) {
        rep.issues.push_back({side_str(r), "boundary interface differs between sides"});
        continue;
      }
    } else if (r.family != Family::R7) {
      if (s1.pairing != s2.pairing) {
        rep.issues.push_back({side_str(r), "strand pairing differs between sides"});
        continue;
      }
      if (s1.loops != s2.loops) {
        rep.issues.push_back({side_str(r), "internal loop count differs between sides"});
        continue;
      }
    }
  }

  // rotation closure of the combined set
  std::set<std::pair<std::string, std::string>> pool;
  for (const RelationInstance& r : all) pool.insert({r.lhs.packed(), r.rhs.packed()});
  for (const RelationInstance& r : all) {
    RelationInstance rr = rotate(r, 1);
    if (!pool.count({rr.lhs.packed(), rr.rhs.packed()})) {
      rep.issues.push_back({side_str(r), "rotation image missing from the combined set"});
    }
  }
  done();
  return rep;
}

uint64_t ContextGen::next() {
  // xorshift64*
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545f4914f6cdd1dull;
}

Word ContextGen::closed_word(size_t max_len, bool classical_only) {
  // grow a word tracking per-page open-arc counts, steering to closure
  std::vector<Letter> out;
  int n[3] = {0, 0, 0};
  size_t target = 4 + next() % (max_len > 4 ? max_len - 4 : 1);
  while (out.size() < max_len + 8) {
    int total = n[0] + n[1] + n[2];
    bool must_close = out.size() >= target;
    std::vector<Letter> cands;
    for (int k = 0; k < kNumKinds; ++k) {
      Kind kind = static_cast<Kind>(k);
      if (classical_only && kind == Kind::X) continue;
      for (int i = 0; i < 3; ++i) {
        int p = i, q = (i + 1) % 3;
        int delta = 0;
        bool feasible = true;
        switch (kind) {
          case Kind::A: delta = 2; break;
          case Kind::B: feasible = n[q] > 0; delta = 0; break;
          case Kind::C: feasible = n[p] > 0 && n[q] > 0; delta = -2; break;
          case Kind::D: feasible = n[p] > 0; delta = 0; break;
          case Kind::X: feasible = n[p] > 0 && n[q] > 0; delta = 0; break;
        }
        if (!feasible) continue;
        if (must_close && delta >= 0 && total > 0) continue;
        cands.push_back(Letter{kind, static_cast<uint8_t>(i)});
      }
    }
    if (cands.empty()) break;
    Letter l = cands[next() % cands.size()];
    out.push_back(l);
    int p = l.index, q = (l.index + 1) % 3;
    switch (l.kind) {
      case Kind::A: ++n[p]; ++n[q]; break;
      case Kind::B: --n[q]; ++n[p]; break;
      case Kind::C: --n[p]; --n[q]; break;
      case Kind::D: --n[p]; ++n[q]; break;
      case Kind::X: break;
    }
    if (n[0] + n[1] + n[2] == 0 && out.size() >= 2) break;
  }
  if (n[0] + n[1] + n[2] != 0) return Word();  // caller retries
  return Word(std::move(out));
}

std::optional<std::pair<Word, Word>> ContextGen::closing_context(const Word& filler,
                                                                 size_t max_len,
                                                                 bool classical_only,
                                                                 int tries) {
  for (int t = 0; t < tries; ++t) {
    // per-page counts of ins the filler needs before it and opens it leaves
    int need[3] = {0, 0, 0}, open[3] = {0, 0, 0};
    auto scan = [&](const Word& w) {
      for (const Letter& l : w.letters()) {
        const LocalPicture& lp = local_picture(l);
        // closers first at one point
        for (const ArcEnd& e : lp.ends)
          if (e.dir == EndDir::L) {
            if (open[e.page] == 0) ++need[e.page];
            else --open[e.page];
          }
        for (const ArcEnd& e : lp.ends)
          if (e.dir == EndDir::R) ++open[e.page];
      }
    };
    scan(filler);
    // a few extra arcs spanning the filler for variety
    for (int e = static_cast<int>(next() % 3); e > 0; --e) ++need[next() % 3];

    // openers: a_p covers pages p and p+1
    std::vector<Letter> u;
    int provided[3] = {0, 0, 0};
    int guard = 0;
    while ((provided[0] < need[0] || provided[1] < need[1] || provided[2] < need[2]) &&
           guard++ < 40) {
      int best = 0;
      for (int p = 1; p < 3; ++p) {
        if (need[p] - provided[p] > need[best] - provided[best]) best = p;
      }
      int choice = next() % 2 == 0 ? best : static_cast<int>(next() % 3);
      if (provided[choice] >= need[choice] && provided[(choice + 2) % 3] < need[(choice + 2) % 3])
        choice = (choice + 2) % 3;  // a_{p-1} also covers page p
      u.push_back(Letter{Kind::A, static_cast<uint8_t>(choice)});
      ++provided[choice];
      ++provided[(choice + 1) % 3];
    }
    for (size_t i = u.size(); i > 1; --i) std::swap(u[i - 1], u[next() % i]);

    // simulate u + filler to get leftover opens, then close them with c/d
    int n[3] = {0, 0, 0};
    bool under = false;
    auto run = [&](const Word& w) {
      for (const Letter& l : w.letters()) {
        const LocalPicture& lp = local_picture(l);
        for (const ArcEnd& e : lp.ends)
          if (e.dir == EndDir::L) {
            if (n[e.page] == 0) under = true;
            else --n[e.page];
          }
        for (const ArcEnd& e : lp.ends)
          if (e.dir == EndDir::R) ++n[e.page];
      }
    };
    Word uw{std::vector<Letter>(u)};
    run(uw);
    run(filler);
    if (under) continue;
    std::vector<Letter> v;
    guard = 0;
    while (n[0] + n[1] + n[2] > 0 && guard++ < 80) {
      std::vector<int> opts;
      for (int p = 0; p < 3; ++p)
        if (n[p] > 0 && n[(p + 1) % 3] > 0) opts.push_back(p);
      if (!opts.empty()) {
        int p = opts[next() % opts.size()];
        v.push_back(Letter{Kind::C, static_cast<uint8_t>(p)});
        --n[p];
        --n[(p + 1) % 3];
      } else {
        int best = 0;
        for (int p = 1; p < 3; ++p)
          if (n[p] > n[best]) best = p;
        v.push_back(Letter{Kind::D, static_cast<uint8_t>(best)});
        --n[best];
        ++n[(best + 1) % 3];
      }
    }
    if (n[0] + n[1] + n[2] != 0) continue;
    // optional closed junk on the outside
    Word uu = uw, vv = Word{std::vector<Letter>(v)};
    if (next() % 3 == 0) {
      Word junk = closed_word(6, classical_only);
      uu = junk.append(uu);
    }
    if (uu.size() + filler.size() + vv.size() > max_len + filler.size() + 10) continue;
    Word whole = uu.append(filler).append(vv);
    if (decode(whole).ok()) return std::make_pair(uu, vv);
  }
  return std::nullopt;
}

SafetyReport context_safety(int contexts_per_instance, uint64_t seed, bool check_admissibility) {
  SafetyReport rep;
  ContextGen gen(seed);
  auto all = effective_relations(RuleTier::Full);
  for (const RelationInstance& r : all) {
    ++rep.instances_checked;
    bool classical = r.family <= Family::R3 && x_count(r.lhs) == 0 && x_count(r.rhs) == 0;
    const Word& longer = r.lhs.size() >= r.rhs.size() ? r.lhs : r.rhs;
    int got = 0, attempts = 0;
    while (got < contexts_per_instance && attempts < contexts_per_instance * 60) {
      ++attempts;
      auto ctx = gen.closing_context(longer, 12, classical);
      if (!ctx) continue;
      auto [u, v] = *ctx;
      Word wl = u.append(r.lhs).append(v);
      Word wr = u.append(r.rhs).append(v);
      DecodeResult dl = decode(wl), drr = decode(wr);
      if (!dl.ok() || !drr.ok()) {
        rep.issues.push_back({side_str(r), "decode success differs in context u=\"" +
                                               format_word(u) + "\" v=\"" + format_word(v) +
                                               "\""});
        break;
      }
      ++got;
      ++rep.contexts_checked;
      int cl = static_cast<int>(dl.diagram->components.size());
      int cr = static_cast<int>(drr.diagram->components.size());
      if (r.family != Family::R7 && cl != cr) {
        rep.issues.push_back({side_str(r), "component count differs in context"});
        break;
      }
      if (r.family != Family::R6 && x_count(wl) != x_count(wr)) {
        rep.issues.push_back({side_str(r), "singular count differs in context"});
        break;
      }
      if (euler_characteristic(wl) != euler_characteristic(wr)) {
        rep.issues.push_back({side_str(r), "euler characteristic differs in context"});
        break;
      }
      if (r.family <= Family::R5) {
        for (ResolutionSign s : {ResolutionSign::Positive, ResolutionSign::Negative}) {
          if (component_count(resolve(wl, s)) != component_count(resolve(wr, s))) {
            rep.issues.push_back({side_str(r), "resolution components differ in context"});
          }
        }
      }
      if (classical) {
        LinkDiagram D1 = to_link_diagram(wl), D2 = to_link_diagram(wr);
        if (linking_canonical(linking_matrix(D1)) != linking_canonical(linking_matrix(D2))) {
          rep.issues.push_back({side_str(r), "linking matrix differs in context"});
          break;
        }
        if (D1.crossings.size() <= 14 && D2.crossings.size() <= 14) {
          if (normalized_bracket_set(D1) != normalized_bracket_set(D2)) {
            rep.issues.push_back({side_str(r), "normalized bracket differs in context"});
            break;
          }
        }
      }
      if (check_admissibility) {
        SearchBudget tiny = SearchBudget::defaults_for(wl.size());
        tiny.max_states = 60'000;
        auto al = admissible(wl, tiny);
        auto ar = admissible(wr, tiny);
        if (al.overall != Admissibility::Unknown && ar.overall != Admissibility::Unknown &&
            al.overall != ar.overall) {
          rep.issues.push_back({side_str(r), "admissibility verdict differs in context"});
          break;
        }
      }
    }
    if (got < contexts_per_instance) {
      rep.issues.push_back(
          {side_str(r), "only " + std::to_string(got) + " contexts realized"});
    }
  }
  return rep;
}

}  // namespace threepage
