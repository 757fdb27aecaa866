#include "threepage/decode.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace threepage {

namespace {

struct Event {
  uint32_t pos;
  uint8_t end;
  EndDir dir;
};

// events per page in axis order; at one position closers come before openers
std::array<std::vector<Event>, 3> page_events(const Word& w) {
  std::array<std::vector<Event>, 3> ev;
  for (uint32_t pos = 0; pos < w.size(); ++pos) {
    const LocalPicture& lp = local_picture(w[pos]);
    for (uint8_t e = 0; e < lp.ends.size(); ++e) {
      ev[lp.ends[e].page].push_back(Event{pos, e, lp.ends[e].dir});
    }
  }
  for (auto& v : ev) {
    std::stable_sort(v.begin(), v.end(), [](const Event& a, const Event& b) {
      if (a.pos != b.pos) return a.pos < b.pos;
      return a.dir == EndDir::L && b.dir == EndDir::R;
    });
  }
  return ev;
}

// strand-through pairing at every axis point
std::map<EndRef, EndRef> point_mates(const Word& w) {
  std::map<EndRef, EndRef> pm;
  for (uint32_t pos = 0; pos < w.size(); ++pos) {
    const LocalPicture& lp = local_picture(w[pos]);
    for (auto [e1, e2] : lp.branches) {
      pm[EndRef{pos, static_cast<uint8_t>(e1)}] = EndRef{pos, static_cast<uint8_t>(e2)};
      pm[EndRef{pos, static_cast<uint8_t>(e2)}] = EndRef{pos, static_cast<uint8_t>(e1)};
    }
  }
  return pm;
}

}  // namespace

std::array<int, 3> page_balance(const Word& w) {
  std::array<int, 3> n{0, 0, 0};
  for (const Letter& l : w.letters()) {
    for (const ArcEnd& e : local_picture(l).ends) {
      n[e.page] += e.dir == EndDir::R ? 1 : -1;
    }
  }
  return n;
}

std::string DecodeResult::error_message() const {
  switch (status) {
    case DecodeStatus::Ok: return "ok";
    case DecodeStatus::Unbalanced:
      return "Unbalanced(page " + std::to_string(page) + ", position " +
             std::to_string(position) + ")";
    case DecodeStatus::OpenEndpoints:
      return "OpenEndpoints(page " + std::to_string(page) + ", position " +
             std::to_string(position) + ")";
  }
  return "?";
}

DecodeResult decode(const Word& w) {
  DecodeResult res;
  auto ev = page_events(w);

  // count check first: mismatched counts report Unbalanced
  for (int pg = 0; pg < 3; ++pg) {
    int nl = 0, nr = 0;
    uint32_t first_pos = 0;
    for (const Event& e : ev[pg]) {
      if (e.dir == EndDir::L) ++nl;
      else ++nr;
    }
    if (nl != nr) {
      // report the position of the first event in the surplus direction
      EndDir surplus = nr > nl ? EndDir::R : EndDir::L;
      for (const Event& e : ev[pg]) {
        if (e.dir == surplus) {
          first_pos = e.pos;
          break;
        }
      }
      res.status = DecodeStatus::Unbalanced;
      res.page = static_cast<uint8_t>(pg);
      res.position = first_pos;
      return res;
    }
  }

  MarkedGraphDiagram dg;
  dg.axis_points = w;
  std::map<EndRef, EndRef> arcmate;
  for (int pg = 0; pg < 3; ++pg) {
    std::vector<EndRef> stack;
    for (const Event& e : ev[pg]) {
      if (e.dir == EndDir::R) {
        stack.push_back(EndRef{e.pos, e.end});
      } else {
        if (stack.empty()) {
          res.status = DecodeStatus::OpenEndpoints;
          res.page = static_cast<uint8_t>(pg);
          res.position = e.pos;
          return res;
        }
        EndRef open = stack.back();
        stack.pop_back();
        EndRef close{e.pos, e.end};
        arcmate[open] = close;
        arcmate[close] = open;
        dg.page_arcs[pg].push_back(PageArc{open, close});
      }
    }
    std::sort(dg.page_arcs[pg].begin(), dg.page_arcs[pg].end(),
              [](const PageArc& a, const PageArc& b) { return a.open < b.open; });
  }

  auto pm = point_mates(w);
  for (uint32_t pos = 0; pos < w.size(); ++pos) {
    const LocalPicture& lp = local_picture(w[pos]);
    if (lp.singular) {
      SingularPoint sp;
      sp.pos = pos;
      sp.branches[0] = {static_cast<uint8_t>(lp.branches[0].first),
                        static_cast<uint8_t>(lp.branches[0].second)};
      sp.branches[1] = {static_cast<uint8_t>(lp.branches[1].first),
                        static_cast<uint8_t>(lp.branches[1].second)};
      dg.singular_points.push_back(sp);
    }
  }

  // close up curves: alternate arc mate / point mate
  std::set<EndRef> seen;
  for (const auto& [node, mate] : arcmate) {
    if (seen.count(node)) continue;
    std::vector<EndRef> cyc;
    EndRef cur = node;
    while (!seen.count(cur)) {
      seen.insert(cur);
      cyc.push_back(cur);
      EndRef nxt = arcmate.at(cur);
      seen.insert(nxt);
      cyc.push_back(nxt);
      cur = pm.at(nxt);
    }
    dg.components.push_back(std::move(cyc));
  }

  res.diagram = std::move(dg);
  return res;
}

int component_count(const Word& w) {
  DecodeResult r = decode(w);
  if (!r.ok()) throw std::runtime_error("component_count: " + r.error_message());
  return static_cast<int>(r.diagram->components.size());
}

TangleInterface tangle_interface(const Word& w) {
  TangleInterface ti;
  auto ev = page_events(w);
  std::map<EndRef, EndRef> arcmate;
  for (int pg = 0; pg < 3; ++pg) {
    std::vector<EndRef> stack;
    std::vector<std::pair<EndRef, bool>> ins;
    for (const Event& e : ev[pg]) {
      if (e.dir == EndDir::R) {
        stack.push_back(EndRef{e.pos, e.end});
      } else if (!stack.empty()) {
        arcmate[stack.back()] = EndRef{e.pos, e.end};
        arcmate[EndRef{e.pos, e.end}] = stack.back();
        stack.pop_back();
      } else {
        ins.emplace_back(EndRef{e.pos, e.end}, true);
      }
    }
    for (const EndRef& r : stack) ins.emplace_back(r, false);
    std::sort(ins.begin(), ins.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ti.external[pg] = std::move(ins);
  }
  auto pm = point_mates(w);
  std::map<EndRef, std::pair<int, int>> slot_of;
  for (int pg = 0; pg < 3; ++pg) {
    for (size_t j = 0; j < ti.external[pg].size(); ++j) {
      slot_of[ti.external[pg][j].first] = {pg, static_cast<int>(j)};
    }
  }
  std::set<EndRef> seen;
  for (const auto& [node, slot] : slot_of) {
    if (seen.count(node)) continue;
    seen.insert(node);
    EndRef cur = node;
    while (true) {
      cur = pm.at(cur);
      if (slot_of.count(cur)) break;
      cur = arcmate.at(cur);
      if (slot_of.count(cur)) break;
    }
    seen.insert(cur);
    ti.pairing.push_back({slot, slot_of.at(cur)});
  }
  // internal closed loops
  std::set<EndRef> visited;
  for (const auto& [node, slot] : slot_of) {
    EndRef cur = node;
    visited.insert(cur);
    while (true) {
      cur = pm.at(cur);
      visited.insert(cur);
      if (slot_of.count(cur)) break;
      cur = arcmate.at(cur);
      visited.insert(cur);
      if (slot_of.count(cur)) break;
    }
  }
  for (const auto& [node, mate] : pm) {
    if (visited.count(node)) continue;
    ++ti.closed_loops;
    EndRef cur = node;
    while (!visited.count(cur)) {
      visited.insert(cur);
      EndRef nxt = arcmate.at(cur);
      visited.insert(nxt);
      cur = pm.at(nxt);
    }
  }
  return ti;
}

}  // namespace threepage
