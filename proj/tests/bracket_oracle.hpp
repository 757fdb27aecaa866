#pragma once

#include <map>
#include <set>
#include <vector>

#include "threepage/invariants.hpp"
#include "threepage/link_diagram.hpp"

// Independent naive bracket oracle: recursive skein expansion with adjacency
// walks, sharing nothing with the library's bitmask/union-find state sum.
namespace threepage::oracle {


// independent naive oracle: recursive skein expansion instead of the packed
// state-sum; shares only the diagram structure
Laurent bracket_oracle(const LinkDiagram& d, std::vector<int>& choice, size_t k) {
  if (k < d.crossings.size()) {
    Laurent sum;
    for (int c : {0, 1}) {
      choice[k] = c;
      sum += bracket_oracle(d, choice, k + 1) * Laurent::monomial(c ? 1 : -1, 1);
    }
    return sum;
  }
  // count loops with a brute adjacency walk over (arc, position) nodes
  // nodes: (arc end open/close) and 4 ports per crossing, as in the library,
  // but resolved with the chosen smoothings
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;
  auto join = [&](std::pair<int, int> a, std::pair<int, int> b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  auto end_node = [](int arc, bool open) { return std::make_pair(arc, open ? 0 : 1); };
  auto port_node = [](int k2, int role) { return std::make_pair(1000 + k2, role); };
  for (size_t a = 0; a < d.arcs.size(); ++a) {
    std::vector<std::pair<int, int>> seq;
    seq.push_back(end_node(static_cast<int>(a), true));
    for (int k2 : d.arcs[a].crossings) {
      bool over = d.crossings[k2].over_arc == static_cast<int>(a);
      seq.push_back(port_node(k2, over ? 0 : 2));
      seq.push_back(port_node(k2, over ? 1 : 3));
    }
    seq.push_back(end_node(static_cast<int>(a), false));
    for (size_t i = 0; i + 1 < seq.size(); i += 2) join(seq[i], seq[i + 1]);
  }
  for (const auto& [s1, s2] : d.point_joins) {
    join(end_node(s1.first, s1.second), end_node(s2.first, s2.second));
  }
  for (size_t k2 = 0; k2 < d.crossings.size(); ++k2) {
    bool use_a = choice[k2] == 1;
    bool case_a = d.crossings[k2].kind == CrossCase::A;
    // A-pairs: caseA (op,up)(oq,uq); caseB (oq,up)(op,uq); B complements
    int o1, u1, o2, u2;
    if (case_a == use_a) {
      o1 = 0; u1 = 2; o2 = 1; u2 = 3;
    } else {
      o1 = 0; u1 = 3; o2 = 1; u2 = 2;
    }
    join(port_node(static_cast<int>(k2), o1), port_node(static_cast<int>(k2), u1));
    join(port_node(static_cast<int>(k2), o2), port_node(static_cast<int>(k2), u2));
  }
  std::set<std::pair<int, int>> seen;
  int loops = 0;
  for (auto& [n, _] : adj) {
    if (seen.count(n)) continue;
    ++loops;
    std::vector<std::pair<int, int>> stack{n};
    while (!stack.empty()) {
      auto m = stack.back();
      stack.pop_back();
      if (seen.count(m)) continue;
      seen.insert(m);
      for (auto& nb : adj[m]) stack.push_back(nb);
    }
  }
  return Laurent::delta_pow(loops - 1);
}

Laurent bracket_oracle(const LinkDiagram& d) {
  std::vector<int> choice(d.crossings.size(), 0);
  return bracket_oracle(d, choice, 0);
}

}  // namespace threepage::oracle
