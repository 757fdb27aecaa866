#include "threepage/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace threepage {

namespace {

// node ids: arc ends then crossing ports
// end(arc a, open?) = 2a + (open ? 0 : 1)
// port(k, role) = 2*narcs + 4k + role, roles: 0 over_p, 1 over_q, 2 under_p, 3 under_q
enum Role { kOverP = 0, kOverQ = 1, kUnderP = 2, kUnderQ = 3 };

struct Graph {
  int n_nodes;
  std::vector<std::pair<int, int>> base_edges;  // segments + axis point joins
  int narcs;
};

int end_id(int arc, bool open) { return 2 * arc + (open ? 0 : 1); }

Graph build_graph(const LinkDiagram& d) {
  Graph g;
  g.narcs = static_cast<int>(d.arcs.size());
  g.n_nodes = 2 * g.narcs + 4 * static_cast<int>(d.crossings.size());
  auto port = [&](int k, int role) { return 2 * g.narcs + 4 * k + role; };
  for (int a = 0; a < g.narcs; ++a) {
    std::vector<int> seq;
    seq.push_back(end_id(a, true));
    for (int k : d.arcs[a].crossings) {
      bool is_over = d.crossings[k].over_arc == a;
      seq.push_back(port(k, is_over ? kOverP : kUnderP));
      seq.push_back(port(k, is_over ? kOverQ : kUnderQ));
    }
    seq.push_back(end_id(a, false));
    for (size_t i = 0; i + 1 < seq.size(); i += 2) {
      g.base_edges.push_back({seq[i], seq[i + 1]});
    }
  }
  for (const auto& [s1, s2] : d.point_joins) {
    g.base_edges.push_back({end_id(s1.first, s1.second), end_id(s2.first, s2.second)});
  }
  return g;
}

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

OrientedDiagram orient(const LinkDiagram& d) {
  Graph g = build_graph(d);
  auto port = [&](int k, int role) { return 2 * g.narcs + 4 * k + role; };
  std::vector<std::vector<int>> adj(g.n_nodes);
  auto add = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (auto [a, b] : g.base_edges) add(a, b);
  for (size_t k = 0; k < d.crossings.size(); ++k) {
    add(port(k, kOverP), port(k, kOverQ));
    add(port(k, kUnderP), port(k, kUnderQ));
  }

  std::vector<int> comp(g.n_nodes, -1);
  std::set<std::pair<int, int>> dirn;
  int ncomp = 0;
  for (int s = 0; s < g.n_nodes; ++s) {
    if (comp[s] != -1 || adj[s].empty()) continue;
    int cid = ncomp++;
    int prev = -1, cur = s;
    while (true) {
      comp[cur] = cid;
      int nxt = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
      if (prev == -1) nxt = std::min(adj[cur][0], adj[cur][1]);
      dirn.insert({cur, nxt});
      prev = cur;
      cur = nxt;
      if (cur == s) break;
    }
  }

  OrientedDiagram od;
  od.n_components = ncomp;
  for (size_t k = 0; k < d.crossings.size(); ++k) {
    bool over_fwd = dirn.count({port(k, kOverP), port(k, kOverQ)}) > 0;
    bool under_fwd = dirn.count({port(k, kUnderP), port(k, kUnderQ)}) > 0;
    int base = d.crossings[k].kind == CrossCase::A ? -1 : 1;
    od.crossing_sign.push_back(over_fwd == under_fwd ? base : -base);
    od.over_component.push_back(comp[port(k, kOverP)]);
    od.under_component.push_back(comp[port(k, kUnderP)]);
  }
  return od;
}

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
  OrientedDiagram od = orient(d);
  std::vector<std::vector<int>> m(od.n_components, std::vector<int>(od.n_components, 0));
  for (size_t k = 0; k < d.crossings.size(); ++k) {
    int c1 = od.over_component[k], c0 = od.under_component[k];
    if (c1 != c0) {
      m[c1][c0] += od.crossing_sign[k];
      m[c0][c1] += od.crossing_sign[k];
    }
  }
  for (auto& row : m)
    for (int& v : row) v /= 2;
  return m;
}

std::vector<std::vector<int>> linking_canonical(const std::vector<std::vector<int>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> best;
  do {
    for (int sign : {1, -1}) {
      std::vector<std::vector<int>> cand(n, std::vector<int>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cand[i][j] = sign * m[perm[i]][perm[j]];
      if (best.empty() || cand < best) best = cand;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Laurent kauffman_bracket(const LinkDiagram& d, int cap) {
  int n = static_cast<int>(d.crossings.size());
  if (n > cap) {
    throw BracketCapExceeded("diagram has " + std::to_string(n) + " crossings, cap " +
                             std::to_string(cap));
  }
  Graph g = build_graph(d);
  auto port = [&](int k, int role) { return 2 * g.narcs + 4 * k + role; };

  Laurent total;
  for (uint32_t state = 0; state < (1u << n); ++state) {
    UF uf(g.n_nodes);
    for (auto [a, b] : g.base_edges) uf.join(a, b);
    int na = 0;
    for (int k = 0; k < n; ++k) {
      bool use_a = (state >> k) & 1;
      if (use_a) ++na;
      if (d.crossings[k].kind == CrossCase::A) {
        if (use_a) {
          uf.join(port(k, kOverP), port(k, kUnderP));
          uf.join(port(k, kOverQ), port(k, kUnderQ));
        } else {
          uf.join(port(k, kOverP), port(k, kUnderQ));
          uf.join(port(k, kOverQ), port(k, kUnderP));
        }
      } else {
        if (use_a) {
          uf.join(port(k, kOverQ), port(k, kUnderP));
          uf.join(port(k, kOverP), port(k, kUnderQ));
        } else {
          uf.join(port(k, kOverQ), port(k, kUnderQ));
          uf.join(port(k, kOverP), port(k, kUnderP));
        }
      }
    }
    std::set<int> roots;
    for (int v = 0; v < g.n_nodes; ++v) roots.insert(uf.find(v));
    int loops = static_cast<int>(roots.size());
    total += Laurent::monomial(na - (n - na), 1) * Laurent::delta_pow(loops - 1);
  }
  return total;
}

Laurent normalized_bracket(const LinkDiagram& d, int cap) {
  Laurent br = kauffman_bracket(d, cap);
  OrientedDiagram od = orient(d);
  int writhe = 0;
  for (int s : od.crossing_sign) writhe += s;
  return br.times_neg_a3(-writhe);
}

std::set<Laurent> normalized_bracket_set(const LinkDiagram& d, int cap) {
  Laurent br = kauffman_bracket(d, cap);
  OrientedDiagram od = orient(d);
  std::set<Laurent> out;
  int k = od.n_components;
  for (uint32_t flips = 0; flips < (1u << (k > 0 ? k - 1 : 0)); ++flips) {
    auto flipped = [&](int comp) { return comp > 0 && ((flips >> (comp - 1)) & 1); };
    int writhe = 0;
    for (size_t c = 0; c < od.crossing_sign.size(); ++c) {
      bool same = flipped(od.over_component[c]) == flipped(od.under_component[c]);
      writhe += od.crossing_sign[c] * (same ? 1 : -1);
    }
    out.insert(br.times_neg_a3(-writhe));
  }
  return out;
}

}  // namespace threepage
