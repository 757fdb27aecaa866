#include "threepage/encoder.hpp"
#include <cstdlib>
#include <cstdio>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "threepage/invariants.hpp"
#include "threepage/link_diagram.hpp"
#include "threepage/relations.hpp"

namespace threepage {

namespace {

struct HalfEdgeMaps {
  // half-edge id = 2*edge_index + dir; tail = ends[dir], head = ends[1-dir]
  std::map<std::pair<int, int>, int> out_half;  // (vertex id, slot) -> half-edge leaving it
  std::vector<int> face_of;                     // per half-edge
  std::map<std::pair<int, int>, int> sector_face;  // (vertex id, sector) -> face
  int n_faces = 0;
  std::map<int, int> vert_index;  // vertex id -> index in d.vertices
  std::map<int, int> edge_index;  // edge id -> index in d.edges
};

int head_vertex(const PlanarMarkedDiagram& d, const HalfEdgeMaps& hm, int h) {
  const PlanarEdge& e = d.edges[h / 2];
  return e.ends[1 - (h % 2)].first;
}

int head_slot(const PlanarMarkedDiagram& d, int h) {
  const PlanarEdge& e = d.edges[h / 2];
  return e.ends[1 - (h % 2)].second;
}

HalfEdgeMaps build_faces(const PlanarMarkedDiagram& d) {
  HalfEdgeMaps hm;
  for (size_t i = 0; i < d.vertices.size(); ++i) hm.vert_index[d.vertices[i].id] = i;
  for (size_t i = 0; i < d.edges.size(); ++i) hm.edge_index[d.edges[i].id] = i;
  for (size_t i = 0; i < d.edges.size(); ++i) {
    for (int dir = 0; dir < 2; ++dir) {
      auto [v, s] = d.edges[i].ends[dir];
      if (hm.out_half.count({v, s})) throw EncoderError("duplicate edge end at vertex slot");
      hm.out_half[{v, s}] = static_cast<int>(2 * i + dir);
    }
  }
  for (const PlanarVertex& v : d.vertices) {
    for (int s = 0; s < 4; ++s) {
      auto it = hm.out_half.find({v.id, s});
      if (it == hm.out_half.end()) throw EncoderError("vertex slot without edge");
      const PlanarEdge& e = d.edges[it->second / 2];
      if (e.id != v.rotation[s]) {
        throw EncoderError("rotation/ends mismatch at vertex " + std::to_string(v.id));
      }
    }
  }
  // face traversal: after arriving at head slot s, leave via slot s-1; the
  // corner crossed between them is sector s-1
  hm.face_of.assign(2 * d.edges.size(), -1);
  for (size_t h0 = 0; h0 < hm.face_of.size(); ++h0) {
    if (hm.face_of[h0] != -1) continue;
    int f = hm.n_faces++;
    int h = static_cast<int>(h0);
    while (hm.face_of[h] == -1) {
      hm.face_of[h] = f;
      int v = head_vertex(d, hm, h);
      int s = head_slot(d, h);
      int s2 = (s + 3) % 4;
      hm.sector_face[{v, s2}] = f;
      h = hm.out_half.at({v, s2});
    }
  }
  return hm;
}

int graph_components(const PlanarMarkedDiagram& d) {
  std::map<int, int> comp;
  for (const PlanarVertex& v : d.vertices) comp[v.id] = v.id;
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const PlanarEdge& e : d.edges) {
    comp[find(e.ends[0].first)] = find(e.ends[1].first);
  }
  std::set<int> roots;
  for (auto& [v, _] : comp) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

// ------------------------------------------------------------------ alpha path

struct PassEvent {
  int vertex;      // vertex id
  int entry;       // entry sector
};
struct CrossEvent {
  int half;        // half-edge crossed, leaving face_of[half]
};
struct ItinStep {
  bool is_pass;
  PassEvent pass{};
  CrossEvent cross{};
};

// legal (entry, exit=entry+2) sector pairs for passing a vertex
std::vector<int> pass_entries(const PlanarVertex& v) {
  if (v.type == VertexType::Singular) {
    int b = v.over_or_bridge % 4;
    return {b, (b + 2) % 4};
  }
  int o = v.over_or_bridge % 4;
  // along the over strand, hugging either side
  return {o, (o + 1) % 4, (o + 2) % 4, (o + 3) % 4};
}

// The binding axis is the full line, a circle through infinity on the sphere,
// so the itinerary must be a closed walk: it returns to its start face with
// every side change across the axis recorded as an event.
std::vector<ItinStep> find_alpha(const PlanarMarkedDiagram& d, const HalfEdgeMaps& hm) {
  int nv = static_cast<int>(d.vertices.size());
  if (nv == 0) return {};
  if (nv > 20) throw EncoderError("too many vertices for the alpha search");
  int nf = hm.n_faces;
  uint32_t full = (1u << nv) - 1;
  auto sid = [&](int f, uint32_t mask) { return static_cast<uint64_t>(f) * (full + 1) + mask; };

  std::optional<std::vector<ItinStep>> best;
  int best_cost = -1;
  for (int f0 = 0; f0 < nf; ++f0) {
    std::map<uint64_t, int> dist;
    std::map<uint64_t, std::pair<uint64_t, ItinStep>> parent;
    using QE = std::pair<int, uint64_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
    dist[sid(f0, 0)] = 0;
    pq.push({0, sid(f0, 0)});
    while (!pq.empty()) {
      auto [c, s] = pq.top();
      pq.pop();
      if (dist.count(s) && dist[s] < c) continue;
      uint32_t mask = static_cast<uint32_t>(s % (full + 1));
      int f = static_cast<int>(s / (full + 1));
      if (mask == full && f == f0) break;
      for (int vi = 0; vi < nv; ++vi) {
        if (mask & (1u << vi)) continue;
        const PlanarVertex& v = d.vertices[vi];
        for (int entry : pass_entries(v)) {
          if (hm.sector_face.at({v.id, entry}) != f) continue;
          int exit_sector = (entry + 2) % 4;
          int f2 = hm.sector_face.at({v.id, exit_sector});
          uint64_t s2 = sid(f2, mask | (1u << vi));
          if (!dist.count(s2) || dist[s2] > c) {
            dist[s2] = c;
            ItinStep st;
            st.is_pass = true;
            st.pass = PassEvent{v.id, entry};
            parent[s2] = {s, st};
            pq.push({c, s2});
          }
        }
      }
      for (size_t h = 0; h < hm.face_of.size(); ++h) {
        if (hm.face_of[h] != f) continue;
        int h_twin = static_cast<int>(h ^ 1);
        int f2 = hm.face_of[h_twin];
        uint64_t s2 = sid(f2, mask);
        if (!dist.count(s2) || dist[s2] > c + 1) {
          dist[s2] = c + 1;
          ItinStep st;
          st.is_pass = false;
          st.cross = CrossEvent{static_cast<int>(h)};
          parent[s2] = {s, st};
          pq.push({c + 1, s2});
        }
      }
    }
    uint64_t goal = sid(f0, full);
    if (!dist.count(goal)) continue;
    if (best && dist[goal] >= best_cost) continue;
    std::vector<ItinStep> steps;
    uint64_t cur = goal;
    while (parent.count(cur)) {
      steps.push_back(parent[cur].second);
      cur = parent[cur].first;
    }
    std::reverse(steps.begin(), steps.end());
    best = std::move(steps);
    best_cost = dist[goal];
  }
  if (!best) throw EncoderError("no valid alpha path found");
  return *best;
}

// ------------------------------------------------------------ linearization

// sides relative to the oriented axis: left = page 0, right = page 2
constexpr uint8_t kUpper = 0, kLower = 2, kOver = 1;

struct AxisEnd {
  uint8_t page;
  int piece = -1;  // filled later
};

struct AttachPoint {
  // axis position (index into the event point list) and side page for an edge end
  int point;
  uint8_t page;
};

struct PendingLetter {
  std::vector<std::pair<uint8_t, EndDir>> ends;  // filled as pieces resolve
};

}  // namespace

void validate_diagram(const PlanarMarkedDiagram& d) {
  HalfEdgeMaps hm = build_faces(d);
  int V = static_cast<int>(d.vertices.size());
  int E = static_cast<int>(d.edges.size());
  if (V == 0) {
    if (E != 0) throw EncoderError("edges without vertices");
    return;
  }
  int C = graph_components(d);
  if (V - E + hm.n_faces != 1 + C) {
    throw EncoderError("Euler check failed: V-E+F = " + std::to_string(V - E + hm.n_faces) +
                       ", expected " + std::to_string(1 + C));
  }
  for (const PlanarVertex& v : d.vertices) {
    if (v.over_or_bridge < 0 || v.over_or_bridge > 3) {
      throw EncoderError("over/bridge slot out of range at vertex " + std::to_string(v.id));
    }
  }
}

Word encode_diagram(const PlanarMarkedDiagram& d) {
  validate_diagram(d);
  HalfEdgeMaps hm = build_faces(d);
  std::vector<ItinStep> itin = find_alpha(d, hm);

  // axis points: expand passes at crossings into [q1, q, q2]
  struct Point {
    std::vector<std::pair<uint8_t, EndDir>> ends;  // built from pieces
    bool p1_open = false;   // q1 carries a P1 R end
    bool p1_close = false;  // q2 carries a P1 L end
    bool singular = false;
  };
  std::vector<Point> pts;
  // attachment of each (edge index, end dir) -> (point, page)
  std::map<std::pair<int, int>, AttachPoint> attach;
  // transversal crossing events per edge: (point, itinerary order index)
  std::map<int, std::vector<std::pair<int, int>>> edge_events;  // edge idx -> [(point, step#)]
  std::map<int, int> pass_step;  // vertex id -> step# of its pass

  // per edge: (point, step, half-edge dir); the dir anchors piece sides:
  // the half of the edge toward the half-edge's head lies on the axis's
  // upper side
  std::map<int, std::vector<std::tuple<int, int, int>>> edge_anchor;
  for (size_t si = 0; si < itin.size(); ++si) {
    const ItinStep& st = itin[si];
    if (!st.is_pass) {
      int h = st.cross.half;
      int ei = h / 2;
      int p = static_cast<int>(pts.size());
      pts.push_back(Point{});
      edge_events[ei].push_back({p, static_cast<int>(si)});
      edge_anchor[ei].push_back({p, static_cast<int>(si), h % 2});
      continue;
    }
    const PlanarVertex& v = d.vertices[hm.vert_index.at(st.pass.vertex)];
    int s_in = st.pass.entry;
    auto side_of_slot = [&](int slot) -> uint8_t {
      // slots {s_in, s_in+3} are on the left of travel, {s_in+1, s_in+2} right
      int r = (slot - s_in + 4) % 4;
      return (r == 0 || r == 3) ? kUpper : kLower;
    };
    pass_step[v.id] = static_cast<int>(si);
    if (v.type == VertexType::Singular) {
      int p = static_cast<int>(pts.size());
      Point pt;
      pt.singular = true;
      pts.push_back(pt);
      for (int slot = 0; slot < 4; ++slot) {
        int ei = hm.edge_index.at(v.rotation[slot]);
        int dir = d.edges[ei].ends[0] == std::make_pair(v.id, slot) ? 0 : 1;
        attach[{ei, dir}] = AttachPoint{p, side_of_slot(slot)};
      }
    } else {
      int o = v.over_or_bridge;
      int over_entry_slot, over_exit_slot;
      if (o % 4 == s_in || (o + 2) % 4 == s_in) {
        over_entry_slot = s_in;  // over edge hugged on the left
        over_exit_slot = (s_in + 2) % 4;
      } else {
        over_entry_slot = (s_in + 1) % 4;  // hugged on the right
        over_exit_slot = (s_in + 3) % 4;
      }
      int q1 = static_cast<int>(pts.size());
      pts.push_back(Point{});
      pts[q1].p1_open = true;
      int q = static_cast<int>(pts.size());
      pts.push_back(Point{});
      int q2 = static_cast<int>(pts.size());
      pts.push_back(Point{});
      pts[q2].p1_close = true;
      for (int slot = 0; slot < 4; ++slot) {
        int ei = hm.edge_index.at(v.rotation[slot]);
        int dir = d.edges[ei].ends[0] == std::make_pair(v.id, slot) ? 0 : 1;
        int point = slot == over_entry_slot ? q1 : slot == over_exit_slot ? q2 : q;
        attach[{ei, dir}] = AttachPoint{point, side_of_slot(slot)};
      }
    }
  }

  if (std::getenv("THREEPAGE_ENC_DEBUG")) {
    for (size_t si = 0; si < itin.size(); ++si) {
      const ItinStep& st = itin[si];
      if (st.is_pass) {
        fprintf(stderr, "step %zu: pass v%d entry sector %d\n", si, st.pass.vertex,
                st.pass.entry);
      } else {
        int h = st.cross.half;
        fprintf(stderr, "step %zu: cross edge %d (half dir %d, tail v%d slot %d)\n", si,
                d.edges[h / 2].id, h % 2, d.edges[h / 2].ends[h % 2].first,
                d.edges[h / 2].ends[h % 2].second);
      }
    }
    for (auto& [key, ap] : attach) {
      fprintf(stderr, "attach edge %d end%d -> point %d page %d\n", d.edges[key.first].id,
              key.second, ap.point, ap.page);
    }
  }

  // pieces: walk each edge from end0 to end1 through its transversal events.
  // Each event anchors the side of the adjacent pieces: the half toward the
  // crossed half-edge's head is on the upper side of the axis.  The order of
  // several events along one edge is chosen to satisfy all anchors, lowest
  // itinerary step first among the valid choices.
  struct PieceEnd {
    int point;
    uint8_t page;
  };
  for (size_t ei = 0; ei < d.edges.size(); ++ei) {
    AttachPoint a0 = attach.at({static_cast<int>(ei), 0});
    AttachPoint a1 = attach.at({static_cast<int>(ei), 1});
    auto anchors = edge_anchor.count(static_cast<int>(ei))
                       ? edge_anchor[static_cast<int>(ei)]
                       : std::vector<std::tuple<int, int, int>>{};
    std::sort(anchors.begin(), anchors.end(),
              [](const auto& x, const auto& y) { return std::get<1>(x) < std::get<1>(y); });
    // dir d: head = ends[1-d]; walking end0 -> end1, the piece before the
    // event sits toward end0, after it toward end1
    auto before_side = [](int dir) { return dir == 0 ? kLower : kUpper; };
    auto after_side = [](int dir) { return dir == 0 ? kUpper : kLower; };
    std::vector<PieceEnd> chain;
    chain.push_back({a0.point, a0.page});
    uint8_t side = a0.page;
    std::vector<bool> used(anchors.size(), false);
    for (size_t k = 0; k < anchors.size(); ++k) {
      bool placed = false;
      for (size_t j = 0; j < anchors.size(); ++j) {
        if (used[j] || before_side(std::get<2>(anchors[j])) != side) continue;
        used[j] = true;
        chain.push_back({std::get<0>(anchors[j]), side});
        side = after_side(std::get<2>(anchors[j]));
        chain.push_back({std::get<0>(anchors[j]), side});
        placed = true;
        break;
      }
      if (!placed) {
        throw EncoderError("no event ordering satisfies the side anchors on edge " +
                           std::to_string(d.edges[ei].id));
      }
    }
    chain.push_back({a1.point, a1.page});
    if (a1.page != side) {
      throw EncoderError("side propagation mismatch on edge " + std::to_string(d.edges[ei].id));
    }
    for (size_t i = 0; i + 1 < chain.size(); i += 2) {
      PieceEnd x = chain[i], y = chain[i + 1];
      if (x.page != y.page) throw EncoderError("piece with mismatched pages");
      if (x.point == y.point) throw EncoderError("degenerate piece at one axis point");
      if (x.point > y.point) std::swap(x, y);
      pts[x.point].ends.push_back({x.page, EndDir::R});
      pts[y.point].ends.push_back({y.page, EndDir::L});
    }
  }

  // letters
  std::vector<Letter> letters;
  auto letter_for = [](std::vector<std::pair<uint8_t, EndDir>> ends) -> Letter {
    if (ends.size() != 2) throw EncoderError("axis point without exactly 2 ends");
    std::sort(ends.begin(), ends.end());
    // pages must be adjacent: {i, i+1}; find i
    for (int i = 0; i < 3; ++i) {
      uint8_t p = static_cast<uint8_t>(i), q = static_cast<uint8_t>((i + 1) % 3);
      std::vector<std::pair<uint8_t, EndDir>> want[4] = {
          {{p, EndDir::R}, {q, EndDir::R}},  // a
          {{p, EndDir::R}, {q, EndDir::L}},  // b
          {{p, EndDir::L}, {q, EndDir::L}},  // c
          {{p, EndDir::L}, {q, EndDir::R}},  // d
      };
      Kind kinds[4] = {Kind::A, Kind::B, Kind::C, Kind::D};
      for (int k = 0; k < 4; ++k) {
        auto w = want[k];
        std::sort(w.begin(), w.end());
        if (w == ends) return Letter{kinds[k], static_cast<uint8_t>(i)};
      }
    }
    throw EncoderError("no letter matches the local picture");
  };

  for (size_t p = 0; p < pts.size(); ++p) {
    Point& pt = pts[p];
    if (pt.p1_open) pt.ends.push_back({kOver, EndDir::R});
    if (pt.p1_close) pt.ends.push_back({kOver, EndDir::L});
    if (!pt.singular) {
      letters.push_back(letter_for(pt.ends));
      continue;
    }
    // singular point: pages {0, 2}; needs one L and one R per page, else
    // an overpass detour is inserted (the Reidemeister-II fix)
    std::vector<Letter> before, after;
    for (uint8_t page : {kUpper, kLower}) {
      int nl = 0, nr = 0;
      for (auto& [pg, dir] : pt.ends)
        if (pg == page) (dir == EndDir::L ? nl : nr)++;
      if (nl == 1 && nr == 1) continue;
      if (nl + nr != 2) throw EncoderError("singular point with wrong end count");
      // reroute one of the two equal-direction ends through page P1
      for (auto& [pg, dir] : pt.ends) {
        if (pg != page) continue;
        if (nr == 2) {
          // both open rightward: send one leftward into a detour
          dir = EndDir::L;
          before.push_back(page == kUpper ? Letter{Kind::A, 0} : Letter{Kind::A, 1});
          after.push_back(page == kUpper ? Letter{Kind::B, 0} : Letter{Kind::D, 1});
        } else {
          dir = EndDir::R;
          before.push_back(page == kUpper ? Letter{Kind::D, 0} : Letter{Kind::B, 1});
          after.push_back(page == kUpper ? Letter{Kind::C, 0} : Letter{Kind::C, 1});
        }
        break;
      }
    }
    // the x letter on pages {2, 0} has index 2
    for (const Letter& l : before) letters.push_back(l);
    letters.push_back(Letter{Kind::X, 2});
    for (const Letter& l : after) letters.push_back(l);
  }

  // free loops: the extended axis pierces each one twice
  for (int i = 0; i < d.free_loops; ++i) {
    letters.push_back(Letter{Kind::A, 2});
    letters.push_back(Letter{Kind::C, 2});
  }
  Word w{std::move(letters)};

  // verification: the word must decode back to the same diagram
  DecodeResult dr = decode(w);
  if (!dr.ok()) {
    throw EncoderError("encoded word does not decode: " + dr.error_message());
  }
  int nsing = 0;
  for (const PlanarVertex& v : d.vertices)
    if (v.type == VertexType::Singular) ++nsing;
  if (static_cast<int>(dr.diagram->singular_points.size()) != nsing) {
    throw EncoderError("singular count not preserved by encoding");
  }
  return w;
}

PlanarMarkedDiagram planar_from_word(const Word& w_in) {
  // normalize singular letters to index 2 (plane pages) via relation (4):
  // x_0 -> b_2 x_1 d_2, then x_1 -> b_0 x_2 d_0
  Word w = w_in;
  auto rels = enumerate_relations(RuleTier::Full);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p < w.size(); ++p) {
      if (w[p].kind == Kind::X && w[p].index != 2) {
        for (const auto& r : rels) {
          if (r.family == Family::R4 && r.tag == "rot" && r.lhs.size() == 1 && r.lhs[0] == w[p]) {
            w = apply(w, r, p, ApplyDir::LtoR);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
  }
  DecodeResult dr = decode(w);
  if (!dr.ok()) throw EncoderError("planar_from_word: " + dr.error_message());
  const MarkedGraphDiagram& dg = *dr.diagram;

  PlanarMarkedDiagram out;
  // vertex per singular point and per P1-over-P0 crossing
  struct Port {
    int vertex;
    int slot;
  };
  std::map<EndRef, Port> x_port;  // arc end at an x letter -> vertex slot
  int next_vid = 0;
  for (const SingularPoint& sp : dg.singular_points) {
    // x_2 ends: 0 = P2 L, 1 = P2 R, 2 = P0 L, 3 = P0 R
    // rotation CCW: NE = P0 R, NW = P0 L, SW = P2 L, SE = P2 R
    PlanarVertex v;
    v.id = next_vid++;
    v.type = VertexType::Singular;
    v.over_or_bridge = 1;  // bridge along the axis: sectors 1 and 3
    out.vertices.push_back(v);
    x_port[EndRef{sp.pos, 3}] = Port{v.id, 0};
    x_port[EndRef{sp.pos, 2}] = Port{v.id, 1};
    x_port[EndRef{sp.pos, 0}] = Port{v.id, 2};
    x_port[EndRef{sp.pos, 1}] = Port{v.id, 3};
  }

  // crossings between P1 arcs and P0 arcs
  struct CxRec {
    int vertex;
    // ports: (arc id, toward open?) -> slot
    std::map<std::pair<int, bool>, int> slot;
    uint32_t over_coord, under_coord;
    int over_arc, under_arc;
  };
  // reuse the classical projection machinery on the arcs directly
  std::vector<std::tuple<uint8_t, EndRef, EndRef>> arcs;  // page, open, close
  for (int pg = 0; pg < 3; ++pg) {
    for (const PageArc& a : dg.page_arcs[pg]) {
      arcs.push_back({static_cast<uint8_t>(pg), a.open, a.close});
    }
  }
  std::vector<CxRec> crossings;
  for (size_t i1 = 0; i1 < arcs.size(); ++i1) {
    if (std::get<0>(arcs[i1]) != 1) continue;
    uint32_t p1 = std::get<1>(arcs[i1]).pos, q1 = std::get<2>(arcs[i1]).pos;
    for (size_t i0 = 0; i0 < arcs.size(); ++i0) {
      if (std::get<0>(arcs[i0]) != 0) continue;
      uint32_t p0 = std::get<1>(arcs[i0]).pos, q0 = std::get<2>(arcs[i0]).pos;
      CxRec rec;
      rec.over_arc = static_cast<int>(i1);
      rec.under_arc = static_cast<int>(i0);
      if (p1 < p0 && p0 < q1 && q1 < q0) {
        // case A: over "\", under "/": NE=under(toward close) NW=over(toward open)
        // SW=under(toward open) SE=over(toward close)
        rec.vertex = next_vid++;
        rec.slot[{static_cast<int>(i0), false}] = 0;
        rec.slot[{static_cast<int>(i1), true}] = 1;
        rec.slot[{static_cast<int>(i0), true}] = 2;
        rec.slot[{static_cast<int>(i1), false}] = 3;
        rec.over_coord = p0;
        rec.under_coord = q1;
        PlanarVertex v;
        v.id = rec.vertex;
        v.type = VertexType::Crossing;
        v.over_or_bridge = 1;  // over strand at slots 1,3
        out.vertices.push_back(v);
        crossings.push_back(rec);
      } else if (p0 < p1 && p1 < q0 && q0 < q1) {
        // case B: over "/", under "\": NE=over(close) NW=under(open) SW=over(open)
        // SE=under(close)
        rec.vertex = next_vid++;
        rec.slot[{static_cast<int>(i1), false}] = 0;
        rec.slot[{static_cast<int>(i0), true}] = 1;
        rec.slot[{static_cast<int>(i1), true}] = 2;
        rec.slot[{static_cast<int>(i0), false}] = 3;
        rec.over_coord = q0;
        rec.under_coord = p1;
        PlanarVertex v;
        v.id = rec.vertex;
        v.type = VertexType::Crossing;
        v.over_or_bridge = 0;  // over strand at slots 0,2
        out.vertices.push_back(v);
        crossings.push_back(rec);
      }
    }
  }

  // build strand segments: walk along arcs and through non-vertex letters,
  // splitting arcs at their crossings (ordered by coordinate)
  struct Stop {
    int vertex;
    int slot;
  };
  // sequential stops along each arc from open to close
  std::map<int, std::vector<std::pair<uint32_t, Stop>>> arc_stops;
  for (const CxRec& rec : crossings) {
    arc_stops[rec.over_arc].push_back(
        {rec.over_coord, Stop{rec.vertex, rec.slot.at({rec.over_arc, true})}});
    arc_stops[rec.under_arc].push_back(
        {rec.under_coord, Stop{rec.vertex, rec.slot.at({rec.under_arc, true})}});
  }
  // the slot stored above is the port toward the arc's OPEN end; the port
  // toward the close end is the opposite slot
  for (auto& [arc, stops] : arc_stops) {
    std::sort(stops.begin(), stops.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  // node = (arc idx, which side of which stop); walk components
  // simpler: traverse strands as sequences of (EndRef chain) like decode does,
  // emitting vertex ports in order
  std::map<EndRef, std::pair<int, bool>> end_arc;  // arc end -> (arc idx, is_open)
  for (size_t a = 0; a < arcs.size(); ++a) {
    end_arc[std::get<1>(arcs[a])] = {static_cast<int>(a), true};
    end_arc[std::get<2>(arcs[a])] = {static_cast<int>(a), false};
  }
  std::map<EndRef, EndRef> pm;  // through-point pairing
  for (uint32_t pos = 0; pos < w.size(); ++pos) {
    const LocalPicture& lp = local_picture(w[pos]);
    for (auto [e1, e2] : lp.branches) {
      pm[EndRef{pos, static_cast<uint8_t>(e1)}] = EndRef{pos, static_cast<uint8_t>(e2)};
      pm[EndRef{pos, static_cast<uint8_t>(e2)}] = EndRef{pos, static_cast<uint8_t>(e1)};
    }
  }
  auto arcmate = [&](EndRef e) -> EndRef {
    auto [a, is_open] = end_arc.at(e);
    return is_open ? std::get<2>(arcs[a]) : std::get<1>(arcs[a]);
  };

  // walking an arc yields its crossing stops as (entry, exit) port pairs in
  // traversal order; entering from the close end reverses order and swaps roles
  auto ports_along = [&](EndRef from) -> std::vector<std::pair<Stop, Stop>> {
    auto [a, is_open] = end_arc.at(from);
    std::vector<std::pair<Stop, Stop>> stops;
    auto it = arc_stops.find(a);
    if (it == arc_stops.end()) return stops;
    for (auto& [coord, stop] : it->second) {
      Stop entry = stop;                                       // port toward the open end
      Stop exit{stop.vertex, (stop.slot + 2) % 4};
      stops.push_back({entry, exit});
    }
    if (!is_open) {
      std::reverse(stops.begin(), stops.end());
      for (auto& [en, ex] : stops) std::swap(en, ex);
    }
    return stops;
  };

  // trace strands; each vertex passage contributes an (entry, exit) port pair
  // and each segment between an exit and the following entry is one edge
  std::set<EndRef> seen;
  int free_loops = 0;
  int next_eid = 0;
  for (auto& [e0, mate0] : pm) {
    if (seen.count(e0)) continue;
    std::vector<std::pair<Stop, Stop>> passes;  // (entry, exit) in order
    EndRef cur = e0;
    while (!seen.count(cur)) {
      seen.insert(cur);
      EndRef nxt = pm.at(cur);
      seen.insert(nxt);
      if (x_port.count(cur)) {
        passes.push_back({Stop{x_port.at(cur).vertex, x_port.at(cur).slot},
                          Stop{x_port.at(nxt).vertex, x_port.at(nxt).slot}});
      }
      for (const auto& pr : ports_along(nxt)) passes.push_back(pr);
      cur = arcmate(nxt);
    }
    if (passes.empty()) {
      ++free_loops;
      continue;
    }
    for (size_t i = 0; i < passes.size(); ++i) {
      const Stop& from = passes[i].second;
      const Stop& to = passes[(i + 1) % passes.size()].first;
      PlanarEdge e;
      e.id = next_eid++;
      e.ends[0] = {from.vertex, from.slot};
      e.ends[1] = {to.vertex, to.slot};
      out.edges.push_back(e);
    }
  }
  out.free_loops = free_loops;
  for (PlanarVertex& v : out.vertices) v.rotation = {-1, -1, -1, -1};
  for (const PlanarEdge& e : out.edges) {
    for (int dir = 0; dir < 2; ++dir) {
      auto [vid, slot] = e.ends[dir];
      for (PlanarVertex& v : out.vertices) {
        if (v.id == vid) v.rotation[slot] = e.id;
      }
    }
  }
  for (const PlanarVertex& v : out.vertices) {
    for (int s = 0; s < 4; ++s) {
      if (v.rotation[s] < 0) throw EncoderError("planar_from_word: unfilled slot");
    }
  }
  return out;
}

}  // namespace threepage
