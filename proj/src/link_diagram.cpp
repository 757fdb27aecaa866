#include "threepage/link_diagram.hpp"

#include <algorithm>
#include <map>

namespace threepage {

LinkDiagram to_link_diagram(const Word& w) {
  for (const Letter& l : w.letters()) {
    if (l.kind == Kind::X) throw LinkDiagramError("word contains an x letter");
  }
  DecodeResult dr = decode(w);
  if (!dr.ok()) throw LinkDiagramError("decode failed: " + dr.error_message());
  const MarkedGraphDiagram& dg = *dr.diagram;

  LinkDiagram D;
  std::map<EndRef, std::pair<int, bool>> end_slot;  // arc end -> (arc idx, at_open)
  for (int pg = 0; pg < 3; ++pg) {
    for (const PageArc& a : dg.page_arcs[pg]) {
      DiagramArc da;
      da.page = static_cast<uint8_t>(pg);
      da.open = a.open;
      da.close = a.close;
      end_slot[a.open] = {static_cast<int>(D.arcs.size()), true};
      end_slot[a.close] = {static_cast<int>(D.arcs.size()), false};
      D.arcs.push_back(std::move(da));
    }
  }

  // crossings: interleaved (P1, P0) arc interval pairs
  for (size_t i1 = 0; i1 < D.arcs.size(); ++i1) {
    if (D.arcs[i1].page != 1) continue;
    uint32_t p1 = D.arcs[i1].open.pos, q1 = D.arcs[i1].close.pos;
    for (size_t i0 = 0; i0 < D.arcs.size(); ++i0) {
      if (D.arcs[i0].page != 0) continue;
      uint32_t p0 = D.arcs[i0].open.pos, q0 = D.arcs[i0].close.pos;
      if (p1 < p0 && p0 < q1 && q1 < q0) {
        D.crossings.push_back(Crossing{static_cast<int>(i1), static_cast<int>(i0), CrossCase::A});
      } else if (p0 < p1 && p1 < q0 && q0 < q1) {
        D.crossings.push_back(Crossing{static_cast<int>(i1), static_cast<int>(i0), CrossCase::B});
      }
    }
  }

  // order crossings along each arc; the coordinate of a crossing on one arc is
  // the other arc's endpoint that lies inside this arc's interval
  std::vector<std::vector<std::pair<uint32_t, int>>> along(D.arcs.size());
  for (size_t k = 0; k < D.crossings.size(); ++k) {
    const Crossing& c = D.crossings[k];
    uint32_t p0 = D.arcs[c.under_arc].open.pos, q0 = D.arcs[c.under_arc].close.pos;
    uint32_t p1 = D.arcs[c.over_arc].open.pos, q1 = D.arcs[c.over_arc].close.pos;
    uint32_t co = c.kind == CrossCase::A ? p0 : q0;  // along the over arc
    uint32_t cu = c.kind == CrossCase::A ? q1 : p1;  // along the under arc
    along[c.over_arc].push_back({co, static_cast<int>(k)});
    along[c.under_arc].push_back({cu, static_cast<int>(k)});
  }
  for (size_t a = 0; a < D.arcs.size(); ++a) {
    std::sort(along[a].begin(), along[a].end());
    for (auto& [coord, k] : along[a]) D.arcs[a].crossings.push_back(k);
  }

  // axis point joins
  for (uint32_t pos = 0; pos < w.size(); ++pos) {
    const LocalPicture& lp = local_picture(w[pos]);
    for (auto [e1, e2] : lp.branches) {
      D.point_joins.push_back({end_slot.at(EndRef{pos, static_cast<uint8_t>(e1)}),
                               end_slot.at(EndRef{pos, static_cast<uint8_t>(e2)})});
    }
  }
  D.n_components = static_cast<int>(dg.components.size());
  return D;
}

}  // namespace threepage
