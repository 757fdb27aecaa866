#pragma once

#include <vector>

#include "threepage/decode.hpp"
#include "threepage/word.hpp"

namespace threepage {

// Planar projection of a classical 3-page word. Page P0 maps to the upper
// half-plane, P2 to the lower half-plane, and P1 arcs overlie P0 arcs: a
// crossing is emitted wherever a P1 arc interval and a P0 arc interval
// interleave on the axis, P1 strand over.  P2 arcs never cross anything.
//
// CaseA: over (p1,q1), under (p0,q0) with p1 < p0 < q1 < q0
// CaseB: p0 < p1 < q0 < q1
enum class CrossCase : uint8_t { A, B };

struct Crossing {
  int over_arc;   // index into arcs, a P1 arc
  int under_arc;  // index into arcs, a P0 arc
  CrossCase kind;
};

struct DiagramArc {
  uint8_t page;
  EndRef open;
  EndRef close;
  // crossings met along the arc, ordered from the open end
  std::vector<int> crossings;
};

struct LinkDiagram {
  std::vector<DiagramArc> arcs;
  std::vector<Crossing> crossings;
  // pairing of arc ends through axis points: (arc, at_open?) pairs
  std::vector<std::pair<std::pair<int, bool>, std::pair<int, bool>>> point_joins;
  int n_components = 0;
};

class LinkDiagramError : public std::runtime_error {
 public:
  explicit LinkDiagramError(const std::string& m) : std::runtime_error(m) {}
};

// Requires decode(w) to succeed and w to contain no x letters.
LinkDiagram to_link_diagram(const Word& w);

}  // namespace threepage
