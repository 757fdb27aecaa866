#pragma once

#include <array>
#include <string>
#include <vector>

#include "threepage/decode.hpp"
#include "threepage/word.hpp"

namespace threepage {

// A 4-valent planar diagram of a marked graph: crossing vertices carry an
// over/under assignment, singular vertices a bridge.  The embedding is given
// by the rotation system (edge ids in counterclockwise order at each vertex).
//
// Slots are 0..3 in rotation order; "over: [s, s+2]" marks the over-strand
// slot pair at a crossing.  Sector j is the corner between slots j and j+1;
// "bridge: [j, j+2]" marks the two opposite sectors holding the bridge ends
// at a singular vertex.  Crossing-free circles are counted in free_loops.

enum class VertexType : uint8_t { Crossing, Singular };

struct PlanarVertex {
  int id;
  VertexType type;
  std::array<int, 4> rotation;  // edge ids, CCW
  int over_or_bridge;           // slot index s (crossing) or sector index j (singular)
};

struct PlanarEdge {
  int id;
  // (vertex id, slot) for each end
  std::array<std::pair<int, int>, 2> ends;
};

struct PlanarMarkedDiagram {
  std::vector<PlanarVertex> vertices;
  std::vector<PlanarEdge> edges;
  int free_loops = 0;
};

class EncoderError : public std::runtime_error {
 public:
  explicit EncoderError(const std::string& m) : std::runtime_error(m) {}
};

// Structural validation: 4-valence, rotation/ends consistency, Euler count
// V - E + F = 1 + #components on the sphere.  Throws EncoderError.
void validate_diagram(const PlanarMarkedDiagram& d);

// The Proposition-3.2 construction: choose a path through every over-arc and
// bridge exactly once (deterministic search, fewest transversal intersections
// first), linearize the plane along it, and read the letters off the local
// pictures.  The result decodes to a diagram with the same component,
// singular and crossing counts; this is verified before returning.
Word encode_diagram(const PlanarMarkedDiagram& d);

// Planar diagram of a decoded word: P1 arcs become overpasses above the P0
// half-plane, singular letters become bridge vertices on the axis.  Used to
// round-trip decoded words back through the encoder.
PlanarMarkedDiagram planar_from_word(const Word& w);

}  // namespace threepage
