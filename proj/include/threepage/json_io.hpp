#pragma once

#include <string>

#include "threepage/decode.hpp"
#include "threepage/encoder.hpp"
#include "threepage/surface.hpp"

namespace threepage {

// Stable JSON emission: fixed key order, no nondeterministic fields.

std::string diagram_json(const Word& w, const MarkedGraphDiagram& d);
std::string invariants_json(const Word& w, const AdmissibilityReport& rep);

// Diagram file format:
// {
//   "vertices": [{"id": 0, "type": "crossing"|"singular",
//                 "rotation": [edge ids CCW],
//                 "over": slot | "bridge": sector}],
//   "edges": [{"id": 0, "ends": [[vertex, slot], [vertex, slot]]}],
//   "free_loops": 0
// }
PlanarMarkedDiagram diagram_from_json(const std::string& text);
std::string diagram_to_json(const PlanarMarkedDiagram& d);

}  // namespace threepage
