#pragma once

#include "threepage/word.hpp"

namespace threepage::fixtures {

// The Fig. 8 three-page embedding of the spun-trefoil marked graph,
// 25 letters with two singular points.
inline Word w_g() {
  return parse_word(
      "a0 a1 b2 b0 b1 b2 b0 b1 d0 a0 x1 b2 x1 b1 c1 d1 b0 d1 d0 d2 d1 d0 d2 c1 c0");
}

// Two circles clasped once; 2 crossings, linking number +-1.
inline Word hopf() { return parse_word("a0 a1 b2 b0 c1 c2"); }

// Standard torus marked graph: two circles through two singular points,
// both resolutions are unknots.
inline Word torus() { return parse_word("a0 a1 x0 x1 c0 c1"); }

// One singular point inserted between the clasped strands of the Hopf
// pattern; the negative resolution is a Hopf link.
inline Word hopf_saddle() { return parse_word("a0 a1 b2 b0 x1 c2 c1"); }

}  // namespace threepage::fixtures
