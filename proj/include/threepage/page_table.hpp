#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "threepage/word.hpp"

namespace threepage {

// Local pictures of the 15 letters at an axis point.
//
// The book has pages P0, P1, P2 glued along the binding axis; a letter of
// index i uses the two pages P_i and P_{i+1}.  Each arc-end at the point
// either closes an arc arriving from the left (L) or opens an arc departing
// to the right (R).  The table, with p = i and q = i+1 (mod 3):
//
//   a_i : R in P_p, R in P_q         both arcs open rightward (a cup)
//   b_i : L in P_q, R in P_p         pass, P_q in -> P_p out
//   c_i : L in P_p, L in P_q         both arcs close leftward (a cap)
//   d_i : L in P_p, R in P_q         pass, P_p in -> P_q out
//   x_i : L,R in P_p and L,R in P_q  singular cross, bridge in the axis
//
// The two transversal branches at x_i pair opposite rays:
//   branch 1: (P_p, L) -> (P_q, R)     branch 2: (P_q, L) -> (P_p, R)
// Deleting x_i joins same-page ends (resolution along the bridge); replacing
// it by c_i a_i joins cross-page ends (resolution across the bridge).
//
// Rotation around the axis shifts both the letter index and the page labels
// by +1, so the table is rotation-equivariant by construction.  The
// relation-safety suite in selftest.hpp is the correctness gate for this
// transcription: the 96 relations over-determine every entry.

enum class EndDir : uint8_t { L, R };

struct ArcEnd {
  uint8_t page;  // 0, 1, 2
  EndDir dir;
};

struct LocalPicture {
  // 2 ends for a,b,c,d; 4 for x (order: P_p L, P_p R, P_q L, P_q R)
  std::vector<ArcEnd> ends;
  // pairs of end indices joined through the axis point (strand-through pairing)
  std::vector<std::pair<int, int>> branches;
  bool singular = false;
};

// The static table entry for one letter.
const LocalPicture& local_picture(Letter l);

// All 15 entries, indexed by Letter::pack().
const std::array<LocalPicture, kNumLetters>& local_picture_table();

namespace detail {
// Test hook: route lookups through a substitute table (nullptr restores the
// real one).
// Used by the selftest to prove that a corrupted entry is detected.
void set_local_picture_override(const std::array<LocalPicture, kNumLetters>* table);
}  // namespace detail

}  // namespace threepage
