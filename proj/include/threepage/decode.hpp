#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "threepage/page_table.hpp"
#include "threepage/word.hpp"

namespace threepage {

// An arc end inside a word: letter position plus the end id within that
// letter's local picture.
struct EndRef {
  uint32_t pos;
  uint8_t end;
  friend bool operator==(const EndRef& a, const EndRef& b) {
    return a.pos == b.pos && a.end == b.end;
  }
  friend bool operator<(const EndRef& a, const EndRef& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.end < b.end;
  }
};

struct PageArc {
  EndRef open;   // right-going end (smaller position)
  EndRef close;  // left-going end
};

struct SingularPoint {
  uint32_t pos;
  // branch pairing inherited from the local picture: (end, end) per branch
  std::array<std::pair<uint8_t, uint8_t>, 2> branches;
};

// Decoded closed marked-graph diagram of a word.
struct MarkedGraphDiagram {
  Word axis_points;
  std::array<std::vector<PageArc>, 3> page_arcs;   // per page, sorted by open position
  std::vector<SingularPoint> singular_points;
  std::vector<std::vector<EndRef>> components;     // cycles of arc/point traversal
};

enum class DecodeStatus : uint8_t {
  Ok,
  // some page has more openers than closers or vice versa
  Unbalanced,
  // counts balance but a closer precedes its opener: the word is a tangle
  OpenEndpoints,
};

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Ok;
  uint8_t page = 0;      // offending page when not Ok
  uint32_t position = 0; // offending letter position when not Ok
  std::optional<MarkedGraphDiagram> diagram;

  bool ok() const { return status == DecodeStatus::Ok; }
  std::string error_message() const;
};

// Match per-page events into the unique non-crossing arc system and close the
// curves up through the axis points.  Succeeds exactly for closed diagrams.
DecodeResult decode(const Word& w);

// Number of closed curves; requires decode to succeed.
int component_count(const Word& w);

// Per-page count of right-going minus left-going ends; (0,0,0) is necessary
// for decodability and is invariant under all relations.
std::array<int, 3> page_balance(const Word& w);

// Tangle analysis used by the relation validator: external end sequences per
// page plus the pairing of external ends along strands.
struct TangleInterface {
  // per page: ordered list of (end, is_in) — "in" ends await an arc from the
  // left, "out" ends continue to the right
  std::array<std::vector<std::pair<EndRef, bool>>, 3> external;
  // strand pairing between external ends, as indices (page, slot)
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairing;
  int closed_loops = 0;
};

TangleInterface tangle_interface(const Word& w);

}  // namespace threepage
