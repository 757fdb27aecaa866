#pragma once

#include <set>
#include <vector>

#include "threepage/laurent.hpp"
#include "threepage/link_diagram.hpp"

namespace threepage {

// Classical-link invariants on the planar projection; used as refutation
// witnesses by the rewrite engine and the triviality test.

struct OrientedDiagram {
  std::vector<int> crossing_sign;        // per crossing, first-traversal orientation
  std::vector<int> over_component;       // per crossing
  std::vector<int> under_component;     // per crossing
  int n_components = 0;
};

OrientedDiagram orient(const LinkDiagram& d);

// Pairwise linking numbers, diagonal zero; orientations from first traversal.
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);

// Canonical form under simultaneous row/column permutation and global sign,
// used for comparisons where words carry no orientation data.
std::vector<std::vector<int>> linking_canonical(const std::vector<std::vector<int>>& m);

constexpr int kBracketCrossingCap = 24;

class BracketCapExceeded : public std::runtime_error {
 public:
  explicit BracketCapExceeded(const std::string& m) : std::runtime_error(m) {}
};

// Raw Kauffman bracket by the 2^n state sum; throws above the crossing cap.
Laurent kauffman_bracket(const LinkDiagram& d, int cap = kBracketCrossingCap);

// Writhe-corrected bracket (-A^3)^{-w} <D> with first-traversal orientations.
Laurent normalized_bracket(const LinkDiagram& d, int cap = kBracketCrossingCap);

// The normalized bracket over all 2^(k-1) orientation classes; an invariant
// of the unoriented link, used for relation-safety comparisons.
std::set<Laurent> normalized_bracket_set(const LinkDiagram& d, int cap = kBracketCrossingCap);

}  // namespace threepage
