#pragma once

#include <optional>
#include <string>
#include <vector>

#include "threepage/word.hpp"

namespace threepage {

// The defining relations (1)-(8) of the universal semigroup SL, materialized
// as concrete oriented pairs of words.  The canonical presentation has exactly
// 96 instances; a small auxiliary set of derivable instances is kept separate
// for the search engine.

enum class Family : uint8_t { R1 = 1, R2, R3, R4, R5, R6, R7, R8 };

struct RelationInstance {
  Family family;
  uint8_t index;      // the i in Z3 the instance was generated from
  std::string tag;    // sub-case within the family, e.g. "bd", "ab.c", "rot"
  bool redundant = false;  // true for the auxiliary derivable instances
  Word lhs;
  Word rhs;

  std::string display() const;  // "lhs = rhs  [family, i]"
};

enum class RuleTier : uint8_t { Classical, Singular, Full };

// The canonical presentation restricted to a tier:
//   Full      = families (1)-(8), exactly 96 instances
//   Singular  = families (1)-(5), 84 instances (the semigroup SK)
//   Classical = families (1)-(3) without x letters, 48 instances
std::vector<RelationInstance> enumerate_relations(RuleTier tier);

// Derivable instances excluded from the canonical count: d0 b0 = 1, the two
// cyclic shifts of d0 d1 d2 = 1, and the six commutations of d_i c_i with
// a_{i+1} and b_{i+1}.  Used by the search engine for speed.
std::vector<RelationInstance> redundant_relations(RuleTier tier);

// Canonical plus redundant; what the neighbor expansion uses.
std::vector<RelationInstance> effective_relations(RuleTier tier);

enum class ApplyDir : uint8_t { LtoR, RtoL };

class ApplyError : public std::runtime_error {
 public:
  explicit ApplyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Replace one occurrence of the source side of r at position pos by the other
// side.  Throws ApplyError when the source side does not occur there.
Word apply(const Word& w, const RelationInstance& r, size_t pos, ApplyDir dir);

// All words obtainable from w by one application of any instance in the
// tier's effective set, in either direction, at any position.  Deduplicated
// and sorted by (length, lex).
std::vector<Word> neighbors(const Word& w, RuleTier tier);

// Index shift i -> i+k on both sides; maps instances to instances of the
// combined canonical+redundant set.
RelationInstance rotate(const RelationInstance& r, int k);

}  // namespace threepage
