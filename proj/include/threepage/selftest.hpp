#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "threepage/decode.hpp"
#include "threepage/relations.hpp"

namespace threepage {

// Relation-safety suites.  The local-picture table cannot be checked in
// isolation; the 96 relations over-determine it, so these suites are the
// correctness gate for the transcription.

struct SafetyIssue {
  std::string where;
  std::string detail;
};

struct SafetyReport {
  std::vector<SafetyIssue> issues;
  int instances_checked = 0;
  int contexts_checked = 0;
  bool ok() const { return issues.empty(); }
};

// Structural checks on every canonical and redundant instance:
//  - per-page balance equal on both sides (all families);
//  - x-count equal for families (1)-(5);
//  - boundary interfaces equal, or the left side is a single through-strand
//    and the right side empty (the "= 1" relations);
//  - equal strand pairing and internal loop count for families (1)-(5)
//    (families (6)-(8) are 2-link moves and may rearrange the singular link).
// The table parameter allows tests to corrupt one entry and assert detection.
SafetyReport structural_safety(
    const std::array<LocalPicture, kNumLetters>& table = local_picture_table());

// Closed-context checks: embed each instance's longer side in randomized
// decodable contexts and compare across the two sides
//  - decode success (all families),
//  - component count (all families except (7)),
//  - singular count (all families except (6)),
//  - euler characteristic (all families),
//  - resolution component counts (families (1)-(5)),
//  - for classical instances: linking matrix up to permutation and sign, and
//    the orientation-set of normalized brackets.
SafetyReport context_safety(int contexts_per_instance, uint64_t seed,
                            bool check_admissibility = false);

// Deterministic closed-word generator used by the suites and property tests.
class ContextGen {
 public:
  explicit ContextGen(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next();
  // a decodable word of length <= max_len; classical_only excludes x letters
  Word closed_word(size_t max_len, bool classical_only);
  // (u, v) such that u . filler . v decodes, by rejection around closed words
  std::optional<std::pair<Word, Word>> closing_context(const Word& filler, size_t max_len,
                                                       bool classical_only, int tries = 300);

 private:
  uint64_t state_;
};

}  // namespace threepage
