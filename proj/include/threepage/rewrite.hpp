#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "threepage/relations.hpp"
#include "threepage/word.hpp"

namespace threepage {

struct SearchBudget {
  size_t max_word_length = 0;   // absolute cap on enqueued words
  size_t max_states = 2'000'000;
  size_t max_depth = 24;        // BFS rounds per cap iteration, both sides combined

  // Default policy: cap = input length + 8; max_states honours the
  // THREEPAGE_MAX_STATES environment variable when set.
  static SearchBudget defaults_for(size_t input_length);
};

struct PathStep {
  RelationInstance rel;
  size_t pos;
  ApplyDir dir;
};

enum class Outcome : uint8_t { Proved, Refuted, Unknown };

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::vector<PathStep> path;   // Proved: replays w1 into w2
  std::string witness;          // Refuted: invariant name + values
  size_t states_visited = 0;

  bool proved() const { return outcome == Outcome::Proved; }
};

// Replays a path; throws ApplyError if any step fails to match.
Word replay(const Word& start, const std::vector<PathStep>& path);

// Bounded bidirectional search for congruence of w1 and w2 under the tier's
// effective rule set, with iterative deepening of the word-length cap.
// Proved comes with a replayable path (verified before returning); Refuted
// only via invariants the tier preserves.
Verdict equivalent(const Word& w1, const Word& w2, RuleTier tier, const SearchBudget& budget);

// Same search over an explicit rule set; refutation witnesses from the given
// tier.  Lets callers restrict to the canonical presentation.
Verdict equivalent_with(const std::vector<RelationInstance>& rules, const Word& w1,
                        const Word& w2, RuleTier witness_tier, const SearchBudget& budget);

struct SimplifyResult {
  Word result;
  std::vector<PathStep> path;
  size_t states_visited = 0;
};

// Minimal word in (length, lex) order among all words visited within budget;
// deterministic for a fixed budget.
SimplifyResult simplify(const Word& w, RuleTier tier, const SearchBudget& budget);

struct CentralityResult {
  Outcome outcome = Outcome::Unknown;
  std::string witness;
  // one entry per generator, in pack order a0..x2
  std::vector<std::pair<Letter, Verdict>> commutations;
};

// Proved iff w g ~ g w for each of the 15 generators, each within the given
// per-pair budget.  Refuted when a tier-safe invariant rules centrality out.
CentralityResult is_central(const Word& w, RuleTier tier, const SearchBudget& budget);

}  // namespace threepage
