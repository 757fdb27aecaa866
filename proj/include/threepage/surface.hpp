#pragma once

#include <optional>

#include "threepage/invariants.hpp"
#include "threepage/rewrite.hpp"
#include "threepage/word.hpp"

namespace threepage {

enum class ResolutionSign : uint8_t { Positive, Negative };

// Positive: every x_i deleted (smoothing along the bridges, the t > 0 section).
// Negative: every x_i replaced by c_i a_i (across the bridges, t < 0).
Word resolve(const Word& w, ResolutionSign sign);

// Mixed-sign variant, one sign per x letter in word order.  Experimental; the
// uniform-sign readings above are the ones the surface semantics assert.
Word resolve_mixed(const Word& w, const std::vector<ResolutionSign>& signs);

// chi = c_- + c_+ - s from the handle decomposition: both resolutions cap off
// with disks across s saddles.  Requires w and both resolutions to decode.
int euler_characteristic(const Word& w);

enum class Triviality : uint8_t { CertifiedTrivial, CertifiedNontrivial, Unknown };

struct TrivialityVerdict {
  Triviality result = Triviality::Unknown;
  std::vector<PathStep> path;  // CertifiedTrivial: rewrites w to the canonical unlink
  std::string witness;         // CertifiedNontrivial: invariant evidence
};

// The canonical k-component unlink word: k copies of "a0 c0".
Word canonical_unlink(int components);

// CertifiedTrivial iff Classical-tier rewriting reaches the canonical unlink
// within budget; CertifiedNontrivial iff the linking matrix is nonzero or the
// normalized bracket differs from the unlink value.
TrivialityVerdict is_trivial_link(const Word& w, const SearchBudget& budget);

enum class Admissibility : uint8_t { Admissible, NotAdmissible, Unknown };

struct AdmissibilityReport {
  TrivialityVerdict positive;
  TrivialityVerdict negative;
  Admissibility overall = Admissibility::Unknown;
};

// Admissible iff both resolutions are certified trivial links.
AdmissibilityReport admissible(const Word& w, const SearchBudget& budget);

}  // namespace threepage
