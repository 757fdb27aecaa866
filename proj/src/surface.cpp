#include "threepage/surface.hpp"

#include "threepage/decode.hpp"

namespace threepage {

Word resolve(const Word& w, ResolutionSign sign) {
  std::vector<Letter> out;
  out.reserve(w.size() + (sign == ResolutionSign::Negative ? w.size() : 0));
  for (const Letter& l : w.letters()) {
    if (l.kind == Kind::X) {
      if (sign == ResolutionSign::Negative) {
        out.push_back(Letter{Kind::C, l.index});
        out.push_back(Letter{Kind::A, l.index});
      }
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word resolve_mixed(const Word& w, const std::vector<ResolutionSign>& signs) {
  std::vector<Letter> out;
  size_t xi = 0;
  for (const Letter& l : w.letters()) {
    if (l.kind == Kind::X) {
      if (xi >= signs.size()) throw std::invalid_argument("resolve_mixed: too few signs");
      if (signs[xi] == ResolutionSign::Negative) {
        out.push_back(Letter{Kind::C, l.index});
        out.push_back(Letter{Kind::A, l.index});
      }
      ++xi;
    } else {
      out.push_back(l);
    }
  }
  if (xi != signs.size()) throw std::invalid_argument("resolve_mixed: too many signs");
  return Word(std::move(out));
}

int euler_characteristic(const Word& w) {
  int saddles = 0;
  for (const Letter& l : w.letters())
    if (l.kind == Kind::X) ++saddles;
  int cm = component_count(resolve(w, ResolutionSign::Negative));
  int cp = component_count(resolve(w, ResolutionSign::Positive));
  return cm + cp - saddles;
}

Word canonical_unlink(int components) {
  std::vector<Letter> ls;
  for (int i = 0; i < components; ++i) {
    ls.push_back(Letter{Kind::A, 0});
    ls.push_back(Letter{Kind::C, 0});
  }
  return Word(std::move(ls));
}

TrivialityVerdict is_trivial_link(const Word& w, const SearchBudget& budget) {
  TrivialityVerdict tv;
  for (const Letter& l : w.letters()) {
    if (l.kind == Kind::X) throw std::invalid_argument("is_trivial_link: word has x letters");
  }
  DecodeResult dr = decode(w);
  if (!dr.ok()) throw std::invalid_argument("is_trivial_link: " + dr.error_message());
  int k = static_cast<int>(dr.diagram->components.size());

  LinkDiagram D = to_link_diagram(w);
  auto lk = linking_matrix(D);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && lk[i][j] != 0) {
        tv.result = Triviality::CertifiedNontrivial;
        tv.witness = "linking number lk(" + std::to_string(i) + "," + std::to_string(j) +
                     ") = " + std::to_string(lk[i][j]);
        return tv;
      }
    }
  }
  if (D.crossings.size() <= kBracketCrossingCap) {
    auto fs = normalized_bracket_set(D);
    Laurent unl = Laurent::delta_pow(k - 1);
    if (!fs.count(unl)) {
      tv.result = Triviality::CertifiedNontrivial;
      tv.witness = "normalized bracket differs from the " + std::to_string(k) + "-unlink value";
      return tv;
    }
  }

  Word target = canonical_unlink(k);
  if (w == target) {
    tv.result = Triviality::CertifiedTrivial;
    return tv;
  }
  Verdict v = equivalent(w, target, RuleTier::Classical, budget);
  if (v.proved()) {
    tv.result = Triviality::CertifiedTrivial;
    tv.path = std::move(v.path);
  }
  return tv;
}

AdmissibilityReport admissible(const Word& w, const SearchBudget& budget) {
  DecodeResult dr = decode(w);
  if (!dr.ok()) throw std::invalid_argument("admissible: " + dr.error_message());
  AdmissibilityReport rep;
  rep.positive = is_trivial_link(resolve(w, ResolutionSign::Positive), budget);
  rep.negative = is_trivial_link(resolve(w, ResolutionSign::Negative), budget);
  if (rep.positive.result == Triviality::CertifiedTrivial &&
      rep.negative.result == Triviality::CertifiedTrivial) {
    rep.overall = Admissibility::Admissible;
  } else if (rep.positive.result == Triviality::CertifiedNontrivial ||
             rep.negative.result == Triviality::CertifiedNontrivial) {
    rep.overall = Admissibility::NotAdmissible;
  } else {
    rep.overall = Admissibility::Unknown;
  }
  return rep;
}

}  // namespace threepage
