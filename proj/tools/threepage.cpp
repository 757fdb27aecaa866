#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "threepage/json_io.hpp"
#include "threepage/selftest.hpp"

using namespace threepage;

namespace {

constexpr int kExitOk = 0, kExitInvalid = 1, kExitUnknown = 2, kExitRefuted = 3;

RuleTier tier_from(const std::string& s) {
  if (s == "classical") return RuleTier::Classical;
  if (s == "singular") return RuleTier::Singular;
  if (s == "full") return RuleTier::Full;
  throw CLI::ValidationError("--tier must be classical, singular or full");
}

SearchBudget budget_for(size_t len, size_t max_states_opt) {
  SearchBudget b = SearchBudget::defaults_for(len);
  if (max_states_opt) b.max_states = max_states_opt;
  return b;
}

void print_path(const std::vector<PathStep>& path) {
  for (const PathStep& s : path) {
    std::cout << "  " << (s.dir == ApplyDir::LtoR ? "->" : "<-") << " pos " << s.pos << "  "
              << s.rel.display() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word calculus for 2-links in 4-space via 3-page embeddings"};
  app.require_subcommand(1);

  std::string word_arg, word_arg2, tier_s = "full", sign_s = "pos", input_file, mixed_signs;
  size_t max_states = 0;
  bool json_out = false, verbose_path = false, list_rels = false;

  auto add_word = [&](CLI::App* cmd, std::string& target, const char* name = "word") {
    cmd->add_option(name, target, "word as quoted tokens, e.g. \"a0 b1\"")->required();
  };

  auto* c_parse = app.add_subcommand("parse", "parse a word and echo it normalized");
  add_word(c_parse, word_arg);
  c_parse->add_flag("--json", json_out);

  auto* c_decode = app.add_subcommand("decode", "decode a word into a marked-graph diagram");
  add_word(c_decode, word_arg);
  c_decode->add_flag("--json", json_out);

  auto* c_resolve = app.add_subcommand("resolve", "resolve the singular points of a word");
  add_word(c_resolve, word_arg);
  c_resolve->add_option("--sign", sign_s, "pos|neg");
  c_resolve->add_option("--mixed", mixed_signs,
                        "experimental per-saddle signs, e.g. \"+-\" (overrides --sign)");

  auto* c_chi = app.add_subcommand("chi", "euler characteristic of the represented surface");
  add_word(c_chi, word_arg);

  auto* c_inv = app.add_subcommand("invariants", "component, chi, triviality and bracket data");
  add_word(c_inv, word_arg);
  c_inv->add_option("--max-states", max_states);

  auto* c_adm = app.add_subcommand("admissible", "are both resolutions trivial links");
  add_word(c_adm, word_arg);
  c_adm->add_option("--max-states", max_states);

  auto* c_equiv = app.add_subcommand("equiv", "bounded equivalence search for two words");
  add_word(c_equiv, word_arg, "word1");
  add_word(c_equiv, word_arg2, "word2");
  c_equiv->add_option("--tier", tier_s, "classical|singular|full");
  c_equiv->add_option("--max-states", max_states);
  c_equiv->add_flag("--path", verbose_path, "print the rewrite path when proved");

  auto* c_simp = app.add_subcommand("simplify", "shortest equivalent word found within budget");
  add_word(c_simp, word_arg);
  c_simp->add_option("--tier", tier_s);
  c_simp->add_option("--max-states", max_states);
  c_simp->add_flag("--path", verbose_path);

  auto* c_cent = app.add_subcommand("central", "is the word central (encodes a 2-link)");
  add_word(c_cent, word_arg);
  c_cent->add_option("--tier", tier_s);
  c_cent->add_option("--max-states", max_states);

  auto* c_rels = app.add_subcommand("relations", "the defining relations of SL");
  c_rels->add_flag("--list", list_rels);
  c_rels->add_option("--tier", tier_s);

  auto* c_enc = app.add_subcommand("encode", "encode a planar marked-graph diagram");
  c_enc->add_option("--input", input_file, "diagram JSON file")->required();

  auto* c_self = app.add_subcommand("selftest", "relation-safety and fixture checks");
  c_self->add_option("--contexts", max_states, "contexts per relation instance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_parse->parsed()) {
      Word w = parse_word(word_arg);
      if (json_out) {
        std::cout << "{\"word\": \"" << format_word(w) << "\", \"length\": " << w.size()
                  << "}\n";
      } else {
        std::cout << format_word(w) << "\n" << w.size() << " letters\n";
      }
      return kExitOk;
    }
    if (c_decode->parsed()) {
      Word w = parse_word(word_arg);
      DecodeResult r = decode(w);
      if (!r.ok()) {
        std::cerr << "decode failed: " << r.error_message() << "\n";
        return kExitRefuted;
      }
      if (json_out) {
        std::cout << diagram_json(w, *r.diagram) << "\n";
      } else {
        std::cout << "components: " << r.diagram->components.size()
                  << "\nsingular points: " << r.diagram->singular_points.size() << "\n";
      }
      return kExitOk;
    }
    if (c_resolve->parsed()) {
      Word w = parse_word(word_arg);
      Word r;
      if (!mixed_signs.empty()) {
        std::vector<ResolutionSign> signs;
        for (char c : mixed_signs) {
          if (c == '+') signs.push_back(ResolutionSign::Positive);
          else if (c == '-') signs.push_back(ResolutionSign::Negative);
          else throw std::invalid_argument("--mixed wants only + and -");
        }
        r = resolve_mixed(w, signs);
      } else if (sign_s == "pos") {
        r = resolve(w, ResolutionSign::Positive);
      } else if (sign_s == "neg") {
        r = resolve(w, ResolutionSign::Negative);
      } else {
        throw std::invalid_argument("--sign must be pos or neg");
      }
      std::cout << format_word(r) << "\n";
      return kExitOk;
    }
    if (c_chi->parsed()) {
      Word w = parse_word(word_arg);
      std::cout << euler_characteristic(w) << "\n";
      return kExitOk;
    }
    if (c_inv->parsed()) {
      Word w = parse_word(word_arg);
      SearchBudget b = budget_for(w.size() + 2 * w.size(), max_states);
      AdmissibilityReport rep = admissible(w, b);
      std::cout << invariants_json(w, rep) << "\n";
      return kExitOk;
    }
    if (c_adm->parsed()) {
      Word w = parse_word(word_arg);
      SearchBudget b = budget_for(2 * w.size(), max_states);
      AdmissibilityReport rep = admissible(w, b);
      const char* s = rep.overall == Admissibility::Admissible      ? "Admissible"
                      : rep.overall == Admissibility::NotAdmissible ? "NotAdmissible"
                                                                    : "Unknown";
      std::cout << s << "\n";
      return rep.overall == Admissibility::Admissible      ? kExitOk
             : rep.overall == Admissibility::NotAdmissible ? kExitRefuted
                                                           : kExitUnknown;
    }
    if (c_equiv->parsed()) {
      Word w1 = parse_word(word_arg), w2 = parse_word(word_arg2);
      SearchBudget b = budget_for(std::max(w1.size(), w2.size()), max_states);
      Verdict v = equivalent(w1, w2, tier_from(tier_s), b);
      switch (v.outcome) {
        case Outcome::Proved:
          std::cout << "Proved (" << v.path.size() << " steps, " << v.states_visited
                    << " states)\n";
          if (verbose_path) print_path(v.path);
          return kExitOk;
        case Outcome::Refuted:
          std::cout << "Refuted: " << v.witness << "\n";
          return kExitRefuted;
        case Outcome::Unknown:
          std::cout << "Unknown (" << v.states_visited << " states)\n";
          return kExitUnknown;
      }
    }
    if (c_simp->parsed()) {
      Word w = parse_word(word_arg);
      SearchBudget b = budget_for(w.size(), max_states);
      SimplifyResult r = simplify(w, tier_from(tier_s), b);
      std::cout << format_word(r.result) << "\n";
      if (verbose_path) print_path(r.path);
      return kExitOk;
    }
    if (c_cent->parsed()) {
      Word w = parse_word(word_arg);
      SearchBudget b = budget_for(w.size() + 1, max_states);
      CentralityResult r = is_central(w, tier_from(tier_s), b);
      switch (r.outcome) {
        case Outcome::Proved: {
          std::cout << "Proved: central; commutation path lengths:";
          for (auto& [g, v] : r.commutations) std::cout << " " << v.path.size();
          std::cout << "\n";
          return kExitOk;
        }
        case Outcome::Refuted:
          std::cout << "Refuted: " << r.witness << "\n";
          return kExitRefuted;
        case Outcome::Unknown:
          std::cout << "Unknown\n";
          return kExitUnknown;
      }
    }
    if (c_rels->parsed()) {
      auto rels = enumerate_relations(tier_from(tier_s));
      if (list_rels) {
        for (const RelationInstance& r : rels) std::cout << r.display() << "\n";
      } else {
        std::cout << rels.size() << " relations\n";
      }
      return kExitOk;
    }
    if (c_enc->parsed()) {
      std::ifstream in(input_file);
      if (!in) {
        std::cerr << "cannot open " << input_file << "\n";
        return kExitInvalid;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      PlanarMarkedDiagram d = diagram_from_json(ss.str());
      Word w = encode_diagram(d);
      std::cout << format_word(w) << "\n";
      return kExitOk;
    }
    if (c_self->parsed()) {
      SafetyReport s1 = structural_safety();
      std::cout << "structural safety: " << s1.instances_checked << " instances, "
                << s1.issues.size() << " issues\n";
      for (const SafetyIssue& i : s1.issues) {
        std::cout << "  " << i.where << ": " << i.detail << "\n";
      }
      int ctx = max_states ? static_cast<int>(max_states) : 20;
      SafetyReport s2 = context_safety(ctx, 20240811);
      std::cout << "context safety: " << s2.instances_checked << " instances, "
                << s2.contexts_checked << " contexts, " << s2.issues.size() << " issues\n";
      for (const SafetyIssue& i : s2.issues) {
        std::cout << "  " << i.where << ": " << i.detail << "\n";
      }
      return s1.ok() && s2.ok() ? kExitOk : kExitInvalid;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
