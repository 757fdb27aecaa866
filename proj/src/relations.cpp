#include "threepage/relations.hpp"

#include <algorithm>
#include <set>

namespace threepage {

namespace {

Letter L(Kind k, int i) {
  int m = i % 3;
  if (m < 0) m += 3;
  return Letter{k, static_cast<uint8_t>(m)};
}

Word W(std::initializer_list<Letter> ls) { return Word(std::vector<Letter>(ls)); }

bool has_x(const Word& w) {
  for (const Letter& l : w.letters())
    if (l.kind == Kind::X) return true;
  return false;
}

// u and v families of relation (3), by index i and sub-case tag.
std::vector<std::pair<std::string, Word>> family3_u(int i) {
  return {
      {"ab", W({L(Kind::A, i), L(Kind::B, i)})},
      {"dc", W({L(Kind::D, i), L(Kind::C, i)})},
      {"bddb", W({L(Kind::B, i - 1), L(Kind::D, i), L(Kind::D, i - 1), L(Kind::B, i)})},
      {"dxb", W({L(Kind::D, i), L(Kind::X, i), L(Kind::B, i)})},
  };
}

std::vector<std::pair<std::string, Word>> family3_v(int i) {
  return {
      {"a", W({L(Kind::A, i + 1)})},
      {"b", W({L(Kind::B, i + 1)})},
      {"c", W({L(Kind::C, i + 1)})},
      {"bdd", W({L(Kind::B, i), L(Kind::D, i + 1), L(Kind::D, i)})},
      {"x", W({L(Kind::X, i + 1)})},
  };
}

std::vector<RelationInstance> build_full() {
  std::vector<RelationInstance> out;
  auto add = [&out](Family f, int i, const std::string& tag, Word lhs, Word rhs) {
    out.push_back(RelationInstance{f, static_cast<uint8_t>(((i % 3) + 3) % 3), tag, false,
                                   std::move(lhs), std::move(rhs)});
  };

  // (1) d0 d1 d2 = 1 and b_i d_i = 1 = d_i b_i.  One of the six b/d relations
  // is superfluous; the canonical set drops d0 b0 = 1.
  add(Family::R1, 0, "ddd", W({L(Kind::D, 0), L(Kind::D, 1), L(Kind::D, 2)}), Word());
  for (int i = 0; i < 3; ++i) {
    add(Family::R1, i, "bd", W({L(Kind::B, i), L(Kind::D, i)}), Word());
    if (i != 0) add(Family::R1, i, "db", W({L(Kind::D, i), L(Kind::B, i)}), Word());
  }

  // (2) a_i = a_{i+1} d_{i-1}, b_i = a_{i-1} c_{i+1}, c_i = b_{i-1} c_{i+1},
  //     d_i = a_{i+1} c_{i-1}
  for (int i = 0; i < 3; ++i) {
    add(Family::R2, i, "a", W({L(Kind::A, i)}), W({L(Kind::A, i + 1), L(Kind::D, i - 1)}));
    add(Family::R2, i, "b", W({L(Kind::B, i)}), W({L(Kind::A, i - 1), L(Kind::C, i + 1)}));
    add(Family::R2, i, "c", W({L(Kind::C, i)}), W({L(Kind::B, i - 1), L(Kind::C, i + 1)}));
    add(Family::R2, i, "d", W({L(Kind::D, i)}), W({L(Kind::A, i + 1), L(Kind::C, i - 1)}));
  }

  // (3) uv = vu; the commutations of d_i c_i with a_{i+1} and b_{i+1} are
  // derivable and excluded from the canonical count.
  for (int i = 0; i < 3; ++i) {
    for (const auto& [ut, u] : family3_u(i)) {
      for (const auto& [vt, v] : family3_v(i)) {
        if (ut == "dc" && (vt == "a" || vt == "b")) continue;
        add(Family::R3, i, ut + "." + vt, u.append(v), v.append(u));
      }
    }
  }

  // (4) x_{i-1} = b_{i+1} x_i d_{i+1}; b_i x_i b_i = a_i (b_i x_i b_i) c_i;
  //     d_i x_i d_i = a_i (d_i x_i d_i) c_i
  for (int i = 0; i < 3; ++i) {
    add(Family::R4, i, "rot", W({L(Kind::X, i - 1)}),
        W({L(Kind::B, i + 1), L(Kind::X, i), L(Kind::D, i + 1)}));
    Word bxb = W({L(Kind::B, i), L(Kind::X, i), L(Kind::B, i)});
    add(Family::R4, i, "b", bxb, W({L(Kind::A, i)}).append(bxb).append(L(Kind::C, i)));
    Word dxd = W({L(Kind::D, i), L(Kind::X, i), L(Kind::D, i)});
    add(Family::R4, i, "d", dxd, W({L(Kind::A, i)}).append(dxd).append(L(Kind::C, i)));
  }

  // (5) (d_i x_i b_i) d_i^2 d_{i+1}^2 d_{i-1}^2 = d_i^2 d_{i+1}^2 d_{i-1}^2 (d_i x_i b_i)
  for (int i = 0; i < 3; ++i) {
    Word blk = W({L(Kind::D, i), L(Kind::X, i), L(Kind::B, i)});
    Word twist = W({L(Kind::D, i), L(Kind::D, i), L(Kind::D, i + 1), L(Kind::D, i + 1),
                    L(Kind::D, i - 1), L(Kind::D, i - 1)});
    add(Family::R5, i, "swim", blk.append(twist), twist.append(blk));
  }

  // (6) a_i x_i = a_i and a_i b_i x_i d_i c_i = 1
  for (int i = 0; i < 3; ++i) {
    add(Family::R6, i, "ax", W({L(Kind::A, i), L(Kind::X, i)}), W({L(Kind::A, i)}));
    add(Family::R6, i, "abxdc",
        W({L(Kind::A, i), L(Kind::B, i), L(Kind::X, i), L(Kind::D, i), L(Kind::C, i)}), Word());
  }

  // (7) d_i x_i b_i c_i x_i = b_i x_i d_i c_i x_i
  for (int i = 0; i < 3; ++i) {
    add(Family::R7, i, "vii",
        W({L(Kind::D, i), L(Kind::X, i), L(Kind::B, i), L(Kind::C, i), L(Kind::X, i)}),
        W({L(Kind::B, i), L(Kind::X, i), L(Kind::D, i), L(Kind::C, i), L(Kind::X, i)}));
  }

  // (8) with w_i = a_i b_i x_i b_i c_i pre-expanded
  for (int i = 0; i < 3; ++i) {
    Word wi = W({L(Kind::A, i), L(Kind::B, i), L(Kind::X, i), L(Kind::B, i), L(Kind::C, i)});
    Word lhs = wi.append(W({L(Kind::D, i + 1), L(Kind::D, i), L(Kind::D, i), L(Kind::D, i - 1),
                            L(Kind::A, i + 1), L(Kind::B, i + 1), L(Kind::X, i), L(Kind::B, i),
                            L(Kind::D, i + 1), L(Kind::B, i), L(Kind::B, i), L(Kind::B, i + 1),
                            L(Kind::D, i), L(Kind::D, i)}));
    Word rhs = wi.append(W({L(Kind::B, i - 1), L(Kind::B, i), L(Kind::A, i), L(Kind::B, i + 1),
                            L(Kind::A, i + 1), L(Kind::D, i), L(Kind::D, i), L(Kind::C, i - 1),
                            L(Kind::B, i), L(Kind::X, i), L(Kind::B, i)}));
    add(Family::R8, i, "viii", std::move(lhs), std::move(rhs));
  }
  return out;
}

bool in_tier(const RelationInstance& r, RuleTier tier) {
  switch (tier) {
    case RuleTier::Full: return true;
    case RuleTier::Singular: return r.family <= Family::R5;
    case RuleTier::Classical:
      return r.family <= Family::R3 && !has_x(r.lhs) && !has_x(r.rhs);
  }
  return false;
}

}  // namespace

std::string RelationInstance::display() const {
  std::string l = lhs.empty() ? "1" : format_word(lhs);
  std::string r = rhs.empty() ? "1" : format_word(rhs);
  return l + " = " + r + "  [" + std::to_string(static_cast<int>(family)) + ", " +
         std::to_string(static_cast<int>(index)) + ", " + tag + (redundant ? "*" : "") + "]";
}

std::vector<RelationInstance> enumerate_relations(RuleTier tier) {
  static const std::vector<RelationInstance> full = build_full();
  std::vector<RelationInstance> out;
  for (const auto& r : full)
    if (in_tier(r, tier)) out.push_back(r);
  return out;
}

std::vector<RelationInstance> redundant_relations(RuleTier tier) {
  std::vector<RelationInstance> out;
  auto add = [&out](Family f, int i, const std::string& tag, Word lhs, Word rhs) {
    out.push_back(RelationInstance{f, static_cast<uint8_t>(((i % 3) + 3) % 3), tag, true,
                                   std::move(lhs), std::move(rhs)});
  };
  add(Family::R1, 0, "db", W({L(Kind::D, 0), L(Kind::B, 0)}), Word());
  add(Family::R1, 1, "ddd", W({L(Kind::D, 1), L(Kind::D, 2), L(Kind::D, 0)}), Word());
  add(Family::R1, 2, "ddd", W({L(Kind::D, 2), L(Kind::D, 0), L(Kind::D, 1)}), Word());
  for (int i = 0; i < 3; ++i) {
    Word u = W({L(Kind::D, i), L(Kind::C, i)});
    Word va = W({L(Kind::A, i + 1)});
    Word vb = W({L(Kind::B, i + 1)});
    add(Family::R3, i, "dc.a", u.append(va), va.append(u));
    add(Family::R3, i, "dc.b", u.append(vb), vb.append(u));
  }
  std::vector<RelationInstance> filtered;
  for (auto& r : out)
    if (in_tier(r, tier)) filtered.push_back(std::move(r));
  return filtered;
}

std::vector<RelationInstance> effective_relations(RuleTier tier) {
  std::vector<RelationInstance> out = enumerate_relations(tier);
  std::vector<RelationInstance> red = redundant_relations(tier);
  out.insert(out.end(), red.begin(), red.end());
  return out;
}

Word apply(const Word& w, const RelationInstance& r, size_t pos, ApplyDir dir) {
  const Word& src = dir == ApplyDir::LtoR ? r.lhs : r.rhs;
  const Word& dst = dir == ApplyDir::LtoR ? r.rhs : r.lhs;
  if (pos > w.size() || pos + src.size() > w.size()) {
    throw ApplyError("application out of range at position " + std::to_string(pos));
  }
  for (size_t i = 0; i < src.size(); ++i) {
    if (w[pos + i] != src[i]) {
      throw ApplyError("relation side does not match word at position " + std::to_string(pos));
    }
  }
  std::vector<Letter> ls;
  ls.reserve(w.size() - src.size() + dst.size());
  for (size_t i = 0; i < pos; ++i) ls.push_back(w[i]);
  for (const Letter& l : dst.letters()) ls.push_back(l);
  for (size_t i = pos + src.size(); i < w.size(); ++i) ls.push_back(w[i]);
  return Word(std::move(ls));
}

std::vector<Word> neighbors(const Word& w, RuleTier tier) {
  std::set<Word> out;
  for (const RelationInstance& r : effective_relations(tier)) {
    for (ApplyDir dir : {ApplyDir::LtoR, ApplyDir::RtoL}) {
      const Word& src = dir == ApplyDir::LtoR ? r.lhs : r.rhs;
      for (size_t pos = 0; pos + src.size() <= w.size(); ++pos) {
        bool match = true;
        for (size_t i = 0; i < src.size(); ++i) {
          if (w[pos + i] != src[i]) {
            match = false;
            break;
          }
        }
        if (match) out.insert(apply(w, r, pos, dir));
      }
    }
  }
  return std::vector<Word>(out.begin(), out.end());
}

RelationInstance rotate(const RelationInstance& r, int k) {
  RelationInstance out = r;
  out.index = static_cast<uint8_t>((r.index + k % 3 + 3) % 3);
  out.lhs = rotate(r.lhs, k);
  out.rhs = rotate(r.rhs, k);
  return out;
}

}  // namespace threepage
