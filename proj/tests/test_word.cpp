#include <doctest.h>

#include "threepage/word.hpp"

using namespace threepage;

TEST_CASE("empty word is the identity") {
  Word w = parse_word("");
  CHECK(w.empty());
  CHECK(format_word(w) == "");
}

TEST_CASE("token mapping") {
  Word w = parse_word("b0 d0");
  REQUIRE(w.size() == 2);
  CHECK(w[0] == Letter{Kind::B, 0});
  CHECK(w[1] == Letter{Kind::D, 0});
  CHECK(format_word(Word({Letter{Kind::A, 1}, Letter{Kind::X, 1}})) == "a1 x1");
}

TEST_CASE("the Fig. 8 word parses to 25 letters") {
  // as printed in the source; parsing is independent of decodability
  Word w = parse_word(
      "a0 a1 b2 b0 b1 b2 b0 b1 d0 a1 x1 b1 x1 b1 c1 d1 b0 d1 d0 d2 d1 d0 d2 c1 c0");
  CHECK(w.size() == 25);
}

TEST_CASE("malformed tokens are rejected with position") {
  CHECK_THROWS_AS(parse_word("a0 e1"), ParseError);
  CHECK_THROWS_AS(parse_word("a3"), ParseError);
  CHECK_THROWS_AS(parse_word("ab"), ParseError);
  try {
    parse_word("a0 b1 q2");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
    CHECK(std::string(e.what()).find("q2") != std::string::npos);
  }
}

TEST_CASE("parse/format round trip") {
  const char* samples[] = {"", "a0", "a0 b1 c2 d0 x1", "x0 x1 x2 d2 d1 d0"};
  for (const char* s : samples) {
    Word w = parse_word(s);
    CHECK(parse_word(format_word(w)) == w);
    CHECK(format_word(w) == s);
  }
  // whitespace normalizes
  CHECK(format_word(parse_word("  a0\t b1 \n")) == "a0 b1");
}

TEST_CASE("rotate shifts indices mod 3") {
  Word w = parse_word("a0 x1");
  CHECK(rotate(w, 0) == w);
  CHECK(format_word(rotate(w, 1)) == "a1 x2");
  CHECK(format_word(rotate(w, 2)) == "a2 x0");
}

TEST_CASE("rotate is a bijection of order 3") {
  uint64_t seed = 42;
  auto rnd = [&seed]() {
    seed ^= seed >> 12;
    seed ^= seed << 25;
    seed ^= seed >> 27;
    return seed * 0x2545f4914f6cdd1dull;
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Letter> ls;
    size_t n = rnd() % 20;
    for (size_t i = 0; i < n; ++i) ls.push_back(Letter::unpack(rnd() % 15));
    Word w{std::move(ls)};
    CHECK(rotate(rotate(w, 1), 2) == w);
    CHECK(rotate(rotate(rotate(w, 1), 1), 1) == w);
    // kind multiset and length preserved
    Word r = rotate(w, 1);
    CHECK(r.size() == w.size());
    int kinds_before[5] = {0}, kinds_after[5] = {0};
    for (const Letter& l : w.letters()) ++kinds_before[static_cast<int>(l.kind)];
    for (const Letter& l : r.letters()) ++kinds_after[static_cast<int>(l.kind)];
    for (int k = 0; k < 5; ++k) CHECK(kinds_before[k] == kinds_after[k]);
  }
}
