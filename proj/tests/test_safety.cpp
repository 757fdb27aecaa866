#include <doctest.h>

#include "threepage/selftest.hpp"

using namespace threepage;

TEST_CASE("structural relation safety passes on the real table") {
  SafetyReport rep = structural_safety();
  for (const SafetyIssue& i : rep.issues) {
    MESSAGE(i.where, ": ", i.detail);
  }
  CHECK(rep.ok());
  CHECK(rep.instances_checked == 96 + 9);
}

TEST_CASE("a corrupted table entry is detected and named") {
  auto table = local_picture_table();
  // flip the pass direction of b0's incoming end: its picture becomes an opener
  auto& entry = table[Letter{Kind::B, 0}.pack()];
  entry.ends[0].dir = EndDir::R;
  SafetyReport rep = structural_safety(table);
  CHECK(!rep.ok());
  bool names_instance = false;
  for (const SafetyIssue& i : rep.issues) {
    if (i.where.find("(1,") != std::string::npos) names_instance = true;
  }
  CHECK(names_instance);

  // moving b0's pass to the wrong page pair is also caught
  auto table2 = local_picture_table();
  auto& entry2 = table2[Letter{Kind::B, 0}.pack()];
  entry2.ends[0].page = 2;
  CHECK(!structural_safety(table2).ok());
}

TEST_CASE("context safety on a small sample") {
  SafetyReport rep = context_safety(4, 0xFEEDu);
  for (const SafetyIssue& i : rep.issues) {
    MESSAGE(i.where, ": ", i.detail);
  }
  CHECK(rep.ok());
  CHECK(rep.contexts_checked >= 4 * 105);
}

TEST_CASE("context generator produces decodable words") {
  ContextGen gen(7);
  int ok = 0;
  for (int t = 0; t < 40; ++t) {
    Word w = gen.closed_word(10, t % 2 == 0);
    if (w.empty()) continue;
    if (decode(w).ok()) ++ok;
  }
  CHECK(ok > 10);
}
