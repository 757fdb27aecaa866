#include "threepage/page_table.hpp"

namespace threepage {

namespace {

LocalPicture make_entry(Kind k, int i) {
  const uint8_t p = static_cast<uint8_t>(i % 3);
  const uint8_t q = static_cast<uint8_t>((i + 1) % 3);
  LocalPicture lp;
  switch (k) {
    case Kind::A:
      lp.ends = {{p, EndDir::R}, {q, EndDir::R}};
      lp.branches = {{0, 1}};
      break;
    case Kind::B:
      lp.ends = {{q, EndDir::L}, {p, EndDir::R}};
      lp.branches = {{0, 1}};
      break;
    case Kind::C:
      lp.ends = {{p, EndDir::L}, {q, EndDir::L}};
      lp.branches = {{0, 1}};
      break;
    case Kind::D:
      lp.ends = {{p, EndDir::L}, {q, EndDir::R}};
      lp.branches = {{0, 1}};
      break;
    case Kind::X:
      lp.ends = {{p, EndDir::L}, {p, EndDir::R}, {q, EndDir::L}, {q, EndDir::R}};
      lp.branches = {{0, 3}, {2, 1}};
      lp.singular = true;
      break;
  }
  return lp;
}

std::array<LocalPicture, kNumLetters> build_table() {
  std::array<LocalPicture, kNumLetters> t;
  for (int k = 0; k < kNumKinds; ++k) {
    for (int i = 0; i < 3; ++i) {
      t[k * 3 + i] = make_entry(static_cast<Kind>(k), i);
    }
  }
  return t;
}

}  // namespace

namespace {
const std::array<LocalPicture, kNumLetters>* g_override = nullptr;
}

namespace detail {
void set_local_picture_override(const std::array<LocalPicture, kNumLetters>* table) {
  g_override = table;
}
}  // namespace detail

const std::array<LocalPicture, kNumLetters>& local_picture_table() {
  static const std::array<LocalPicture, kNumLetters> table = build_table();
  return g_override ? *g_override : table;
}

const LocalPicture& local_picture(Letter l) { return local_picture_table()[l.pack()]; }

}  // namespace threepage
