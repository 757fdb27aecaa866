#include "threepage/word.hpp"

#include <sstream>

namespace threepage {

char kind_char(Kind k) {
  switch (k) {
    case Kind::A: return 'a';
    case Kind::B: return 'b';
    case Kind::C: return 'c';
    case Kind::D: return 'd';
    case Kind::X: return 'x';
  }
  return '?';
}

Kind kind_from_char(char c) {
  switch (c) {
    case 'a': return Kind::A;
    case 'b': return Kind::B;
    case 'c': return Kind::C;
    case 'd': return Kind::D;
    case 'x': return Kind::X;
  }
  throw ParseError(std::string("unknown letter kind '") + c + "'", 0);
}

Word Word::from_packed(const std::string& bytes) {
  std::vector<Letter> ls;
  ls.reserve(bytes.size());
  for (char b : bytes) ls.push_back(Letter::unpack(static_cast<uint8_t>(b)));
  return Word(std::move(ls));
}

std::string Word::packed() const {
  std::string out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back(static_cast<char>(l.pack()));
  return out;
}

Word Word::append(const Word& other) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(ls));
}

Word Word::append(Letter l) const {
  std::vector<Letter> ls = letters_;
  ls.push_back(l);
  return Word(std::move(ls));
}

Word Word::prepend(Letter l) const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size() + 1);
  ls.push_back(l);
  ls.insert(ls.end(), letters_.begin(), letters_.end());
  return Word(std::move(ls));
}

Word Word::subword(size_t pos, size_t len) const {
  std::vector<Letter> ls(letters_.begin() + pos, letters_.begin() + pos + len);
  return Word(std::move(ls));
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Word parse_word(const std::string& text) {
  std::vector<Letter> letters;
  size_t i = 0;
  size_t token_no = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string tok = text.substr(i, j - i);
    ++token_no;
    if (tok.size() != 2 || std::string("abcdx").find(tok[0]) == std::string::npos ||
        tok[1] < '0' || tok[1] > '2') {
      throw ParseError("malformed token \"" + tok + "\" at position " +
                           std::to_string(token_no),
                       token_no);
    }
    letters.push_back(Letter{kind_from_char(tok[0]), static_cast<uint8_t>(tok[1] - '0')});
    i = j;
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  out.reserve(w.size() * 3);
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out.push_back(kind_char(w[i].kind));
    out.push_back(static_cast<char>('0' + w[i].index));
  }
  return out;
}

Letter rotate(Letter l, int k) {
  int idx = (l.index + k) % 3;
  if (idx < 0) idx += 3;
  return Letter{l.kind, static_cast<uint8_t>(idx)};
}

Word rotate(const Word& w, int k) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (const Letter& l : w.letters()) ls.push_back(rotate(l, k));
  return Word(std::move(ls));
}

}  // namespace threepage
