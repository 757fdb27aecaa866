#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace threepage {

// The 15-letter alphabet: kinds a,b,c,d,x with an index in Z3.
enum class Kind : uint8_t { A, B, C, D, X };

constexpr int kNumKinds = 5;
constexpr int kNumLetters = 15;

struct Letter {
  Kind kind;
  uint8_t index;  // 0, 1 or 2; all index arithmetic is mod 3

  constexpr uint8_t pack() const { return static_cast<uint8_t>(kind) * 3 + index; }
  static constexpr Letter unpack(uint8_t v) {
    return Letter{static_cast<Kind>(v / 3), static_cast<uint8_t>(v % 3)};
  }
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  friend bool operator<(const Letter& a, const Letter& b) { return a.pack() < b.pack(); }
};

char kind_char(Kind k);
Kind kind_from_char(char c);

// A word over the alphabet. The empty word is the semigroup identity 1.
// Words are immutable value types; all operations return fresh words.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word from_packed(const std::string& bytes);
  std::string packed() const;

  const std::vector<Letter>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](size_t i) const { return letters_[i]; }

  Word append(const Word& other) const;
  Word append(Letter l) const;
  Word prepend(Letter l) const;
  Word subword(size_t pos, size_t len) const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg), position(position) {}
  size_t position;
};

// Tokens are [abcdx][012], whitespace separated. The empty string is the empty word.
Word parse_word(const std::string& text);

// Inverse of parse_word up to whitespace normalization.
std::string format_word(const Word& w);

// Shift every letter index by +k mod 3. Corresponds to rotating the book around
// the binding axis; a bijection of order 3.
Word rotate(const Word& w, int k);
Letter rotate(Letter l, int k);

}  // namespace threepage
