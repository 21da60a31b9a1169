#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace commlab {

class Rng;

/// Raised by the word and braid text parsers. position() is the byte offset
/// of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A basis symbol x_k or its inverse. Stored as the signed integer +k / -k.
class Letter {
 public:
  Letter(int index, int sign);

  static Letter from_signed(std::int32_t value) {
    if (value == 0) throw std::invalid_argument("letter index must be >= 1");
    return Letter(value);
  }

  int index() const { return value_ < 0 ? -value_ : value_; }
  int sign() const { return value_ < 0 ? -1 : 1; }
  std::int32_t signed_value() const { return value_; }
  Letter inverse() const { return Letter(-value_); }

  friend bool operator==(Letter, Letter) = default;
  friend auto operator<=>(Letter, Letter) = default;

 private:
  explicit Letter(std::int32_t value) : value_(value) {}
  std::int32_t value_;
};

/// Freely reduced word in the free group on x_1, x_2, ... The empty word is
/// the identity. Every constructor reduces, so a Word is always reduced.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters);
  static Word generator(int index, int sign = 1);
  /// Convenience: {1, -2, 1} means x1 x2^-1 x1.
  static Word from_signed(std::initializer_list<int> values);
  static Word from_signed(std::span<const int> values);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  /// Largest generator index used, 0 for the identity.
  int max_index() const;

  /// Appends one letter, cancelling against the tail.
  void push_back(Letter letter);
  void append(const Word& other);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

Word multiply(const Word& a, const Word& b);
Word invert(const Word& a);
/// g^-1 a g.
Word conjugate(const Word& a, const Word& by);
/// a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);
Word power(const Word& a, int exponent);

inline Word operator*(const Word& a, const Word& b) { return multiply(a, b); }

/// Replaces every x_k by image(k) (and x_k^-1 by its inverse), then reduces.
Word substitute(const Word& w, const std::function<Word(int)>& image);

/// Deletes every letter whose index satisfies `killed`, then reduces.
Word kill_letters(const Word& w, const std::function<bool(int)>& killed);

/// Grammar: whitespace-separated tokens `x<k>` or `x<k>^-1`, k >= 1.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Uniformly random reduced word of length <= max_length over x_1..x_rank.
/// Every reduced word in that ball is equally likely.
Word random_reduced_word(Rng& rng, int rank, int max_length);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace commlab
