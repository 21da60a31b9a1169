#include "commlab/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "commlab/random.hpp"

namespace commlab {

Letter::Letter(int index, int sign) : value_(index) {
  if (index < 1) throw std::invalid_argument("letter index must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  if (sign < 0) value_ = -index;
}

void Word::push_back(Letter letter) {
  if (!letters_.empty() && letters_.back() == letter.inverse())
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

void Word::append(const Word& other) {
  for (Letter l : other.letters_) push_back(l);
}

Word Word::reduce(std::span<const Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (Letter l : letters) w.push_back(l);
  return w;
}

Word Word::generator(int index, int sign) {
  Word w;
  w.letters_.push_back(Letter(index, sign));
  return w;
}

Word Word::from_signed(std::initializer_list<int> values) {
  return from_signed(std::span<const int>(values.begin(), values.size()));
}

Word Word::from_signed(std::span<const int> values) {
  Word w;
  for (int v : values) w.push_back(Letter::from_signed(v));
  return w;
}

int Word::max_index() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.index());
  return m;
}

Word multiply(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word invert(const Word& a) {
  Word out;
  auto ls = a.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word conjugate(const Word& a, const Word& by) {
  Word out = invert(by);
  out.append(a);
  out.append(by);
  return out;
}

Word commutator(const Word& a, const Word& b) {
  Word out = invert(a);
  out.append(invert(b));
  out.append(a);
  out.append(b);
  return out;
}

Word power(const Word& a, int exponent) {
  const Word base = exponent < 0 ? invert(a) : a;
  Word out;
  for (int i = 0; i < std::abs(exponent); ++i) out.append(base);
  return out;
}

Word substitute(const Word& w, const std::function<Word(int)>& image) {
  Word out;
  for (Letter l : w.letters()) {
    Word img = image(l.index());
    out.append(l.sign() > 0 ? img : invert(img));
  }
  return out;
}

Word kill_letters(const Word& w, const std::function<bool(int)>& killed) {
  Word out;
  for (Letter l : w.letters())
    if (!killed(l.index())) out.push_back(l);
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view token = text.substr(start, pos - start);
    if (token.size() < 2 || token[0] != 'x') throw ParseError("expected x<k> or x<k>^-1", start);
    int sign = 1;
    std::string_view digits = token.substr(1);
    if (digits.ends_with("^-1")) {
      sign = -1;
      digits.remove_suffix(3);
    }
    int index = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty())
      throw ParseError("malformed generator token '" + std::string(token) + "'", start);
    if (index < 1) throw ParseError("generator index must be >= 1", start);
    w.push_back(Letter(index, sign));
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (Letter l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.index());
    if (l.sign() < 0) out += "^-1";
  }
  return out;
}

Word random_reduced_word(Rng& rng, int rank, int max_length) {
  if (rank < 1 || max_length <= 0) return {};
  // Reduced words of length L: 1 for L = 0, 2r(2r-1)^(L-1) otherwise.
  const std::uint64_t alphabet = 2 * static_cast<std::uint64_t>(rank);
  std::vector<std::uint64_t> counts{1};
  std::uint64_t total = 1;
  std::uint64_t layer = alphabet;
  for (int len = 1; len <= max_length; ++len) {
    if (total > std::numeric_limits<std::uint64_t>::max() - layer)
      throw std::invalid_argument("random word ball too large to sample exactly");
    counts.push_back(layer);
    total += layer;
    if (len < max_length) {
      if (layer > std::numeric_limits<std::uint64_t>::max() / (alphabet - 1))
        throw std::invalid_argument("random word ball too large to sample exactly");
      layer *= alphabet - 1;
    }
  }
  std::uint64_t pick = rng.below(total);
  int length = 0;
  while (pick >= counts[static_cast<std::size_t>(length)]) {
    pick -= counts[static_cast<std::size_t>(length)];
    ++length;
  }
  auto letter_of = [](std::uint64_t code) {
    return Letter(static_cast<int>(code / 2) + 1, code % 2 == 0 ? 1 : -1);
  };
  auto code_of = [](Letter l) {
    return static_cast<std::uint64_t>(l.index() - 1) * 2 + (l.sign() > 0 ? 0 : 1);
  };
  std::vector<Letter> letters;
  for (int i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(letter_of(rng.below(alphabet)));
    } else {
      // 2r - 1 choices: every letter except the inverse of the previous one.
      const std::uint64_t forbidden = code_of(letters.back().inverse());
      std::uint64_t k = rng.below(alphabet - 1);
      letters.push_back(letter_of(k < forbidden ? k : k + 1));
    }
  }
  return Word::reduce(letters);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Letter l : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l.signed_value()));
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace commlab
