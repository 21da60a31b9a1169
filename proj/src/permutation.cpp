#include "commlab/permutation.hpp"

#include <cctype>
#include <stdexcept>

namespace commlab {

Permutation::Permutation(int degree) : degree_(static_cast<std::uint8_t>(degree)) {
  if (degree < 0 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree must be in 0.." + std::to_string(kMaxDegree));
  for (int i = 0; i < kMaxDegree; ++i) image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> hit(images.size(), false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int v = images[k];
    if (v < 1 || v > static_cast<int>(images.size()) || hit[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("images do not form a bijection of 1..d");
    hit[static_cast<std::size_t>(v - 1)] = true;
    p.image_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    while (pos < text.size() && text[pos] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("unexpected character in cycle notation");
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v < 1 || v > degree) throw std::invalid_argument("cycle point out of range");
      cycle.push_back(v);
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;
    // Cycles compose left to right, so later cycles act after earlier ones.
    std::vector<int> step(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) step[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      step[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    for (auto& img : images) img = step[static_cast<std::size_t>(img - 1)];
  }
  return from_images(images);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (image_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.degree_ != degree_) throw std::invalid_argument("permutation degrees differ");
  Permutation out(degree_);
  for (int i = 0; i < degree_; ++i)
    out.image_[static_cast<std::size_t>(i)] = other.image_[image_[static_cast<std::size_t>(i)]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree_);
  for (int i = 0; i < degree_; ++i)
    out.image_[image_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < kMaxDegree; ++i) k |= static_cast<std::uint64_t>(image_[static_cast<std::size_t>(i)]) << (4 * i);
  return k;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree_, false);
  for (int start = 0; start < degree_; ++start) {
    if (seen[static_cast<std::size_t>(start)] || image_[static_cast<std::size_t>(start)] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x + 1);
      x = image_[static_cast<std::size_t>(x)];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace commlab
