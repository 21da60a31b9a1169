#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace commlab {

/// Permutation of {1..d}, d <= kMaxDegree. Points are 0-based internally.
/// Products act on the right: (p * q)(x) = q(p(x)), i.e. apply p first.
class Permutation {
 public:
  static constexpr int kMaxDegree = 16;

  explicit Permutation(int degree = 0);
  /// images[k] is the image of point k + 1 (1-based values).
  static Permutation from_images(std::span<const int> images);
  /// Cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation from_cycles(std::string_view cycles, int degree);

  int degree() const { return degree_; }
  /// 0-based image of a 0-based point.
  int operator[](int point) const { return image_[static_cast<std::size_t>(point)]; }
  bool is_identity() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  /// Injective 64-bit encoding (4 bits per point).
  std::uint64_t key() const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t degree_;
  std::array<std::uint8_t, kMaxDegree> image_{};
};

/// a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace commlab
