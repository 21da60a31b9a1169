#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "commlab/word.hpp"

namespace commlab {

using BigInt = boost::multiprecision::cpp_int;

/// Noncommutative monomial X_{i1} X_{i2} ... X_{id}; empty is the constant 1.
/// Indices are limited to 1..255 and degree to kMaxDegree.
class Monomial {
 public:
  static constexpr int kMaxDegree = 8;

  Monomial() = default;
  explicit Monomial(std::span<const int> indices);

  int degree() const { return degree_; }
  std::vector<int> indices() const;
  /// Concatenation; the caller guarantees the degree stays in range.
  Monomial operator*(const Monomial& other) const;

  /// Degree first, then lexicographic on indices.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint8_t degree_ = 0;
  std::uint64_t packed_ = 0;  // index of letter k in byte (7 - k)
};

/// Truncated Magnus series: terms of total degree <= cutoff with nonzero
/// integer coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cutoff);

  static TruncatedSeries one(int cutoff);
  /// 1 + X_k (sign +1) or 1 - X_k + X_k^2 - ... (sign -1).
  static TruncatedSeries letter(Letter l, int cutoff);

  int cutoff() const { return cutoff_; }
  const std::map<Monomial, BigInt>& terms() const { return terms_; }
  BigInt coefficient(const Monomial& m) const;
  void add(const Monomial& m, const BigInt& c);

  /// Smallest degree >= 1 carrying a nonzero coefficient, or cutoff + 1.
  int lowest_nonconstant_degree() const;

  TruncatedSeries operator*(const TruncatedSeries& other) const;
  TruncatedSeries operator-(const TruncatedSeries& other) const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// "1 + X1 X2 - X2 X1"; coefficients other than +-1 print as "3·X1".
  std::string to_string() const;

 private:
  int cutoff_;
  std::map<Monomial, BigInt> terms_;
};

TruncatedSeries expand(const Word& w, int cutoff);

/// w in gamma_k of the free group iff expand(w) - 1 has no terms of degree < k.
bool gamma_membership(const Word& w, int k);

/// Largest k <= max_k with w in gamma_k. The identity reports max_k.
int gamma_level(const Word& w, int max_k);

}  // namespace commlab
