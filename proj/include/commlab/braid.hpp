#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commlab/random.hpp"
#include "commlab/word.hpp"

namespace commlab {

/// Braid word on `strands` strands. Letter index i stands for sigma_i
/// (1 <= i < strands). The word is freely reduced; braid relations are not
/// applied.
class Braid {
 public:
  Braid(int strands, Word word);

  static Braid identity(int strands) { return Braid(strands, Word{}); }
  static Braid sigma(int i, int strands, int sign = 1);

  int strands() const { return strands_; }
  const Word& word() const { return word_; }
  std::size_t length() const { return word_.length(); }

  friend bool operator==(const Braid&, const Braid&) = default;

 private:
  int strands_;
  Word word_;
};

Braid operator*(const Braid& a, const Braid& b);
Braid inverse(const Braid& b);
/// by^-1 b by.
Braid conjugate(const Braid& b, const Braid& by);
/// a^-1 b^-1 a b, as words.
Braid commutator(const Braid& a, const Braid& b);

/// Tokens `s<i>` / `s<i>^-1` separated by whitespace.
Braid parse_braid(std::string_view text, int strands);
std::string render_braid(const Braid& b);

/// Automorphism of the free group on x_1..x_rank, stored as the images of
/// the basis.
class ArtinAutomorphism {
 public:
  static ArtinAutomorphism identity(int rank);
  ArtinAutomorphism(std::vector<Word> images);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  bool is_identity() const;
  Word apply(const Word& w) const;
  /// Apply this first, then `after`.
  ArtinAutomorphism then(const ArtinAutomorphism& after) const;

  friend bool operator==(const ArtinAutomorphism&, const ArtinAutomorphism&) = default;

 private:
  std::vector<Word> images_;
};

/// Artin action of a braid on F_strands. sigma_i sends x_i -> x_i x_{i+1} x_i^-1,
/// x_{i+1} -> x_i and fixes the other generators. Letters act left to right:
/// the automorphism of b1 b2 is that of b1 followed by that of b2.
ArtinAutomorphism artin_action(const Braid& b);

/// Strand permutation: entry p (0-based) is the starting position of the
/// strand that ends at position p.
std::vector<int> strand_permutation(const Braid& b);

bool is_pure(const Braid& b);
/// Decided through the Artin representation, which is faithful.
bool is_trivial(const Braid& b);

/// A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1, 1 <= i < j <= n.
Braid gen_A(int i, int j, int n);

struct A0Forms {
  /// (A_{j,j+1} ... A_{j,n})^-1 (A_{1,j} ... A_{j-1,j})^-1
  Braid product_form;
  /// (s_j ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_j)^-1 (s_{j-1} ... s_2 s_1^2 s_2 ... s_{j-1})^-1
  Braid sigma_form;
};

/// Both expressions of A_{0,j} in P_n, 1 <= j <= n.
A0Forms gen_A0(int j, int n);

/// t_i = s_i s_{i+1} ... s_{n-2} s_{n-1}^2 s_{n-2}^-1 ... s_i^-1, 1 <= i <= n-1.
Braid gen_t(int i, int n);

/// Removes the strand that starts at position j (1-based): every crossing
/// involving it is dropped and the remaining strands are renumbered in order.
Braid delete_strand(const Braid& b, int j);

/// Pure, and deleting any single strand leaves a trivial braid.
bool is_brunnian(const Braid& b);

/// Deterministic stream of left-normed commutators
/// [[r_sigma(1), r_sigma(2)], ..., r_sigma(n-1)] with r_k a conjugate of
/// t_{sigma(k)}^{+-1} by a random word of length <= conj_depth in the
/// A_{i,j}^{+-1}. Every element lies in the symmetric commutator subgroup of
/// the normal closures of t_1..t_{n-1} in P_n.
class BrunnianSampler {
 public:
  BrunnianSampler(int strands, int conj_depth, std::uint64_t seed);
  Braid next();

 private:
  Braid random_pure_word();

  int strands_;
  int conj_depth_;
  Rng rng_;
  std::vector<Braid> a_gens_;
};

std::vector<Braid> sample_brun_generators(int strands, int conj_depth, std::uint64_t seed,
                                          std::size_t count);

/// Header `# strands=<n> seed=<s>`, then one rendered braid per line.
void write_brunnian_corpus(std::ostream& out, int strands, std::uint64_t seed,
                           std::span<const Braid> braids);

}  // namespace commlab
