#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commlab/presentation.hpp"
#include "commlab/sampling.hpp"
#include "commlab/word.hpp"

namespace commlab {

/// Blocks of 1-based indices that partition 1..m.
class Partition {
 public:
  Partition(std::vector<std::vector<int>> blocks, int m);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  int m() const { return m_; }
  std::string to_string() const;  // "{1},{2,3}"

 private:
  std::vector<std::vector<int>> blocks_;
  int m_;
};

/// G = <x_1..x_m | x_1 ... x_m>, identified with the free group on
/// x_1..x_{m-1}; R_I is the normal closure of {x_i : i in I}.
class SpherePresentation {
 public:
  explicit SpherePresentation(int m);

  int m() const { return m_; }
  int free_rank() const { return m_ - 1; }
  const OneRelatorPresentation& presentation() const { return presentation_; }

  /// Rewrites a word over x_1..x_m into the free group on x_1..x_{m-1}.
  Word eliminate(const Word& raw) const;
  bool member_of_block(const Word& w, std::span<const int> block) const;
  bool in_intersection(const Word& w, const Partition& partition) const;
  /// One SubgroupSpec per block, generators already eliminated.
  std::vector<SubgroupSpec> block_subgroups(const Partition& partition) const;

 private:
  int m_;
  OneRelatorPresentation presentation_;
};

struct Pi2Report {
  std::uint64_t seed = 0;
  int conj_depth = 0;
  std::size_t elements_checked = 0;
  std::size_t elements_in_both = 0;
  std::size_t commutators_checked = 0;
  std::size_t commutators_trivial = 0;
  int quotient_rank = 0;  // 1 when every check held
  bool holds = false;
};

/// m = 2, partition {1},{2}: both blocks are all of G and their symmetric
/// commutator is trivial, leaving a quotient of rank 1.
Pi2Report pi2_check(std::uint64_t seed, std::size_t fuzz = 1000, std::size_t samples = 200,
                    int conj_depth = 4);

struct Pi3Certificate {
  std::uint64_t seed = 0;
  int conj_depth = 0;
  std::string partition;
  Word witness;
  bool witness_in_intersection = false;
  int witness_gamma_level = 0;
  bool witness_outside_gamma3 = false;
  std::size_t samples = 0;
  std::size_t samples_in_intersection = 0;
  std::size_t samples_in_gamma3 = 0;
  bool holds = false;
};

/// m = 3, partition {1},{2},{3}: [x_1, x_2] lies in the triple intersection
/// but not in gamma_3, while sampled symmetric-commutator generators lie in
/// gamma_3. Hence the witness survives in the quotient.
Pi3Certificate pi3_certificate(std::uint64_t seed, std::size_t samples = 500, int conj_depth = 4);

}  // namespace commlab
