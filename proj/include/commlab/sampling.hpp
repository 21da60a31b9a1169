#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commlab/bracket.hpp"
#include "commlab/random.hpp"
#include "commlab/word.hpp"

namespace commlab {

/// A normal subgroup of a free group, given as the normal closure of a finite
/// list of generators.
class SubgroupSpec {
 public:
  SubgroupSpec(std::vector<Word> generators, std::string label = {});

  const std::vector<Word>& generators() const { return generators_; }
  const std::string& label() const { return label_; }

 private:
  std::vector<Word> generators_;
  std::string label_;
};

struct SamplerOptions {
  int conj_depth = 0;
  std::uint64_t seed = 0;
  /// Rank of the ambient free group for random conjugators; 0 infers the
  /// largest generator index used by the subgroups.
  int rank = 0;
};

/// One emitted symmetric-commutator generator together with the slot order
/// (0-based subgroup indices, sigma(1)..sigma(n)) it was built from.
struct SymmetricSample {
  Word word;
  std::vector<int> order;
};

/// Deterministic stream of left-normed commutators
/// [[r_sigma(1), r_sigma(2)], ..., r_sigma(n)], each r_i a conjugate of
/// g^{+-1} for a sampled generator g of R_sigma(i).
class SymmetricSampler {
 public:
  /// With fix_first, sigma(1) = 1 and only the tail is permuted.
  SymmetricSampler(std::vector<SubgroupSpec> subgroups, SamplerOptions options,
                   bool fix_first = false);

  SymmetricSample next();

 private:
  std::vector<SubgroupSpec> subgroups_;
  SamplerOptions options_;
  bool fix_first_;
  int rank_;
  Rng rng_;
};

/// A sampled element of a normal closure: a conjugate of g^{+-1}.
Word sample_closure_element(Rng& rng, const SubgroupSpec& subgroup, int rank, int conj_depth);

std::vector<Word> symmetric_generators(const std::vector<SubgroupSpec>& subgroups, int conj_depth,
                                       std::uint64_t seed, std::size_t count);
std::vector<Word> symmetric_generators_fix1(const std::vector<SubgroupSpec>& subgroups,
                                            int conj_depth, std::uint64_t seed, std::size_t count);

/// True iff indices (1-based) cover every value in 1..n and stay in range.
bool covers_all_indices(std::span<const int> indices, int n);

/// beta^t(g_{i_1}, ..., g_{i_t}) after checking the index assignment is
/// surjective onto 1..n. args[s] is the element chosen for slot s.
Word evaluate_fat(const BracketArrangement& arr, std::span<const int> indices,
                  std::span<const Word> args, int n);

struct FatSample {
  Word word;
  BracketArrangement arrangement;
  std::vector<int> indices;  // 1-based subgroup index per slot
};

/// Deterministic stream of fat-commutator generators with weight in
/// [n, max_weight] and surjective index assignments.
class FatSampler {
 public:
  FatSampler(std::vector<SubgroupSpec> subgroups, int max_weight, SamplerOptions options);

  FatSample next();

 private:
  std::vector<SubgroupSpec> subgroups_;
  int max_weight_;
  SamplerOptions options_;
  int rank_;
  Rng rng_;
};

std::vector<Word> fat_generators(const std::vector<SubgroupSpec>& subgroups, int max_weight,
                                 int conj_depth, std::uint64_t seed, std::size_t count);

}  // namespace commlab
