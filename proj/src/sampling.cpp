#include "commlab/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace commlab {

namespace {

int infer_rank(const std::vector<SubgroupSpec>& subgroups, int requested) {
  if (requested > 0) return requested;
  int rank = 0;
  for (const auto& s : subgroups)
    for (const auto& g : s.generators()) rank = std::max(rank, g.max_index());
  return std::max(rank, 1);
}

void require_subgroups(const std::vector<SubgroupSpec>& subgroups) {
  if (subgroups.empty()) throw std::invalid_argument("at least one subgroup is required");
}

}  // namespace

SubgroupSpec::SubgroupSpec(std::vector<Word> generators, std::string label)
    : generators_(std::move(generators)), label_(std::move(label)) {
  if (generators_.empty()) throw std::invalid_argument("subgroup needs at least one generator");
}

Word sample_closure_element(Rng& rng, const SubgroupSpec& subgroup, int rank, int conj_depth) {
  const auto& gens = subgroup.generators();
  Word g = gens[rng.below(gens.size())];
  if (rng.coin()) g = invert(g);
  return conjugate(g, random_reduced_word(rng, rank, conj_depth));
}

SymmetricSampler::SymmetricSampler(std::vector<SubgroupSpec> subgroups, SamplerOptions options,
                                   bool fix_first)
    : subgroups_(std::move(subgroups)),
      options_(options),
      fix_first_(fix_first),
      rank_(0),
      rng_(options.seed) {
  require_subgroups(subgroups_);
  if (options_.conj_depth < 0) throw std::invalid_argument("conj_depth must be >= 0");
  rank_ = infer_rank(subgroups_, options_.rank);
}

SymmetricSample SymmetricSampler::next() {
  const int n = static_cast<int>(subgroups_.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  if (fix_first_) {
    auto tail = rng_.permutation(n - 1);
    order[0] = 0;
    for (int i = 1; i < n; ++i) order[static_cast<std::size_t>(i)] = tail[static_cast<std::size_t>(i - 1)] + 1;
  } else {
    order = rng_.permutation(n);
  }
  std::vector<Word> args;
  args.reserve(order.size());
  for (int slot : order)
    args.push_back(sample_closure_element(rng_, subgroups_[static_cast<std::size_t>(slot)], rank_,
                                          options_.conj_depth));
  return {left_normed(args), std::move(order)};
}

std::vector<Word> symmetric_generators(const std::vector<SubgroupSpec>& subgroups, int conj_depth,
                                       std::uint64_t seed, std::size_t count) {
  SymmetricSampler sampler(subgroups, {conj_depth, seed, 0});
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next().word);
  return out;
}

std::vector<Word> symmetric_generators_fix1(const std::vector<SubgroupSpec>& subgroups,
                                            int conj_depth, std::uint64_t seed, std::size_t count) {
  SymmetricSampler sampler(subgroups, {conj_depth, seed, 0}, true);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next().word);
  return out;
}

bool covers_all_indices(std::span<const int> indices, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i : indices) {
    if (i < 1 || i > n) return false;
    seen[static_cast<std::size_t>(i)] = true;
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](bool b) { return b; });
}

Word evaluate_fat(const BracketArrangement& arr, std::span<const int> indices,
                  std::span<const Word> args, int n) {
  if (indices.size() != args.size())
    throw std::invalid_argument("one subgroup index is required per argument");
  if (!covers_all_indices(indices, n))
    throw std::invalid_argument("index assignment must cover every subgroup 1..n");
  return evaluate_bracket(arr, args);
}

FatSampler::FatSampler(std::vector<SubgroupSpec> subgroups, int max_weight, SamplerOptions options)
    : subgroups_(std::move(subgroups)),
      max_weight_(max_weight),
      options_(options),
      rank_(0),
      rng_(options.seed) {
  require_subgroups(subgroups_);
  if (max_weight_ < static_cast<int>(subgroups_.size()))
    throw std::invalid_argument("max_weight must be at least the number of subgroups");
  if (options_.conj_depth < 0) throw std::invalid_argument("conj_depth must be >= 0");
  rank_ = infer_rank(subgroups_, options_.rank);
}

FatSample FatSampler::next() {
  const int n = static_cast<int>(subgroups_.size());
  const int t = rng_.between(n, max_weight_);
  BracketArrangement arr = random_bracket(rng_, t);

  // Every index lands on a distinct random slot; the remaining slots are free.
  std::vector<int> indices(static_cast<std::size_t>(t), 0);
  auto slots = rng_.permutation(t);
  auto labels = rng_.permutation(n);
  for (int k = 0; k < n; ++k)
    indices[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)])] = labels[static_cast<std::size_t>(k)] + 1;
  for (auto& i : indices)
    if (i == 0) i = rng_.between(1, n);

  std::vector<Word> args;
  args.reserve(indices.size());
  for (int i : indices)
    args.push_back(sample_closure_element(rng_, subgroups_[static_cast<std::size_t>(i - 1)], rank_,
                                          options_.conj_depth));
  Word w = evaluate_fat(arr, indices, args, n);
  return {std::move(w), std::move(arr), std::move(indices)};
}

std::vector<Word> fat_generators(const std::vector<SubgroupSpec>& subgroups, int max_weight,
                                 int conj_depth, std::uint64_t seed, std::size_t count) {
  FatSampler sampler(subgroups, max_weight, {conj_depth, seed, 0});
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next().word);
  return out;
}

}  // namespace commlab
