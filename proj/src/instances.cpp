#include "commlab/instances.hpp"

#include <algorithm>
#include <stdexcept>

namespace commlab {

namespace {

Permutation random_block_permutation(Rng& rng, int degree, const std::vector<std::vector<int>>& blocks,
                                     bool swap_blocks) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::size_t> target(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) target[b] = b;
  if (swap_blocks) {
    std::vector<std::pair<std::size_t, std::size_t>> same;
    for (std::size_t a = 0; a < blocks.size(); ++a)
      for (std::size_t b = a + 1; b < blocks.size(); ++b)
        if (blocks[a].size() == blocks[b].size() && blocks[a].size() > 1) same.emplace_back(a, b);
    if (!same.empty()) {
      auto [a, b] = same[rng.below(same.size())];
      std::swap(target[a], target[b]);
    }
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& src = blocks[b];
    const auto& dst = blocks[target[b]];
    auto perm = rng.permutation(static_cast<int>(src.size()));
    for (std::size_t k = 0; k < src.size(); ++k)
      images[static_cast<std::size_t>(src[k])] = dst[static_cast<std::size_t>(perm[k])] + 1;
  }
  return Permutation::from_images(images);
}

}  // namespace

GroupPtr random_group(Rng& rng, const InstanceOptions& options) {
  if (options.max_degree < 2 || options.max_degree > Permutation::kMaxDegree)
    throw std::invalid_argument("max_degree must be in 2..16");
  for (int attempt = 0; attempt < 256; ++attempt) {
    // Later attempts shrink the degree so the search always terminates.
    const int max_degree = std::max(3, options.max_degree - attempt / 32);
    const int degree = rng.between(std::min(3, max_degree), max_degree);
    std::vector<std::vector<int>> blocks;
    auto points = rng.permutation(degree);
    for (std::size_t pos = 0; pos < points.size();) {
      const auto size = std::min<std::size_t>(static_cast<std::size_t>(rng.between(1, 5)), points.size() - pos);
      blocks.emplace_back(points.begin() + static_cast<std::ptrdiff_t>(pos),
                          points.begin() + static_cast<std::ptrdiff_t>(pos + size));
      pos += size;
    }
    const int n_gens = rng.between(2, 3);
    std::vector<Permutation> gens;
    for (int k = 0; k < n_gens; ++k)
      gens.push_back(random_block_permutation(rng, degree, blocks, rng.below(3) == 0));
    const bool abelian = std::all_of(gens.begin(), gens.end(), [&](const Permutation& a) {
      return std::all_of(gens.begin(), gens.end(), [&](const Permutation& b) { return a * b == b * a; });
    });
    if (abelian) continue;
    try {
      return PermGroup::closure(gens, degree, options.max_order);
    } catch (const CapExceeded&) {
    }
  }
  throw std::runtime_error("could not draw a group within the order cap");
}

NormalSubgroup random_normal_subgroup(Rng& rng, const GroupPtr& group) {
  // Prefer proper nontrivial subgroups; keep the last draw if none turns up.
  for (int attempt = 0;; ++attempt) {
    const int seeds = rng.between(1, 2);
    std::vector<Permutation> picks;
    for (int k = 0; k < seeds; ++k)
      picks.push_back(group->element(static_cast<std::uint32_t>(rng.below(group->order()))));
    NormalSubgroup r = normal_closure(group, picks);
    if ((r.order() > 1 && r.order() < group->order()) || attempt == 7) return r;
  }
}

FiniteInstance random_instance(std::uint64_t seed, const InstanceOptions& options) {
  Rng rng(seed);
  const int n = options.n > 0 ? options.n : rng.between(2, 3);
  GroupPtr group = random_group(rng, options);
  std::vector<NormalSubgroup> subgroups;
  for (int i = 0; i < n; ++i) subgroups.push_back(random_normal_subgroup(rng, group));
  return {seed, std::move(group), std::move(subgroups)};
}

}  // namespace commlab
