#pragma once

#include <cstdint>
#include <vector>

#include "commlab/finite_verifier.hpp"
#include "commlab/random.hpp"

namespace commlab {

struct InstanceOptions {
  int max_degree = 10;
  std::size_t max_order = 2000;
  /// Number of normal subgroups; 0 draws n from {2, 3} per instance.
  int n = 0;
};

/// A random finite carrier group with n random normal subgroups.
struct FiniteInstance {
  std::uint64_t seed;
  GroupPtr group;
  std::vector<NormalSubgroup> subgroups;
};

/// Random permutation group of degree <= max_degree and order <= max_order.
///
/// Points are split into blocks of size 1..5; each of the 2-3 generators
/// permutes every block independently and, with some probability, swaps two
/// blocks of equal size. Abelian draws and draws whose closure passes
/// max_order are retried.
GroupPtr random_group(Rng& rng, const InstanceOptions& options);

/// Normal closure of one or two random elements, redrawn (up to 8 times)
/// while it is trivial or the whole group.
NormalSubgroup random_normal_subgroup(Rng& rng, const GroupPtr& group);

/// Deterministic in (seed, options).
FiniteInstance random_instance(std::uint64_t seed, const InstanceOptions& options);

}  // namespace commlab
