#pragma once

#include <cstdint>
#include <vector>

#include "commlab/finite_verifier.hpp"
#include "commlab/instances.hpp"

namespace commlab {

struct TrialOptions {
  InstanceOptions instance;
  /// 0 means 2n.
  int weight_cap = 0;
  std::uint64_t budget = default_fat_budget();
  /// parallel fans trials out across threads; kernels inside a trial run serially.
  Execution exec = Execution::parallel;
};

struct FiniteTrial {
  std::uint64_t seed = 0;
  int degree = 0;
  std::size_t group_order = 0;
  int n = 0;
  std::vector<std::size_t> subgroup_orders;
  IdentityReport fat_vs_symmetric;
  IdentityReport fix_first;
  ConnectivityScan connectivity;
  double elapsed_ms = 0;

  bool pass() const {
    return fat_vs_symmetric.verdict == Verdict::pass && fix_first.verdict == Verdict::pass;
  }
};

struct TripleTrial {
  std::uint64_t seed = 0;
  int degree = 0;
  std::size_t group_order = 0;
  std::vector<std::size_t> subgroup_orders;
  IdentityReport distributes;
  IdentityReport hall;
  double elapsed_ms = 0;

  bool pass() const { return distributes.verdict == Verdict::pass && hall.verdict == Verdict::pass; }
};

FiniteTrial run_finite_trial(std::uint64_t seed, const TrialOptions& options,
                             Execution kernel_exec = Execution::serial);
TripleTrial run_triple_trial(std::uint64_t seed, const InstanceOptions& options,
                             Execution kernel_exec = Execution::serial);

/// Trial k uses derive_seed(base_seed, k); results are in trial order
/// regardless of scheduling.
std::vector<FiniteTrial> run_finite_trials(std::uint64_t base_seed, std::size_t count,
                                           const TrialOptions& options);
/// Triples draw from a seed stream separate from run_finite_trials.
std::vector<TripleTrial> run_triple_trials(std::uint64_t base_seed, std::size_t count,
                                           const TrialOptions& options);

}  // namespace commlab
