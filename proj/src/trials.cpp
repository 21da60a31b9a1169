#include "commlab/trials.hpp"

#include <chrono>

namespace commlab {

namespace {

constexpr std::uint64_t kTripleStream = 0x7472697065ULL;

double since_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::size_t> orders(const std::vector<NormalSubgroup>& subgroups) {
  std::vector<std::size_t> out;
  for (const auto& r : subgroups) out.push_back(r.order());
  return out;
}

}  // namespace

FiniteTrial run_finite_trial(std::uint64_t seed, const TrialOptions& options, Execution kernel_exec) {
  const auto start = std::chrono::steady_clock::now();
  const FiniteInstance inst = random_instance(seed, options.instance);
  FiniteTrial trial;
  trial.seed = seed;
  trial.degree = inst.group->degree();
  trial.group_order = inst.group->order();
  trial.n = static_cast<int>(inst.subgroups.size());
  trial.subgroup_orders = orders(inst.subgroups);
  const int cap = options.weight_cap > 0 ? options.weight_cap : 2 * trial.n;
  trial.fat_vs_symmetric = verify_fat_equals_symmetric(inst.subgroups, cap, options.budget, kernel_exec);
  trial.fix_first = verify_symmetric_fix_first(inst.subgroups, kernel_exec);
  trial.connectivity = scan_connectivity(inst.subgroups);
  trial.elapsed_ms = since_ms(start);
  return trial;
}

TripleTrial run_triple_trial(std::uint64_t seed, const InstanceOptions& options, Execution kernel_exec) {
  const auto start = std::chrono::steady_clock::now();
  InstanceOptions three = options;
  three.n = 3;
  const FiniteInstance inst = random_instance(seed, three);
  TripleTrial trial;
  trial.seed = seed;
  trial.degree = inst.group->degree();
  trial.group_order = inst.group->order();
  trial.subgroup_orders = orders(inst.subgroups);
  const auto& [a, b, c] = std::tie(inst.subgroups[0], inst.subgroups[1], inst.subgroups[2]);
  trial.distributes = verify_commutator_distributes(a, b, c, kernel_exec);
  trial.hall = verify_hall(a, b, c, kernel_exec);
  trial.elapsed_ms = since_ms(start);
  return trial;
}

std::vector<FiniteTrial> run_finite_trials(std::uint64_t base_seed, std::size_t count,
                                           const TrialOptions& options) {
  std::vector<FiniteTrial> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) if (options.exec == Execution::parallel)
  for (std::int64_t k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] =
        run_finite_trial(derive_seed(base_seed, static_cast<std::uint64_t>(k)), options);
  return out;
}

std::vector<TripleTrial> run_triple_trials(std::uint64_t base_seed, std::size_t count,
                                           const TrialOptions& options) {
  std::vector<TripleTrial> out(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) if (options.exec == Execution::parallel)
  for (std::int64_t k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = run_triple_trial(
        derive_seed(base_seed ^ kTripleStream, static_cast<std::uint64_t>(k)), options.instance);
  return out;
}

}  // namespace commlab
