#include "commlab/kernels.hpp"


#include <vector>

namespace commlab {

namespace {

std::vector<std::uint32_t> class_representatives(const PermGroup& group, const ClassSet& classes) {
  std::vector<std::uint32_t> reps;
  for (auto c = classes.find_first(); c != ClassSet::npos; c = classes.find_next(c))
    reps.push_back(group.class_members(static_cast<std::uint32_t>(c)).front());
  return reps;
}

}  // namespace

std::uint64_t commutator_classes_cost(const PermGroup& group, const ClassSet& a, const ClassSet& b) {
  std::uint64_t size_b = 0;
  for (auto c = b.find_first(); c != ClassSet::npos; c = b.find_next(c))
    size_b += group.class_members(static_cast<std::uint32_t>(c)).size();
  return static_cast<std::uint64_t>(a.count()) * size_b;
}

ClassSet commutator_classes(const PermGroup& group, const ClassSet& a, const ClassSet& b,
                            Execution exec) {
  const auto reps = class_representatives(group, a);
  const auto others = members(group.elements_of(b));
  const auto n_classes = group.class_count();
  std::vector<char> hit(n_classes, 0);
  if (reps.empty() || others.empty()) return group.empty_classes();

  std::vector<Permutation> rep_inv;
  for (auto u : reps) rep_inv.push_back(group.element(u).inverse());

  const auto n_others = static_cast<std::int64_t>(others.size());
  const bool parallel = exec == Execution::parallel && n_others * static_cast<std::int64_t>(reps.size()) > 4096;

#pragma omp parallel if (parallel)
  {
    std::vector<char> local(n_classes, 0);
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < n_others; ++k) {
      const Permutation& v = group.element(others[static_cast<std::size_t>(k)]);
      const Permutation v_inv = v.inverse();
      for (std::size_t r = 0; r < reps.size(); ++r) {
        const Permutation c = rep_inv[r] * v_inv * group.element(reps[r]) * v;
        local[group.class_of(group.index_of(c))] = 1;
      }
    }
#pragma omp critical
    for (std::size_t c = 0; c < n_classes; ++c) hit[c] |= local[c];
  }

  ClassSet out = group.empty_classes();
  for (std::size_t c = 0; c < n_classes; ++c)
    if (hit[c]) out.set(c);
  return out;
}

ElementSet commutator_values_reference(const PermGroup& group, const ElementSet& a,
                                       const ElementSet& b) {
  ElementSet out = group.empty_set();
  for (auto u = a.find_first(); u != ElementSet::npos; u = a.find_next(u))
    for (auto v = b.find_first(); v != ElementSet::npos; v = b.find_next(v))
      out.set(group.commutator(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)));
  return out;
}

}  // namespace commlab
