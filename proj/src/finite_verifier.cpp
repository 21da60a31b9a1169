#include "commlab/finite_verifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>

namespace commlab {

namespace {

void require_common_parent(std::span<const NormalSubgroup> subgroups) {
  if (subgroups.empty()) throw std::invalid_argument("at least one subgroup is required");
  for (const auto& r : subgroups)
    if (r.parent() != subgroups.front().parent())
      throw std::invalid_argument("subgroups must share a parent group");
}

std::vector<NormalSubgroup> pick(std::span<const NormalSubgroup> subgroups, std::span<const int> indices) {
  std::vector<NormalSubgroup> out;
  for (int i : indices) {
    if (i < 1 || i > static_cast<int>(subgroups.size()))
      throw std::invalid_argument("subgroup index out of range");
    out.push_back(subgroups[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

}  // namespace

NormalSubgroup::NormalSubgroup(GroupPtr parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)), order_(members_.count()) {
  if (members_.size() != parent_->order())
    throw std::invalid_argument("element set size does not match the parent group");
  if (!members_.test(0)) throw std::invalid_argument("subgroup must contain the identity");
}

NormalSubgroup NormalSubgroup::trivial(GroupPtr parent) {
  ElementSet s = parent->empty_set();
  s.set(0);
  return NormalSubgroup(std::move(parent), std::move(s));
}

NormalSubgroup NormalSubgroup::whole(GroupPtr parent) {
  ElementSet s = parent->empty_set();
  s.set();
  return NormalSubgroup(std::move(parent), std::move(s));
}

bool is_normal_subgroup(const PermGroup& group, const ElementSet& set) {
  if (set.size() != group.order() || !set.test(0)) return false;
  const auto elems = members(set);
  for (auto a : elems) {
    if (!set.test(group.inverse(a))) return false;
    for (auto b : elems)
      if (!set.test(group.multiply(a, b))) return false;
    for (std::uint32_t g = 0; g < group.order(); ++g)
      if (!set.test(group.multiply(group.multiply(group.inverse(g), a), g))) return false;
  }
  return true;
}

NormalSubgroup generated_normal(const GroupPtr& group, const ClassSet& classes) {
  return NormalSubgroup(group, group->generate(group->elements_of(classes)));
}

NormalSubgroup normal_closure(const GroupPtr& group, std::span<const Permutation> seeds) {
  ClassSet classes = group->empty_classes();
  for (const auto& s : seeds) classes.set(group->class_of(group->index_of(s)));
  return generated_normal(group, classes);
}

NormalSubgroup commutator_subgroup(const NormalSubgroup& a, const NormalSubgroup& b, Execution exec) {
  if (a.parent() != b.parent()) throw std::invalid_argument("subgroups must share a parent group");
  return generated_normal(a.parent(), commutator_classes(a.group(), a.classes(), b.classes(), exec));
}

NormalSubgroup product(const NormalSubgroup& a, const NormalSubgroup& b) {
  if (a.parent() != b.parent()) throw std::invalid_argument("subgroups must share a parent group");
  return NormalSubgroup(a.parent(), a.group().generate(a.members() | b.members()));
}

NormalSubgroup product(std::span<const NormalSubgroup> factors) {
  require_common_parent(factors);
  ElementSet all = factors.front().members();
  for (const auto& f : factors) all |= f.members();
  return NormalSubgroup(factors.front().parent(), factors.front().group().generate(all));
}

NormalSubgroup intersection(const NormalSubgroup& a, const NormalSubgroup& b) {
  if (a.parent() != b.parent()) throw std::invalid_argument("subgroups must share a parent group");
  return NormalSubgroup(a.parent(), a.members() & b.members());
}

NormalSubgroup intersection(std::span<const NormalSubgroup> factors) {
  require_common_parent(factors);
  ElementSet all = factors.front().members();
  for (const auto& f : factors) all &= f.members();
  return NormalSubgroup(factors.front().parent(), std::move(all));
}

ClassSet left_normed_values(std::span<const NormalSubgroup> subgroups, std::span<const int> order,
                            Execution exec) {
  require_common_parent(subgroups);
  if (order.empty()) throw std::invalid_argument("empty ordering");
  const PermGroup& g = subgroups.front().group();
  ClassSet values = subgroups[static_cast<std::size_t>(order[0])].classes();
  for (std::size_t k = 1; k < order.size(); ++k)
    values = commutator_classes(g, values, subgroups[static_cast<std::size_t>(order[k])].classes(), exec);
  return values;
}

namespace {

NormalSubgroup symmetric_product(std::span<const NormalSubgroup> subgroups, bool fix_first,
                                 Execution exec) {
  require_common_parent(subgroups);
  const int n = static_cast<int>(subgroups.size());
  if (n == 1) return subgroups.front();
  const auto& parent = subgroups.front().parent();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  ClassSet all = parent->empty_classes();
  do {
    if (fix_first && order[0] != 0) continue;
    all |= left_normed_values(subgroups, order, exec);
  } while (std::next_permutation(order.begin(), order.end()));
  return generated_normal(parent, all);
}

}  // namespace

NormalSubgroup symmetric_commutator(std::span<const NormalSubgroup> subgroups, Execution exec) {
  return symmetric_product(subgroups, false, exec);
}

NormalSubgroup symmetric_commutator_fix_first(std::span<const NormalSubgroup> subgroups,
                                              Execution exec) {
  return symmetric_product(subgroups, true, exec);
}

std::uint64_t default_fat_budget() {
  if (const char* env = std::getenv("COMMLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

FatResult fat_commutator(std::span<const NormalSubgroup> subgroups, int weight_cap,
                         std::uint64_t budget, Execution exec) {
  require_common_parent(subgroups);
  const int n = static_cast<int>(subgroups.size());
  if (n > 16) throw std::invalid_argument("at most 16 subgroups are supported");
  if (weight_cap < n) throw std::invalid_argument("weight_cap must be at least the number of subgroups");
  const auto& parent = subgroups.front().parent();
  const PermGroup& g = *parent;
  const unsigned full = (1u << n) - 1;

  // values[t][S]: classes of all values of weight-t arrangements whose slot
  // indices cover exactly S. Left and right subtrees take independent
  // arguments, so a node's value set is the commutator set of its children's.
  std::vector<std::vector<ClassSet>> values(static_cast<std::size_t>(weight_cap) + 1,
                                            std::vector<ClassSet>(full + 1, g.empty_classes()));
  for (int i = 0; i < n; ++i) values[1][1u << i] = subgroups[static_cast<std::size_t>(i)].classes();

  std::map<std::pair<ClassSet, ClassSet>, ClassSet> memo;
  std::uint64_t evaluations = 0;
  auto commutator_set = [&](const ClassSet& a, const ClassSet& b) -> const ClassSet& {
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::uint64_t cost = commutator_classes_cost(g, a, b);
    if (evaluations + cost > budget)
      throw BudgetExceeded("fat enumeration exceeds budget of " + std::to_string(budget) + " evaluations");
    evaluations += cost;
    return memo.emplace(std::move(key), commutator_classes(g, a, b, exec)).first->second;
  };

  ClassSet generators = g.empty_classes();
  std::vector<std::size_t> order_by_weight;
  NormalSubgroup current = NormalSubgroup::trivial(parent);
  for (int t = 1; t <= weight_cap; ++t) {
    if (t >= 2) {
      for (unsigned s = 1; s <= full; ++s) {
        ClassSet acc = g.empty_classes();
        for (int t1 = 1; t1 < t; ++t1) {
          const int t2 = t - t1;
          for (unsigned s1 = s; s1 != 0; s1 = (s1 - 1) & s) {
            const ClassSet& left = values[static_cast<std::size_t>(t1)][s1];
            if (left.none()) continue;
            // s2 ranges over subsets of s that contain s \ s1.
            const unsigned rest = s & ~s1;
            for (unsigned extra = s1;; extra = (extra - 1) & s1) {
              const unsigned s2 = rest | extra;
              if (s2 != 0) {
                const ClassSet& right = values[static_cast<std::size_t>(t2)][s2];
                if (right.any()) acc |= commutator_set(left, right);
              }
              if (extra == 0) break;
            }
          }
        }
        values[static_cast<std::size_t>(t)][s] = std::move(acc);
      }
    }
    if (t >= n) {
      generators |= values[static_cast<std::size_t>(t)][full];
      current = generated_normal(parent, generators);
      order_by_weight.push_back(current.order());
    }
  }
  const bool stabilized =
      order_by_weight.size() >= 2 && order_by_weight.back() == order_by_weight[order_by_weight.size() - 2];
  return {current, stabilized, weight_cap, std::move(order_by_weight), evaluations};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

IdentityReport verify_fat_equals_symmetric(std::span<const NormalSubgroup> subgroups, int weight_cap,
                                           std::uint64_t budget, Execution exec) {
  IdentityReport report;
  report.check = "fat_equals_symmetric";
  const NormalSubgroup sym = symmetric_commutator(subgroups, exec);
  report.cardinalities.emplace_back("symmetric", sym.order());
  try {
    const FatResult fat = fat_commutator(subgroups, weight_cap, budget, exec);
    report.cardinalities.emplace_back("fat", fat.subgroup.order());
    report.stabilized = fat.stabilized;
    report.evaluations = fat.evaluations;
    if (!(fat.subgroup == sym))
      report.verdict = Verdict::fail;
    else
      report.verdict = fat.stabilized ? Verdict::pass : Verdict::inconclusive;
    if (!fat.stabilized) report.note = "fat subgroup still growing at weight_cap";
  } catch (const BudgetExceeded& e) {
    report.stabilized = false;
    report.verdict = Verdict::inconclusive;
    report.note = e.what();
  }
  return report;
}

IdentityReport verify_symmetric_fix_first(std::span<const NormalSubgroup> subgroups, Execution exec) {
  IdentityReport report;
  report.check = "symmetric_fix_first";
  const NormalSubgroup full = symmetric_commutator(subgroups, exec);
  const NormalSubgroup restricted = symmetric_commutator_fix_first(subgroups, exec);
  report.cardinalities = {{"symmetric", full.order()}, {"fix_first", restricted.order()}};
  report.verdict = full == restricted ? Verdict::pass : Verdict::fail;
  return report;
}

IdentityReport verify_commutator_distributes(const NormalSubgroup& a, const NormalSubgroup& b,
                                             const NormalSubgroup& c, Execution exec) {
  IdentityReport report;
  report.check = "commutator_distributes";
  const NormalSubgroup lhs = commutator_subgroup(product(a, b), c, exec);
  const NormalSubgroup rhs = product(commutator_subgroup(a, c, exec), commutator_subgroup(b, c, exec));
  report.cardinalities = {{"[AB,C]", lhs.order()}, {"[A,C][B,C]", rhs.order()}};
  report.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  return report;
}

IdentityReport verify_hall(const NormalSubgroup& a, const NormalSubgroup& b, const NormalSubgroup& c,
                           Execution exec) {
  IdentityReport report;
  report.check = "hall_three_subgroup";
  const NormalSubgroup x = commutator_subgroup(a, commutator_subgroup(b, c, exec), exec);
  const NormalSubgroup y = commutator_subgroup(commutator_subgroup(a, b, exec), c, exec);
  const NormalSubgroup z = commutator_subgroup(commutator_subgroup(a, c, exec), b, exec);
  const bool ok = x.is_subgroup_of(product(y, z)) && y.is_subgroup_of(product(x, z)) &&
                  z.is_subgroup_of(product(x, y));
  report.cardinalities = {{"[A,[B,C]]", x.order()}, {"[[A,B],C]", y.order()}, {"[[A,C],B]", z.order()}};
  report.verdict = ok ? Verdict::pass : Verdict::fail;
  return report;
}

ConnectivityReport verify_connectivity(std::span<const NormalSubgroup> subgroups,
                                       std::span<const int> i_set, std::span<const int> j_set) {
  require_common_parent(subgroups);
  if (i_set.size() < 2 || j_set.empty())
    throw std::invalid_argument("connectivity needs |I| >= 2 and |J| >= 1");
  const auto is = pick(subgroups, i_set);
  const auto js = pick(subgroups, j_set);
  const NormalSubgroup prod_j = product(js);
  const NormalSubgroup lhs = product(intersection(is), prod_j);
  std::vector<NormalSubgroup> widened;
  for (const auto& r : is) widened.push_back(product(r, prod_j));
  const NormalSubgroup rhs = intersection(widened);
  return {std::vector<int>(i_set.begin(), i_set.end()), std::vector<int>(j_set.begin(), j_set.end()),
          lhs.order(), rhs.order(), lhs == rhs};
}

ConnectivityScan scan_connectivity(std::span<const NormalSubgroup> subgroups) {
  require_common_parent(subgroups);
  const int m = static_cast<int>(subgroups.size());
  ConnectivityScan scan;
  auto to_indices = [](unsigned mask) {
    std::vector<int> out;
    for (int k = 0; mask >> k; ++k)
      if (mask >> k & 1u) out.push_back(k + 1);
    return out;
  };
  for (unsigned i_mask = 1; i_mask < (1u << m); ++i_mask) {
    if (std::popcount(i_mask) < 2) continue;
    for (unsigned j_mask = 1; j_mask < (1u << m); ++j_mask) {
      const auto r = verify_connectivity(subgroups, to_indices(i_mask), to_indices(j_mask));
      ++scan.checked;
      if (r.holds) ++scan.held;
    }
  }
  scan.connected = m <= 2 || scan.held == scan.checked;
  return scan;
}

}  // namespace commlab
