#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "commlab/bracket.hpp"
#include "commlab/finite_verifier.hpp"
#include "commlab/instances.hpp"
#include "commlab/kernels.hpp"
#include "commlab/trials.hpp"

using namespace commlab;

namespace {

GroupPtr s4() {
  return PermGroup::closure({Permutation::from_cycles("(1 2)", 4), Permutation::from_cycles("(1 2 3 4)", 4)}, 4);
}

NormalSubgroup closure_of(const GroupPtr& g, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> seeds;
  for (const char* c : cycles) seeds.push_back(Permutation::from_cycles(c, g->degree()));
  return normal_closure(g, seeds);
}

// Subgroup generated by a set of permutations, by plain closure.
std::set<std::uint64_t> generated_keys(const std::vector<Permutation>& gens, int degree) {
  std::vector<Permutation> nontrivial;
  for (const auto& p : gens)
    if (!p.is_identity()) nontrivial.push_back(p);
  std::set<std::uint64_t> keys{Permutation(degree).key()};
  if (nontrivial.empty()) return keys;
  const GroupPtr g = PermGroup::closure(nontrivial, degree);
  for (const auto& p : g->elements()) keys.insert(p.key());
  return keys;
}

std::set<std::uint64_t> keys_of(const NormalSubgroup& r) {
  std::set<std::uint64_t> keys;
  for (auto i : members(r.members())) keys.insert(r.group().element(i).key());
  return keys;
}

std::vector<Permutation> elements_of(const NormalSubgroup& r) {
  std::vector<Permutation> out;
  for (auto i : members(r.members())) out.push_back(r.group().element(i));
  return out;
}

// Every bracket value over every surjective index assignment and every
// element tuple, for weights n..cap; returns the generated subgroup.
std::set<std::uint64_t> fat_by_tuples(const std::vector<NormalSubgroup>& rs, int cap) {
  const int n = static_cast<int>(rs.size());
  std::vector<std::vector<Permutation>> elems;
  for (const auto& r : rs) elems.push_back(elements_of(r));
  std::set<std::uint64_t> seen;
  std::vector<Permutation> values;
  auto comm = [](const Permutation& a, const Permutation& b) { return commutator(a, b); };
  for (int t = n; t <= cap; ++t) {
    const auto arrangements = enumerate_brackets(t);
    std::vector<int> idx(static_cast<std::size_t>(t), 1);
    while (true) {
      std::vector<int> present(static_cast<std::size_t>(n) + 1, 0);
      for (int i : idx) present[static_cast<std::size_t>(i)] = 1;
      if (std::count(present.begin() + 1, present.end(), 1) == n) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(t), 0);
        while (true) {
          std::vector<Permutation> args;
          for (int s = 0; s < t; ++s)
            args.push_back(elems[static_cast<std::size_t>(idx[static_cast<std::size_t>(s)] - 1)][pick[static_cast<std::size_t>(s)]]);
          for (const auto& arr : arrangements) {
            const Permutation v = evaluate_bracket_with(arr, std::span<const Permutation>(args), comm);
            if (seen.insert(v.key()).second) values.push_back(v);
          }
          int s = 0;
          for (; s < t; ++s) {
            auto& p = pick[static_cast<std::size_t>(s)];
            if (++p < elems[static_cast<std::size_t>(idx[static_cast<std::size_t>(s)] - 1)].size()) break;
            p = 0;
          }
          if (s == t) break;
        }
      }
      int s = 0;
      for (; s < t; ++s) {
        if (++idx[static_cast<std::size_t>(s)] <= n) break;
        idx[static_cast<std::size_t>(s)] = 1;
      }
      if (s == t) break;
    }
  }
  return generated_keys(values, rs.front().group().degree());
}

std::set<std::uint64_t> commutator_by_pairs(const NormalSubgroup& a, const NormalSubgroup& b) {
  std::set<std::uint64_t> seen;
  std::vector<Permutation> values;
  for (const auto& x : elements_of(a))
    for (const auto& y : elements_of(b)) {
      const Permutation c = commutator(x, y);
      if (seen.insert(c.key()).second) values.push_back(c);
    }
  return generated_keys(values, a.group().degree());
}

}  // namespace

TEST(Permutation, CyclesAndRightAction) {
  const auto a = Permutation::from_cycles("(1 2)", 3), b = Permutation::from_cycles("(2 3)", 3);
  // (a*b)(x) = b(a(x)): 1 -> 2 -> 3.
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_EQ((a * b).to_cycle_string(), "(1 3 2)");
  EXPECT_EQ(Permutation(3).to_cycle_string(), "()");
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
}

TEST(PermGroup, ClosureOrders) {
  EXPECT_EQ(PermGroup::closure({Permutation::from_cycles("(1 2 3)", 3)}, 3)->order(), 3u);
  EXPECT_EQ(s4()->order(), 24u);
  EXPECT_EQ(PermGroup::closure({Permutation::from_cycles("(1 2 3)", 4), Permutation::from_cycles("(2 3 4)", 4)}, 4)->order(), 12u);
  EXPECT_EQ(s4()->class_count(), 5u);
  EXPECT_THROW(PermGroup::closure({Permutation::from_cycles("(1 2)", 8), Permutation::from_cycles("(1 2 3 4 5 6 7 8)", 8)}, 8, 1000),
               CapExceeded);
}

TEST(PermGroup, ClassesPartitionTheGroup) {
  const auto g = s4();
  std::size_t total = 0;
  for (std::uint32_t c = 0; c < g->class_count(); ++c) {
    total += g->class_members(c).size();
    for (auto x : g->class_members(c)) EXPECT_EQ(g->class_of(x), c);
  }
  EXPECT_EQ(total, g->order());
}

TEST(FiniteVerifier, KnownCommutatorsInS4) {
  const auto g = s4();
  const auto whole = NormalSubgroup::whole(g);
  const auto a4 = closure_of(g, {"(1 2 3)"});
  const auto v4 = closure_of(g, {"(1 2)(3 4)"});
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(commutator_subgroup(whole, whole), a4);
  EXPECT_EQ(commutator_subgroup(a4, a4), v4);
  EXPECT_EQ(commutator_subgroup(v4, whole), v4);
  EXPECT_EQ(commutator_subgroup(v4, v4).order(), 1u);
  EXPECT_TRUE(is_normal_subgroup(*g, v4.members()));
}

TEST(FiniteVerifier, ProductAndIntersection) {
  const auto g = s4();
  const auto a4 = closure_of(g, {"(1 2 3)"});
  const auto v4 = closure_of(g, {"(1 2)(3 4)"});
  EXPECT_EQ(product(a4, v4), a4);
  EXPECT_EQ(intersection(a4, v4), v4);
  EXPECT_EQ(product(v4, NormalSubgroup::whole(g)).order(), 24u);
}

TEST(FiniteVerifier, ConnectivityRequiresIndexSets) {
  const auto g = s4();
  const std::vector<NormalSubgroup> rs{closure_of(g, {"(1 2 3)"}), closure_of(g, {"(1 2)(3 4)"})};
  const std::vector<int> one{1}, both{1, 2};
  EXPECT_THROW(verify_connectivity(rs, one, both), std::invalid_argument);
  EXPECT_TRUE(verify_connectivity(rs, both, one).holds);
}

TEST(FiniteVerifier, FatEqualsSymmetricOnS4) {
  const auto g = s4();
  const std::vector<NormalSubgroup> rs{closure_of(g, {"(1 2 3)"}), NormalSubgroup::whole(g)};
  const auto report = verify_fat_equals_symmetric(rs, 4);
  EXPECT_EQ(report.verdict, Verdict::pass);
  EXPECT_TRUE(report.stabilized);
}

TEST(FiniteVerifier, BudgetGuardReportsInconclusive) {
  const auto g = s4();
  const std::vector<NormalSubgroup> rs{NormalSubgroup::whole(g), NormalSubgroup::whole(g)};
  EXPECT_THROW(fat_commutator(rs, 4, 10), BudgetExceeded);
  EXPECT_EQ(verify_fat_equals_symmetric(rs, 4, 10).verdict, Verdict::inconclusive);
}

TEST(FiniteVerifierOracle, FatMatchesTupleEnumeration) {
  const auto g = s4();
  const auto whole = NormalSubgroup::whole(g);
  const auto a4 = closure_of(g, {"(1 2 3)"});
  const auto v4 = closure_of(g, {"(1 2)(3 4)"});
  const std::vector<std::vector<NormalSubgroup>> cases{{a4, v4}, {v4, a4}, {a4, a4}, {whole, v4}, {v4, v4, a4}};
  for (const auto& rs : cases) {
    const int cap = rs.size() == 2 ? 4 : 3;
    EXPECT_EQ(keys_of(fat_commutator(rs, cap).subgroup), fat_by_tuples(rs, cap));
  }
}

TEST(FiniteVerifierOracle, FatMatchesTupleEnumerationOnRandomInstances) {
  InstanceOptions opts;
  opts.max_degree = 5;
  opts.max_order = 24;
  opts.n = 2;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto inst = random_instance(seed, opts);
    EXPECT_EQ(keys_of(fat_commutator(inst.subgroups, 3).subgroup), fat_by_tuples(inst.subgroups, 3))
        << "seed " << seed;
  }
}

TEST(FiniteVerifierOracle, CommutatorSubgroupMatchesAllPairs) {
  InstanceOptions opts;
  opts.n = 2;
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const auto inst = random_instance(seed, opts);
    const auto& [a, b] = std::tie(inst.subgroups[0], inst.subgroups[1]);
    EXPECT_EQ(keys_of(commutator_subgroup(a, b, Execution::serial)), commutator_by_pairs(a, b)) << "seed " << seed;
  }
}

TEST(Kernels, ClassKernelMatchesReference) {
  InstanceOptions opts;
  opts.n = 2;
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    const auto inst = random_instance(seed, opts);
    const PermGroup& g = *inst.group;
    const auto& a = inst.subgroups[0];
    const auto& b = inst.subgroups[1];
    const ElementSet reference = commutator_values_reference(g, a.members(), b.members());
    const ClassSet serial = commutator_classes(g, a.classes(), b.classes(), Execution::serial);
    const ClassSet parallel = commutator_classes(g, a.classes(), b.classes(), Execution::parallel);
    EXPECT_EQ(g.elements_of(serial), reference) << "seed " << seed;
    EXPECT_EQ(serial, parallel);
  }
}

TEST(Instances, DeterministicAndNormal) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = random_instance(seed, {});
    const auto b = random_instance(seed, {});
    ASSERT_EQ(a.group->elements(), b.group->elements());
    ASSERT_EQ(a.subgroups.size(), b.subgroups.size());
    EXPECT_LE(a.group->order(), 2000u);
    EXPECT_LE(a.group->degree(), 10);
    for (std::size_t k = 0; k < a.subgroups.size(); ++k) {
      EXPECT_EQ(a.subgroups[k].members(), b.subgroups[k].members());
      EXPECT_TRUE(is_normal_subgroup(*a.group, a.subgroups[k].members()));
    }
  }
}

TEST(FiniteProperty, IdentitiesHoldOnRandomInstances) {
  TrialOptions opts;
  for (const auto& t : run_finite_trials(77, 40, opts)) {
    EXPECT_EQ(t.fat_vs_symmetric.verdict, Verdict::pass) << "seed " << t.seed;
    EXPECT_EQ(t.fix_first.verdict, Verdict::pass) << "seed " << t.seed;
  }
  for (const auto& t : run_triple_trials(77, 60, opts)) {
    EXPECT_EQ(t.distributes.verdict, Verdict::pass) << "seed " << t.seed;
    EXPECT_EQ(t.hall.verdict, Verdict::pass) << "seed " << t.seed;
  }
}

TEST(FiniteProperty, SerialAndParallelFanOutAgree) {
  TrialOptions par, ser;
  ser.exec = Execution::serial;
  const auto a = run_finite_trials(5, 10, par), b = run_finite_trials(5, 10, ser);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].seed, b[k].seed);
    EXPECT_EQ(a[k].fat_vs_symmetric.cardinalities, b[k].fat_vs_symmetric.cardinalities);
  }
}
