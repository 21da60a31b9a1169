#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "commlab/sampling.hpp"

using namespace commlab;

namespace {

// Deletes letters with the given index and freely reduces, by hand.
bool dies_when_killing(const Word& w, int index) {
  std::vector<int> stack;
  for (Letter l : w.letters()) {
    if (l.index() == index) continue;
    const int v = l.signed_value();
    if (!stack.empty() && stack.back() == -v)
      stack.pop_back();
    else
      stack.push_back(v);
  }
  return stack.empty();
}

std::vector<SubgroupSpec> basis_subgroups(int n) {
  std::vector<SubgroupSpec> out;
  for (int i = 1; i <= n; ++i) out.emplace_back(std::vector<Word>{Word::generator(i)}, "R" + std::to_string(i));
  return out;
}

}  // namespace

TEST(Sampling, RejectsEmptyGeneratorList) {
  EXPECT_THROW(SubgroupSpec(std::vector<Word>{}), std::invalid_argument);
}

TEST(Sampling, CoversAllIndices) {
  const std::vector<int> ok{1, 3, 2, 1}, gap{1, 1, 3}, out_of_range{1, 2, 4};
  EXPECT_TRUE(covers_all_indices(ok, 3));
  EXPECT_FALSE(covers_all_indices(gap, 3));
  EXPECT_FALSE(covers_all_indices(out_of_range, 3));
}

TEST(Sampling, EvaluateFatRequiresSurjection) {
  const auto arr = enumerate_brackets(3)[0];
  const std::vector<Word> args{Word::generator(1), Word::generator(2), Word::generator(1)};
  const std::vector<int> good{1, 2, 1}, bad{1, 1, 1};
  EXPECT_EQ(evaluate_fat(arr, good, args, 2), evaluate_bracket(arr, args));
  EXPECT_THROW(evaluate_fat(arr, bad, args, 2), std::invalid_argument);
}

TEST(Sampling, FatSamplerRejectsSmallWeight) {
  EXPECT_THROW(FatSampler(basis_subgroups(3), 2, SamplerOptions{}), std::invalid_argument);
}

TEST(Sampling, SymmetricOrdersArePermutations) {
  SymmetricSampler s(basis_subgroups(4), SamplerOptions{2, 9, 0});
  std::set<std::vector<int>> seen;
  for (int k = 0; k < 500; ++k) {
    auto sample = s.next();
    auto sorted = sample.order;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3}));
    seen.insert(sample.order);
  }
  EXPECT_EQ(seen.size(), 24u);
}

TEST(Sampling, FixFirstKeepsFirstSlot) {
  SymmetricSampler s(basis_subgroups(4), SamplerOptions{2, 9, 0}, true);
  std::set<std::vector<int>> seen;
  for (int k = 0; k < 300; ++k) {
    auto sample = s.next();
    EXPECT_EQ(sample.order.front(), 0);
    seen.insert(sample.order);
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Sampling, DeterministicPerSeed) {
  const auto subs = basis_subgroups(3);
  EXPECT_EQ(symmetric_generators(subs, 3, 42, 50), symmetric_generators(subs, 3, 42, 50));
  EXPECT_NE(symmetric_generators(subs, 3, 42, 50), symmetric_generators(subs, 3, 43, 50));
  EXPECT_EQ(fat_generators(subs, 5, 3, 42, 50), fat_generators(subs, 5, 3, 42, 50));
}

TEST(SamplingProperty, SymmetricSamplesLieInEveryClosure) {
  // R_i = <<x_i>> in F_4 is the kernel of deleting x_i; every sample must die
  // under each deletion.
  const auto subs = basis_subgroups(4);
  for (const Word& w : symmetric_generators(subs, 4, 7, 400))
    for (int i = 1; i <= 4; ++i) EXPECT_TRUE(dies_when_killing(w, i));
  for (const Word& w : symmetric_generators_fix1(subs, 4, 7, 400))
    for (int i = 1; i <= 4; ++i) EXPECT_TRUE(dies_when_killing(w, i));
}

TEST(SamplingProperty, FatSamplesAreSurjectiveAndLieInEveryClosure) {
  const auto subs = basis_subgroups(3);
  FatSampler s(subs, 6, SamplerOptions{3, 5, 0});
  for (int k = 0; k < 400; ++k) {
    const FatSample f = s.next();
    EXPECT_GE(f.arrangement.weight(), 3);
    EXPECT_LE(f.arrangement.weight(), 6);
    EXPECT_EQ(f.indices.size(), static_cast<std::size_t>(f.arrangement.weight()));
    EXPECT_TRUE(covers_all_indices(f.indices, 3));
    for (int i = 1; i <= 3; ++i) EXPECT_TRUE(dies_when_killing(f.word, i));
  }
}

TEST(SamplingProperty, ClosureElementsAreConjugatesOfGenerators) {
  Rng rng(3);
  const SubgroupSpec r({Word::from_signed({1, 2})});
  for (int k = 0; k < 300; ++k) {
    const Word w = sample_closure_element(rng, r, 3, 4);
    // Abelianised exponent of x1 and x2 is +-1 each and x3 cancels.
    int e1 = 0, e2 = 0, e3 = 0;
    for (Letter l : w.letters()) (l.index() == 1 ? e1 : l.index() == 2 ? e2 : e3) += l.sign();
    EXPECT_EQ(std::abs(e1), 1);
    EXPECT_EQ(e1, e2);
    EXPECT_EQ(e3, 0);
  }
}
