#include <gtest/gtest.h>

#include "commlab/homotopy.hpp"
#include "commlab/magnus.hpp"
#include "commlab/random.hpp"

using namespace commlab;

namespace {

// Membership in <<x1 x2>> inside F(x1, x2): rewrite in the basis
// y1 = x1 x2, y2 = x2 (so x1 = y1 y2^-1) and delete y1.
bool in_closure_of_x1x2(const Word& w) {
  const Word rebased = substitute(w, [](int k) { return k == 1 ? Word::from_signed({1, -2}) : Word::generator(2); });
  return kill_letters(rebased, [](int k) { return k == 1; }).is_identity();
}

bool dies_killing(const Word& w, int k) {
  return kill_letters(w, [k](int i) { return i == k; }).is_identity();
}

}  // namespace

TEST(Partition, Validation) {
  EXPECT_NO_THROW(Partition({{1}, {2, 3}}, 3));
  EXPECT_THROW(Partition({{1}, {}}, 1), std::invalid_argument);
  EXPECT_THROW(Partition({{1, 2}, {2, 3}}, 3), std::invalid_argument);
  EXPECT_THROW(Partition({{1}, {3}}, 3), std::invalid_argument);
  EXPECT_THROW(Partition({{1}, {4}}, 3), std::invalid_argument);
  EXPECT_EQ(Partition({{1}, {2, 3}}, 3).to_string(), "{1},{2,3}");
}

TEST(Sphere, Elimination) {
  const SpherePresentation s(3);
  EXPECT_EQ(s.eliminate(Word::generator(3)), Word::from_signed({-2, -1}));
  EXPECT_TRUE(s.eliminate(Word::from_signed({1, 2, 3})).is_identity());
  EXPECT_THROW(s.eliminate(Word::generator(4)), std::invalid_argument);
  EXPECT_THROW(SpherePresentation(1), std::invalid_argument);
}

TEST(Sphere, MembershipExamples) {
  const SpherePresentation s(3);
  const std::vector<int> b1{1}, b2{2}, b3{3}, b12{1, 2};
  EXPECT_TRUE(s.member_of_block(Word::generator(1), b1));
  EXPECT_FALSE(s.member_of_block(Word::generator(1), b2));
  EXPECT_TRUE(s.member_of_block(Word::from_signed({1, 2}), b3));
  EXPECT_TRUE(s.member_of_block(Word::generator(3), b12));
  const Word c = commutator(Word::generator(1), Word::generator(2));
  EXPECT_TRUE(s.in_intersection(c, Partition({{1}, {2}, {3}}, 3)));
  EXPECT_FALSE(s.in_intersection(Word::generator(1), Partition({{1}, {2}, {3}}, 3)));
}

TEST(SphereProperty, MembershipMatchesRebaseOracle) {
  const SpherePresentation s(3);
  const std::vector<int> b1{1}, b2{2}, b3{3};
  Rng rng(51);
  std::size_t positives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    Word w = random_reduced_word(rng, 2, 10);
    // Bias towards members: conjugates of the block generators.
    if (trial % 3 == 0) w = conjugate(Word::from_signed({1, 2}), w);
    const bool r3 = in_closure_of_x1x2(w);
    positives += r3;
    EXPECT_EQ(s.member_of_block(w, b3), r3);
    EXPECT_EQ(s.member_of_block(w, b1), dies_killing(w, 1));
    EXPECT_EQ(s.member_of_block(w, b2), dies_killing(w, 2));
  }
  EXPECT_GT(positives, 900u);
}

TEST(SphereProperty, RawWordsAgreeWithEliminatedWords) {
  const SpherePresentation s(4);
  Rng rng(52);
  const std::vector<int> b{2, 4};
  for (int trial = 0; trial < 1000; ++trial) {
    const Word raw = random_reduced_word(rng, 4, 8);
    EXPECT_EQ(s.member_of_block(raw, b), s.member_of_block(s.eliminate(raw), b));
  }
}

TEST(Presentation, Builders) {
  EXPECT_EQ(sphere_presentation(3).render(sphere_presentation(3).relator()), "x1 x2 x3");
  const auto rp2 = projective_plane_presentation(2);
  EXPECT_EQ(rp2.render(rp2.relator()), "a1^-1 a1^-1 x1 x2");
  const auto torus = orientable_surface_presentation(1, 0, 2);
  EXPECT_EQ(torus.render(torus.relator()), "a1^-1 b1^-1 a1 b1 x2^-1 x1^-1");
  const auto klein = nonorientable_surface_presentation(2, 0, 1);
  EXPECT_EQ(klein.render(klein.relator()), "a1 a1 a2 a2 x1^-1");
  EXPECT_EQ(puncture_indices(torus, 2), (std::vector<int>{3, 4}));
  EXPECT_THROW(orientable_surface_presentation(0, 0, 2), std::invalid_argument);
  EXPECT_THROW(nonorientable_surface_presentation(1, 0, 2), std::invalid_argument);
}

TEST(Presentation, MembershipByElimination) {
  const auto rp2 = projective_plane_presentation(2);  // a1 = 1, x1 = 2, x2 = 3
  const std::vector<int> kill_x1{2};
  // Killing x1 leaves a1^-2 x2, so x2 = a1^2 and the quotient is free on a1.
  EXPECT_EQ(rp2.member_of_closure(Word::generator(2), kill_x1), Membership::member);
  EXPECT_EQ(rp2.member_of_closure(Word::from_signed({3, -1, -1}), kill_x1), Membership::member);
  EXPECT_EQ(rp2.member_of_closure(Word::generator(1), kill_x1), Membership::non_member);
}

TEST(Presentation, UndecidedWhenNothingEliminates) {
  // Torus with one puncture: killing x1 leaves [a1, b1], with no generator
  // occurring once.
  const auto torus = orientable_surface_presentation(1, 0, 1);
  const std::vector<int> kill_x1{3};
  EXPECT_EQ(torus.member_of_closure(Word::generator(1), kill_x1), Membership::undecided);
  EXPECT_EQ(torus.member_of_closure(Word::from_signed({3, -3}), kill_x1), Membership::member);
  EXPECT_EQ(to_string(Membership::undecided), "undecided-by-this-tool");
}

TEST(Homotopy, Pi2Check) {
  const Pi2Report r = pi2_check(3, 1000, 200, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.quotient_rank, 1);
  EXPECT_EQ(r.elements_checked, 1000u);
  EXPECT_EQ(r.elements_in_both, 1000u);
}

TEST(Homotopy, Pi3Certificate) {
  const Pi3Certificate c = pi3_certificate(3, 200, 4);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(to_string(c.witness), "x1^-1 x2^-1 x1 x2");
  EXPECT_TRUE(c.witness_in_intersection);
  EXPECT_EQ(c.witness_gamma_level, 2);
  EXPECT_EQ(c.samples_in_intersection, 200u);
  EXPECT_EQ(c.samples_in_gamma3, 200u);
}

TEST(HomotopyProperty, SymmetricSamplesInIntersectionForLargerSpheres) {
  for (int m : {3, 4, 5}) {
    const SpherePresentation s(m);
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= m; ++i) blocks.push_back({i});
    const Partition p(blocks, m);
    for (const Word& w : symmetric_generators(s.block_subgroups(p), 3, 8, 100)) {
      EXPECT_TRUE(s.in_intersection(w, p));
      EXPECT_TRUE(gamma_membership(w, m));
    }
  }
}
