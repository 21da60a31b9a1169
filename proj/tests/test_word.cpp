#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "commlab/permutation.hpp"
#include "commlab/random.hpp"
#include "commlab/word.hpp"

using namespace commlab;

namespace {

// Stack-based free reduction over signed ints, independent of Word.
std::vector<int> reduce_oracle(const std::vector<int>& raw) {
  std::vector<int> out;
  for (int v : raw) {
    if (!out.empty() && out.back() == -v)
      out.pop_back();
    else
      out.push_back(v);
  }
  return out;
}

std::vector<int> signed_letters(const Word& w) {
  std::vector<int> out;
  for (Letter l : w.letters()) out.push_back(l.signed_value());
  return out;
}

// Evaluation in S_5 via x1 -> (1 2), x2 -> (1 2 3 4 5), x3 -> (2 4).
Permutation evaluate(const Word& w) {
  static const std::vector<Permutation> images{Permutation::from_cycles("(1 2)", 5),
                                               Permutation::from_cycles("(1 2 3 4 5)", 5),
                                               Permutation::from_cycles("(2 4)", 5)};
  Permutation p(5);
  for (Letter l : w.letters()) {
    const Permutation& g = images[static_cast<std::size_t>(l.index() - 1)];
    p = p * (l.sign() > 0 ? g : g.inverse());
  }
  return p;
}

}  // namespace

TEST(Word, ReducesAdjacentInverses) {
  EXPECT_TRUE(Word::from_signed({1, -1}).is_identity());
  EXPECT_EQ(Word::from_signed({1, 2, -2, 3}), Word::from_signed({1, 3}));
  EXPECT_EQ(Word::from_signed({1, 2, -2, -1, 2}).length(), 1u);
}

TEST(Word, CommutatorConvention) {
  const Word c = commutator(Word::generator(1), Word::generator(2));
  EXPECT_EQ(to_string(c), "x1^-1 x2^-1 x1 x2");
  EXPECT_TRUE(commutator(Word::generator(1), Word::generator(1)).is_identity());
}

TEST(Word, ConjugateIsRightAction) {
  const Word a = Word::generator(1), g = Word::generator(2);
  EXPECT_EQ(conjugate(a, g), Word::from_signed({-2, 1, 2}));
}

TEST(Word, PowerAndInverse) {
  const Word w = Word::from_signed({1, 2});
  EXPECT_EQ(power(w, 3).length(), 6u);
  EXPECT_EQ(power(w, -2), invert(power(w, 2)));
  EXPECT_TRUE(power(w, 0).is_identity());
  EXPECT_TRUE((w * invert(w)).is_identity());
}

TEST(Word, ParseRoundTrip) {
  const Word w = parse_word("x1 x2^-1 x3");
  EXPECT_EQ(w, Word::from_signed({1, -2, 3}));
  EXPECT_EQ(to_string(w), "x1 x2^-1 x3");
  EXPECT_TRUE(parse_word("").is_identity());
  EXPECT_TRUE(parse_word("x1 x1^-1").is_identity());
}

TEST(Word, ParseErrorsCarryPosition) {
  try {
    parse_word("x1 y2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_word("x0"), ParseError);
  EXPECT_THROW(parse_word("x1^2"), ParseError);
}

TEST(Word, SubstituteAndKill) {
  const Word w = Word::from_signed({1, 2, -1});
  const Word sub = substitute(w, [](int k) { return k == 2 ? Word::from_signed({1, 3}) : Word::generator(k); });
  EXPECT_EQ(sub, Word::from_signed({1, 1, 3, -1}));
  EXPECT_EQ(to_string(sub), "x1 x1 x3 x1^-1");
  EXPECT_TRUE(kill_letters(w, [](int k) { return k == 2; }).is_identity());
}

TEST(WordProperty, ReductionMatchesStackOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> raw;
    const int len = rng.between(0, 30);
    for (int k = 0; k < len; ++k) raw.push_back(rng.between(1, 3) * (rng.coin() ? 1 : -1));
    std::vector<Letter> letters;
    for (int v : raw) letters.push_back(Letter::from_signed(v));
    EXPECT_EQ(signed_letters(Word::reduce(letters)), reduce_oracle(raw));
  }
}

TEST(WordProperty, MultiplicationIsHomomorphismToS5) {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word a = random_reduced_word(rng, 3, 12), b = random_reduced_word(rng, 3, 12);
    EXPECT_EQ(evaluate(a * b), evaluate(a) * evaluate(b));
    EXPECT_EQ(evaluate(invert(a)), evaluate(a).inverse());
    EXPECT_EQ(evaluate(commutator(a, b)), commutator(evaluate(a), evaluate(b)));
  }
}

TEST(WordProperty, RandomWordsAreReducedAndBounded) {
  Rng rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word w = random_reduced_word(rng, 4, 9);
    EXPECT_LE(w.length(), 9u);
    EXPECT_LE(w.max_index(), 4);
    auto ls = w.letters();
    for (std::size_t k = 1; k < ls.size(); ++k) EXPECT_NE(ls[k], ls[k - 1].inverse());
  }
}

TEST(WordProperty, RandomWordsUniformOnBall) {
  // Rank 2, length <= 2: 1 + 4 + 12 = 17 reduced words, each with mass 1/17.
  Rng rng(14);
  std::map<Word, int> counts;
  const int draws = 170000;
  for (int k = 0; k < draws; ++k) ++counts[random_reduced_word(rng, 2, 2)];
  ASSERT_EQ(counts.size(), 17u);
  double chi2 = 0;
  const double expected = draws / 17.0;
  for (const auto& [w, c] : counts) chi2 += (c - expected) * (c - expected) / expected;
  EXPECT_LT(chi2, 39.25);  // 16 dof, p ~ 0.001
}

TEST(Rng, DeterministicPerSeed) {
  Rng a(5), b(5);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  Rng c(6);
  for (int k = 0; k < 1000; ++k) EXPECT_LT(c.below(7), 7u);
}
