#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "thetagw/combinatorics.hpp"
#include "thetagw/degeneration.hpp"
#include "thetagw/invariants.hpp"

using thetagw::Parity;
using thetagw::Partition;
using thetagw::Rational;

namespace {

// Each insertion lands on one of the two degree-one sheets; the sheets are
// interchangeable, so the assignment sum factors as prod (b + b).
Rational split_oracle(const std::vector<int>& alphas) {
  Rational out(1);
  for (int a : alphas) out *= Rational(2) * thetagw::degree1_block(a);
  return out;
}

std::vector<int> random_alphas(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 5);
  std::uniform_int_distribution<int> val(0, 4);
  std::vector<int> out(len(rng));
  for (int& a : out) a = val(rng);
  return out;
}

}  // namespace

TEST(SplitChannel, Examples) {
  EXPECT_EQ(thetagw::relative_split_channel(std::vector<int>{1}), Rational(-1, 6));
  EXPECT_EQ(thetagw::relative_split_channel(std::vector<int>{}), Rational(1));
  EXPECT_EQ(thetagw::relative_split_channel(std::vector<int>{1, 1}), Rational(1, 36));
  EXPECT_EQ(thetagw::relative_split_channel(std::vector<int>{0}), Rational(2));
  EXPECT_THROW(thetagw::relative_split_channel(std::vector<int>(25, 0)), std::invalid_argument);
}

TEST(SplitChannel, MatchesProductOracle) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto alphas = random_alphas(rng);
    EXPECT_EQ(thetagw::relative_split_channel(alphas), split_oracle(alphas));
  }
}

TEST(SplitChannel, SymmetricAndMultiplicativeInUnitInsertions) {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 200; ++round) {
    auto alphas = random_alphas(rng);
    const Rational base = thetagw::relative_split_channel(alphas);
    auto shuffled = alphas;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(thetagw::relative_split_channel(shuffled), base);
    alphas.push_back(0);
    EXPECT_EQ(thetagw::relative_split_channel(alphas), Rational(2) * base);
  }
}

TEST(TangentChannel, Examples) {
  EXPECT_EQ(thetagw::relative_tangent_channel(std::vector<int>{1}), Rational(-1, 8));
  EXPECT_EQ(thetagw::relative_tangent_channel(std::vector<int>{}), Rational(0));
  EXPECT_EQ(thetagw::relative_tangent_channel(std::vector<int>{0}), Rational(0));
}

TEST(Gluing, ChannelsAtTauOne) {
  const auto channels = thetagw::degree2_channels(3, Parity::odd, std::vector<int>{1});
  ASSERT_EQ(channels.size(), 2u);
  EXPECT_EQ(channels[0].eta, Partition({1, 1}));
  EXPECT_EQ(channels[0].coefficient, Rational(1, 2));
  EXPECT_EQ(channels[0].cap_value, Rational(-8));
  EXPECT_EQ(channels[0].contribution(), std::optional<Rational>(Rational(1, 2) * Rational(-8) * Rational(-1, 6)));
  EXPECT_EQ(channels[1].eta, Partition({2}));
  EXPECT_EQ(channels[1].coefficient, Rational(2));
  EXPECT_EQ(thetagw::glued_degree2(3, Parity::odd, std::vector<int>{1}), Rational(8, 3));
}

TEST(Gluing, ExhaustiveGrid) {
  std::vector<std::vector<int>> multisets = {{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<int> cur(len, 0);
    std::function<void(int, int, int)> rec = [&](int pos, int lo, int left) {
      if (pos == len) {
        multisets.push_back(cur);
        return;
      }
      for (int v = lo; v <= left; ++v) {
        cur[pos] = v;
        rec(pos + 1, v, left - v);
      }
    };
    rec(0, 0, 6);
  }
  for (int h = 0; h <= 10; ++h) {
    for (Parity p : {Parity::even, Parity::odd}) {
      for (const auto& alphas : multisets) {
        EXPECT_TRUE(thetagw::check_degree2_gluing(h, p, alphas)) << h;
        EXPECT_EQ(thetagw::glued_degree2(h, p, alphas), thetagw::degree2({2, h, p, alphas}));
      }
    }
  }
}

TEST(Gluing, NegativeGenusRejected) {
  EXPECT_THROW(thetagw::glued_degree2(-1, Parity::even, std::vector<int>{}), std::invalid_argument);
}

TEST(ChiConstraint, Examples) {
  EXPECT_EQ(thetagw::chi_constraint(1, 1, Partition({1, 1})), 0);
  for (long c1 = -4; c1 <= 2; ++c1) {
    for (long c2 = -4; c2 <= 2; ++c2) EXPECT_EQ(thetagw::chi_constraint(c1, c2, Partition({2})), c1 + c2 - 1);
  }
}

TEST(GluingSplits, Enumeration) {
  const auto splits = thetagw::enumerate_gluing_splits(2, -4, -3, 2);
  ASSERT_EQ(splits.size(), 12u);
  for (const auto& s : splits) {
    EXPECT_EQ(s.eta.size(), 2);
    EXPECT_EQ(thetagw::chi_constraint(s.chi1, s.chi2, s.eta), -4);
  }
  EXPECT_EQ(splits.front().eta, Partition({1, 1}));
  EXPECT_EQ(splits.front().chi1, -3);
  EXPECT_EQ(splits.front().chi2, 1);
  EXPECT_EQ(splits.back().eta, Partition({2}));
  EXPECT_EQ(splits.back().chi1, 2);
  EXPECT_EQ(splits.back().chi2, -5);
  EXPECT_TRUE(thetagw::enumerate_gluing_splits(2, 0, 3, 1).empty());
}
