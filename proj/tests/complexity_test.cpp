#include "hartman/complexity.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace hartman {
namespace {

const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;

SequenceSlice bits_slice(std::vector<double> v) {
  SequenceSlice s;
  s.values = std::move(v);
  s.bits = true;
  return s;
}

TEST(SubwordComplexity, AllZeros) {
  auto p = subword_complexity(bits_slice(std::vector<double>(100, 0.0)), 10);
  for (auto c : p.counts) EXPECT_EQ(c, 1u);
  EXPECT_EQ(p.sample_length, 100u);
}

TEST(SubwordComplexity, Parity) {
  std::vector<double> v(200);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i % 2);
  auto p = subword_complexity(bits_slice(v), 20);
  for (auto c : p.counts) EXPECT_EQ(c, 2u);
}

TEST(SubwordComplexity, SturmianIsNPlusOne) {
  auto s = sturmian(kGolden, 0, 100000);
  auto p = subword_complexity(s, 20);
  for (std::size_t i = 0; i < p.counts.size(); ++i) {
    EXPECT_EQ(p.counts[i], static_cast<std::uint64_t>(p.n_values[i] + 1));
    EXPECT_EQ(p.counts[i], testing::distinct_subwords_bruteforce(s.values, static_cast<std::size_t>(p.n_values[i])));
  }
}

TEST(SubwordComplexity, MatchesBruteForceOnRandomBits) {
  std::mt19937_64 rng(12);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> v(300 + rng() % 500);
    for (auto& b : v) b = coin(rng) ? 1.0 : 0.0;
    auto p = subword_complexity(bits_slice(v), 64);
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
      ASSERT_EQ(p.counts[i], testing::distinct_subwords_bruteforce(v, static_cast<std::size_t>(p.n_values[i])));
    }
  }
}

TEST(SubwordComplexity, RejectsShortOrNonBinary) {
  EXPECT_THROW(subword_complexity(bits_slice(std::vector<double>(39, 0.0)), 10), std::invalid_argument);
  EXPECT_THROW(subword_complexity(bits_slice(std::vector<double>(400, 0.0)), 65), std::invalid_argument);
  EXPECT_THROW(subword_complexity(bits_slice(std::vector<double>(400, 0.0)), 0), std::invalid_argument);
  EXPECT_THROW(subword_complexity(bits_slice(std::vector<double>(40, 0.5)), 10), std::invalid_argument);
}

// Nearly monotone, submultiplicative and bounded on random and structured samples.
TEST(SubwordComplexity, ProfileInvariants) {
  std::mt19937_64 rng(31);
  std::vector<SequenceSlice> samples{sturmian(kGolden, -500, 5000), sturmian(0.1, 0, 3000)};
  for (int t = 0; t < 10; ++t) {
    std::bernoulli_distribution coin(0.05 + 0.09 * t);
    std::vector<double> v(2000);
    for (auto& b : v) b = coin(rng) ? 1.0 : 0.0;
    samples.push_back(bits_slice(v));
  }
  for (const auto& s : samples) {
    auto p = subword_complexity(s, 24);
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
      const auto n = static_cast<std::uint64_t>(p.n_values[i]);
      EXPECT_GE(p.counts[i], 1u);
      EXPECT_LE(p.counts[i], std::min<std::uint64_t>(std::uint64_t{1} << n, p.sample_length - n + 1));
      // each block but possibly the final one extends to the right
      if (i > 0) EXPECT_GE(p.counts[i] + 1, p.counts[i - 1]);
      for (std::size_t j = 0; i + j + 1 < p.counts.size(); ++j) {
        EXPECT_LE(p.counts[i + j + 1], p.counts[i] * p.counts[j]);  // p(m+n) <= p(m) p(n)
      }
    }
  }
}

TEST(Entropy, Constant) {
  for (double e : entropy_profile(subword_complexity(bits_slice(std::vector<double>(80, 1.0)), 20))) {
    EXPECT_EQ(e, 0.0);
  }
}

TEST(Entropy, SturmianDecaysToZero) {
  auto h = entropy_profile(subword_complexity(sturmian(kGolden, 0, 100000), 20));
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    EXPECT_NEAR(h[i], std::log(n + 1) / n, 1e-15);
    if (i > 0) EXPECT_LT(h[i], h[i - 1]);
  }
}

TEST(Entropy, RandomBitsNearLog2) {
  std::mt19937_64 rng(2);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> v(100000);
  for (auto& b : v) b = coin(rng) ? 1.0 : 0.0;
  auto h = entropy_profile(subword_complexity(bits_slice(v), 8));
  for (double e : h) EXPECT_NEAR(e, std::log(2.0), 1e-12);
}

}  // namespace
}  // namespace hartman
