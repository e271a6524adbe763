#include "hartman/cantor.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

namespace hartman {
namespace {

// Product formula evaluated straight from the definition, no residue reduction.
double cos_product(int n, std::int64_t k) {
  double p = 1.0;
  for (int j = 1; j <= n; ++j) p *= std::cos(2 * std::numbers::pi * static_cast<double>(k) / std::pow(3.0, j));
  return p;
}

TEST(FTilde, Examples) {
  for (std::int64_t k : {-4, 0, 1, 17}) EXPECT_EQ(f_tilde_n(0, k), 1.0);
  for (int n = 0; n <= 15; ++n) EXPECT_EQ(f_tilde_n(n, 0), 1.0);
  EXPECT_NEAR(f_tilde_n(1, 1), -0.5, 1e-15);
  EXPECT_NEAR(f_tilde_n(1, 1, true), 0.5, 1e-15);
  EXPECT_THROW(f_tilde_n(-1, 0), std::invalid_argument);
}

TEST(FTilde, MatchesDirectProduct) {
  for (int n = 1; n <= 10; ++n) {
    for (std::int64_t k = -500; k <= 500; ++k) EXPECT_NEAR(f_tilde_n(n, k), cos_product(n, k), 1e-12);
  }
}

TEST(Fn, PeriodMeanIsPowerOfHalf) {
  for (int n = 0; n <= 8; ++n) EXPECT_NEAR(period_mean(n), std::ldexp(1.0, -n), 1e-9) << n;
  // the n = 2 case by hand: 9 terms summing to 9/4
  double sum = 0.0;
  for (int k = 0; k < 9; ++k) sum += f_n(2, k);
  EXPECT_NEAR(sum, 2.25, 1e-14);
}

TEST(Fn, SelfSimilarityIsExact) {
  for (int n = 0; n <= 6; ++n) {
    for (std::int64_t k = -10000; k <= 10000; ++k) ASSERT_EQ(f_n(n + 1, 3 * k), f_n(n, k)) << n << " " << k;
  }
}

TEST(Fn, MonotoneAndBounded) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::int64_t> pick(-1000000, 1000000);
  for (int t = 0; t < 2000; ++t) {
    const auto k = pick(rng);
    for (int n = 0; n < 12; ++n) {
      const double v = f_n(n, k);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      EXPECT_LE(f_n(n + 1, k), v);
    }
  }
}

TEST(Fn, MinimalPeriod) {
  EXPECT_EQ(cantor_truncation(0).period, 1);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(cantor_truncation(n).period, pow3(n));
}

TEST(Measure, ConstructionNormalises) {
  DiscreteMeasure m({Atom{Rational(5, 4), 1.0}, Atom{Rational(-3, 4), 2.0}, Atom{Rational(1, 2), 0.5}});
  ASSERT_EQ(m.atoms().size(), 2u);
  EXPECT_EQ(m.atoms()[0].location, Rational(1, 4));
  EXPECT_EQ(m.atoms()[0].weight, std::complex<double>(3.0));
  EXPECT_EQ(m.atoms()[1].location, Rational(1, 2));
}

TEST(Convolve, Examples) {
  auto delta0 = DiscreteMeasure::dirac(Rational(0));
  DiscreteMeasure m({Atom{Rational(1, 5), {0.3, -1.0}}, Atom{Rational(2, 3), 2.0}});
  auto c = convolve(delta0, m);
  ASSERT_EQ(c.atoms().size(), m.atoms().size());
  for (std::size_t i = 0; i < c.atoms().size(); ++i) {
    EXPECT_EQ(c.atoms()[i].location, m.atoms()[i].location);
    EXPECT_EQ(c.atoms()[i].weight, m.atoms()[i].weight);
  }

  auto third = DiscreteMeasure::dirac(Rational(1, 3));
  auto sq = convolve(third, third);
  ASSERT_EQ(sq.atoms().size(), 1u);
  EXPECT_EQ(sq.atoms()[0].location, Rational(2, 3));

  auto nu1 = cantor_nu(1);
  ASSERT_EQ(nu1.atoms().size(), 2u);
  EXPECT_EQ(nu1.atoms()[0].location, Rational(1, 6));  // 1/2 - 1/3
  EXPECT_EQ(nu1.atoms()[1].location, Rational(5, 6));  // 1/2 + 1/3
  EXPECT_EQ(nu1.atoms()[0].weight, std::complex<double>(0.5));
  EXPECT_EQ(nu1.atoms()[1].weight, std::complex<double>(0.5));
}

TEST(Nu, MassAndAtomCount) {
  for (int n = 0; n <= 10; ++n) {
    auto nu = cantor_nu(n);
    EXPECT_EQ(nu.atoms().size(), std::size_t{1} << n);
    EXPECT_NEAR(std::abs(nu.total_weight() - 1.0), 0.0, 1e-14);
  }
}

TEST(FourierStieltjes, DiracAtZeroIsOne) {
  auto d = DiscreteMeasure::dirac(Rational(0));
  for (std::int64_t k : {-7, 0, 3, 1000}) EXPECT_EQ(fourier_stieltjes(d, k), std::complex<double>(1.0));
}

TEST(FourierStieltjes, NuMatchesProductWithSign) {
  for (int n = 0; n <= 10; ++n) {
    auto nu = cantor_nu(n);
    for (std::int64_t k = -1000; k <= 1000; k += 7) {
      const auto v = fourier_stieltjes(nu, k);
      const double expected = ((k % 2 == 0) ? 1.0 : -1.0) * cos_product(n, k);
      EXPECT_NEAR(v.real(), expected, 1e-12);
      EXPECT_NEAR(v.imag(), 0.0, 1e-12);
      EXPECT_NEAR(v.real(), f_tilde_n(n, k, true), 1e-12);
    }
  }
}

TEST(FourierStieltjes, BatchedAgreesWithSingle) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = -300; k <= 300; ++k) ks.push_back(k);
  auto nu = cantor_nu(6);
  auto batch = fourier_stieltjes(nu, ks);
  for (std::size_t i = 0; i < ks.size(); ++i) EXPECT_LT(std::abs(batch[i] - fourier_stieltjes(nu, ks[i])), 1e-13);

  // Denominator too large for a table: falls back to the direct sum.
  DiscreteMeasure wide({Atom{Rational(1, 1000003), 1.0}, Atom{Rational(5, 999983), {0.0, 1.0}}});
  auto wide_batch = fourier_stieltjes(wide, ks);
  for (std::size_t i = 0; i < ks.size(); ++i) EXPECT_EQ(wide_batch[i], fourier_stieltjes(wide, ks[i]));
}

TEST(FourierStieltjes, ConvolutionHomomorphismOnRandomMeasures) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> den(1, 500);
  std::normal_distribution<double> w(0.0, 1.0);
  auto random_measure = [&] {
    std::vector<Atom> atoms;
    for (int i = 0; i < 3; ++i) {
      const auto q = den(rng);
      atoms.push_back({Rational(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q)), q), {w(rng), w(rng)}});
    }
    return DiscreteMeasure(atoms);
  };
  for (int t = 0; t < 50; ++t) {
    auto a = random_measure();
    auto b = random_measure();
    auto ab = convolve(a, b);
    for (std::int64_t k = -200; k <= 200; ++k) {
      EXPECT_LT(std::abs(fourier_stieltjes(ab, k) - fourier_stieltjes(a, k) * fourier_stieltjes(b, k)), 1e-12);
    }
  }
}

TEST(TriadicRealization, AgreesWithFn) {
  for (int n = 1; n <= 7; ++n) {
    const auto spec = CompactificationSpec::triadic(n + 2);
    for (std::int64_t k = 0; k < pow3(n); ++k) {
      EXPECT_EQ(triadic_realization(n, spec, iota(spec, k)), f_n(n, k));
    }
  }
}

TEST(TriadicRealization, DependsOnlyOnResidueAndDecreases) {
  const int n = 5;
  const auto spec = CompactificationSpec::triadic(12);
  for (std::int64_t k = -400; k <= 400; ++k) {
    EXPECT_EQ(f_n(n, k), f_n(n, k + pow3(n)));
    EXPECT_NEAR(triadic_realization(n, spec, iota(spec, k)), f_n(n, k), 1e-14);
    const auto p = iota(spec, k);
    for (int m = 0; m < 11; ++m) EXPECT_LE(triadic_realization(m + 1, spec, p), triadic_realization(m, spec, p));
  }
}

TEST(TriadicRealization, RejectsShortPoints) {
  const auto spec = CompactificationSpec::triadic(3);
  EXPECT_THROW(triadic_realization(4, spec, iota(spec, 1)), ShapeMismatch);
  EXPECT_THROW(triadic_realization(1, CompactificationSpec::cyclic(3), iota(CompactificationSpec::cyclic(3), 1)),
               ShapeMismatch);
}

}  // namespace
}  // namespace hartman
