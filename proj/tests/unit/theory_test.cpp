#include <gtest/gtest.h>

#include <cmath>

#include "dof/errors.hpp"
#include "dof/theory.hpp"

namespace dof::theory {
namespace {

TEST(ThresholdGamma, Examples) {
  EXPECT_DOUBLE_EQ(threshold_gamma(2, 0.0, 0.3), 1.0);
  EXPECT_NEAR(threshold_gamma(2, 1.0, 0.5), 0.606530659712633, 1e-12);
  for (double alpha : {0.1, 1.0, 2.5, 3.1}) EXPECT_NEAR(threshold_gamma(3, 2.0, alpha), 0.367879441171442, 1e-12);
  EXPECT_EQ(threshold_gamma(2, kInfinity, 0.5), 0.0);
  EXPECT_EQ(threshold_gamma(3, kInfinity, 1.0), 0.0);
}

TEST(ThresholdGamma, ValidityRange) {
  EXPECT_THROW(threshold_gamma(2, 1.0, 1.0), DomainError);
  EXPECT_THROW(threshold_gamma(3, 1.0, 3.2), DomainError);
  EXPECT_THROW(threshold_gamma(3, 1.0, kAlphaSatUpper3), DomainError);
  EXPECT_THROW(threshold_gamma(4, 1.0, 0.5), DomainError);
  EXPECT_THROW(threshold_gamma(2, 1.0, -0.1), DomainError);
  EXPECT_NO_THROW(threshold_gamma(3, 1.0, 3.14));
}

TEST(ThresholdBeta, Examples) {
  EXPECT_NEAR(threshold_beta(2, 1.0, 0.5), 0.778800783071405, 1e-12);
  EXPECT_EQ(threshold_beta(3, 5.0, 0.0), 1.0);
  EXPECT_EQ(threshold_beta(3, kInfinity, 0.0), 1.0);
  EXPECT_EQ(threshold_beta(2, kInfinity, 0.5), 0.0);
}

// threshold_beta equals threshold_gamma at gamma = beta alpha^{1/k}.
TEST(ThresholdBeta, ConsistentWithGamma) {
  for (unsigned k : {2u, 3u}) {
    const double amax = k == 2 ? 0.999 : 3.14;
    for (int i = 0; i < 32; ++i) {
      for (int j = 0; j < 32; ++j) {
        const double alpha = amax * (i + 1) / 32.0;
        const double beta = 4.0 * j / 31.0;
        const double viaGamma = threshold_gamma(k, beta * std::pow(alpha, 1.0 / k), alpha);
        const double direct = threshold_beta(k, beta, alpha);
        EXPECT_NEAR(direct, viaGamma, 1e-12 * std::max(1e-300, std::fabs(direct)) + 1e-300);
      }
    }
  }
}

TEST(MixedLimit, Examples) {
  for (double beta : {0.0, 0.5, 1.0, 2.0}) {
    EXPECT_NEAR(mixed_limit(2, 0.0, beta), std::exp(-beta * beta / 4), 1e-15);
  }
  EXPECT_NEAR(mixed_limit(3, 3.0, 2.0), 0.367879441171442, 1e-12);
  EXPECT_NEAR(mixed_limit(3, 0.2, 2.0), 0.367879441171442, 1e-12);
  EXPECT_EQ(mixed_limit(2, 0.7, 0.0), 1.0);
  EXPECT_NEAR(mixed_limit(2, 0.5, 1.0), std::exp(-0.5), 1e-15);
  EXPECT_THROW(mixed_limit(2, 1.0, 1.0), DomainError);
}

TEST(ExchangeRate, Examples) {
  EXPECT_DOUBLE_EQ(exchange_rate(0.3, 1.7, 0.3), 1.7);
  EXPECT_NEAR(exchange_rate(0.5, 1.0, 0.0), 1.414213562373095, 1e-12);
  EXPECT_THROW(exchange_rate(1.0, 1.0, 0.5), DomainError);
}

// Equal mixed limits at (alpha, beta) and (alpha', beta').
TEST(ExchangeRate, PreservesMixedLimit) {
  for (double a : {0.0, 0.2, 0.6}) {
    for (double a2 : {0.1, 0.5, 0.9}) {
      const double b2 = exchange_rate(a, 1.3, a2);
      EXPECT_NEAR(mixed_limit(2, a, 1.3), mixed_limit(2, a2, b2), 1e-12);
    }
  }
}

TEST(DegreesOfFreedom, Examples) {
  EXPECT_DOUBLE_EQ(degrees_of_freedom(2, 1e4, 100), 1000.0);
  EXPECT_NEAR(degrees_of_freedom(3, 1e6, 1e6), 1e4, 1e-6);
  const double n = 1e6;
  EXPECT_NEAR(degrees_of_freedom(2, n, std::log(n)), n / std::sqrt(std::log(n)), 1e-6);
  EXPECT_THROW(degrees_of_freedom(2, 10, 0), DomainError);
}

TEST(Exact1Sat, Examples) {
  EXPECT_EQ(exact_1sat_prob_rational(7, 0), Rational(1));
  EXPECT_EQ(exact_1sat_prob_rational(1, 2), Rational(1, 2));
  EXPECT_EQ(exact_1sat_prob_rational(2, 2), Rational(3, 4));
  EXPECT_DOUBLE_EQ(exact_1sat_prob(2, 2), 0.75);
  EXPECT_DOUBLE_EQ(exact_1sat_prob(5, 0), 1.0);
  EXPECT_THROW(exact_1sat_prob_rational(3, kExact1SatMaxClauses + 1), DomainError);
  EXPECT_THROW(exact_1sat_prob(0, 1), DomainError);
}

// Direct count over literal sequences; independent of the Stirling form.
Rational brute_1sat(unsigned n, unsigned f) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < f; ++i) total *= 2 * n;
  std::uint64_t good = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<int> seen(n, 0);
    bool ok = true;
    std::uint64_t c = code;
    for (unsigned i = 0; i < f; ++i, c /= 2 * n) {
      const auto d = c % (2 * n);
      const int sign = d % 2 == 0 ? 1 : -1;
      ok = ok && seen[d / 2] != -sign;
      seen[d / 2] = sign;
    }
    good += ok;
  }
  return Rational(good) / Rational(total);
}

TEST(Exact1Sat, MatchesBruteForce) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned f = 0; f <= 6; ++f) {
      const Rational truth = brute_1sat(n, f);
      EXPECT_EQ(exact_1sat_prob_rational(n, f), truth) << "n=" << n << " f=" << f;
      EXPECT_NEAR(exact_1sat_prob(n, f), truth.convert_to<double>(), 1e-14);
    }
  }
}

TEST(Exact1Sat, FloatPathMatchesRational) {
  for (std::uint64_t n : {10u, 100u, 1000u}) {
    for (std::uint64_t f : {65u, 120u, 300u}) {
      const double exact = exact_1sat_prob_rational(n, f).convert_to<double>();
      EXPECT_NEAR(exact_1sat_prob(n, f), exact, 1e-12 + 1e-10 * exact);
    }
  }
}

TEST(Exact1Sat, NonIncreasingInF) {
  for (std::uint64_t n : {1u, 3u, 50u, 10'000u}) {
    double prev = 1.0;
    for (std::uint64_t f = 0; f <= 300; ++f) {
      const double p = exact_1sat_prob(n, f);
      EXPECT_LE(p, prev + 1e-15);
      prev = p;
    }
  }
}

TEST(Exact1Sat, LimitAtOneMillion) {
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto f = static_cast<std::uint64_t>(std::floor(beta * 1000));
    EXPECT_NEAR(exact_1sat_prob(1'000'000, f), std::exp(-beta * beta / 4), 0.01);
  }
}

TEST(OneSatAtMostTwo, DominatedAndClose) {
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto f = static_cast<std::uint64_t>(std::floor(beta * 1000));
    const double partial = one_sat_prob_at_most_two(1'000'000, f);
    const double full = exact_1sat_prob(1'000'000, f);
    EXPECT_LE(partial, full + 1e-12);
    EXPECT_LT(full - partial, 1e-3);
  }
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned f = 0; f <= 8; ++f) EXPECT_LE(one_sat_prob_at_most_two(n, f), exact_1sat_prob(n, f) + 1e-12);
  }
}

TEST(OneSatAtMostTwo, SmallExact) {
  // n=1, f=2: both draws on x1 with equal signs, 2 of 4 sequences.
  EXPECT_NEAR(one_sat_prob_at_most_two(1, 2), 0.5, 1e-12);
  // n=1, f=3: every sequence draws x1 three times.
  EXPECT_NEAR(one_sat_prob_at_most_two(1, 3), 0.0, 1e-12);
}

TEST(Cobra, KappaAndBound) {
  EXPECT_NEAR(cobra_kappa(0.5, 0.0), 8.0, 1e-12);
  EXPECT_NEAR(cobra_kappa(0.2, 0.05), 4 * 0.25 / (0.75 * 0.75), 1e-12);
  EXPECT_THROW(cobra_kappa(0.96, 0.05), DomainError);
  EXPECT_DOUBLE_EQ(cobra_count_bound(10, 3, 1), 4.0 * 1 * 3 * 4);
  EXPECT_DOUBLE_EQ(cobra_count_bound(10, 3, 2), 8.0 * 10 * 3 * 5);
}

TEST(ThresholdParams, Conversions) {
  const ThresholdParams p = ThresholdParams::from_beta(3, 0.8, 1.5);
  EXPECT_NEAR(p.gamma, 1.5 * std::cbrt(0.8), 1e-15);
  const ThresholdParams q = ThresholdParams::from_gamma(2, 0.25, 1.0);
  EXPECT_NEAR(q.beta, 2.0, 1e-15);
}

}  // namespace
}  // namespace dof::theory
