#include <gtest/gtest.h>

#include <cmath>

#include "dof/errors.hpp"
#include "dof/peeling.hpp"
#include "dof/restrict.hpp"
#include "helpers.hpp"

namespace dof {
namespace {

using testing::cnf;

TEST(FateProbabilities, SmallExample) {
  const FateProbabilities fp = fate_probabilities(4, 2, 2);
  EXPECT_EQ(fp[ClauseKind::Zero], Rational(1, 24));
  EXPECT_EQ(fp[ClauseKind::Unit], Rational(1, 3));
  EXPECT_EQ(fp[ClauseKind::Binary], Rational(1, 6));
  EXPECT_EQ(fp[ClauseKind::Ternary], Rational(0));
  EXPECT_EQ(fp[ClauseKind::Star], Rational(11, 24));
}

TEST(FateProbabilities, NoZeroWithTwoFixedOfThree) {
  EXPECT_EQ(fate_probabilities(5, 2, 3)[ClauseKind::Zero], Rational(0));
}

TEST(FateProbabilities, Errors) {
  EXPECT_THROW(fate_probabilities(4, 4, 2), DomainError);
  EXPECT_THROW(fate_probabilities(4, 1, 2), DomainError);
  EXPECT_THROW(fate_probabilities(6, 2, 4), DomainError);
}

// Oracle: classify every ordered (variables, signs) tuple under the canonical L.
std::array<Rational, kNumKinds> enumerate_fates(Var n, Var n_prime, unsigned k) {
  const LiteralSet L = LiteralSet::canonical(n, n_prime);
  std::array<std::uint64_t, kNumKinds> counts{};
  std::uint64_t total = 0;
  std::vector<std::int32_t> vars(k);
  auto visit = [&]() {
    for (unsigned signs = 0; signs < (1u << k); ++signs) {
      std::vector<Literal> lits;
      for (unsigned i = 0; i < k; ++i) lits.emplace_back(((signs >> i) & 1) ? -vars[i] : vars[i]);
      counts[kind_index(restrict_clause(Clause::of(lits), L).kind())]++;
      ++total;
    }
  };
  for (std::int32_t a = 1; a <= static_cast<std::int32_t>(n); ++a) {
    for (std::int32_t b = 1; b <= static_cast<std::int32_t>(n); ++b) {
      if (b == a) continue;
      vars[0] = a;
      vars[1] = b;
      if (k == 2) {
        visit();
        continue;
      }
      for (std::int32_t c = 1; c <= static_cast<std::int32_t>(n); ++c) {
        if (c == a || c == b) continue;
        vars[2] = c;
        visit();
      }
    }
  }
  std::array<Rational, kNumKinds> p;
  for (std::size_t i = 0; i < kNumKinds; ++i) p[i] = Rational(counts[i]) / Rational(total);
  return p;
}

TEST(FateProbabilities, MatchTupleEnumeration) {
  for (unsigned k : {2u, 3u}) {
    for (Var n = 3; n <= 9; ++n) {
      for (Var np = 2; np < n; ++np) {
        const FateProbabilities fp = fate_probabilities(n, np, k);
        EXPECT_EQ(fp.total(), Rational(1));
        EXPECT_EQ(fp.p, enumerate_fates(n, np, k)) << "n=" << n << " n'=" << np << " k'=" << k;
      }
    }
  }
}

TEST(EmpiricalFateCounts, ReproducibleAndSumToM) {
  const auto a = empirical_fate_counts(50, 5, 3, 1000, 3, SeedSpec{6, 0});
  const auto b = empirical_fate_counts(50, 5, 3, 1000, 3, SeedSpec{6, 0});
  EXPECT_EQ(a, b);
  for (const auto& row : a) {
    std::uint64_t sum = 0;
    for (auto c : row) sum += c;
    EXPECT_EQ(sum, 1000u);
  }
}

// Pooled chi-square goodness of fit against the exact fate law, significance
// 1e-3 (critical values 16.266 for 3 df, 18.467 for 4 df).
TEST(EmpiricalFateCounts, MultinomialGoodnessOfFit) {
  struct Case {
    Var n, np;
    unsigned k;
  };
  for (const Case c : {Case{100, 10, 2}, Case{100, 10, 3}, Case{30, 12, 2}, Case{30, 12, 3}}) {
    const auto rows = empirical_fate_counts(c.n, c.np, c.k, 20'000, 5, SeedSpec{c.n, c.k});
    std::array<double, kNumKinds> obs{};
    double m = 0;
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < kNumKinds; ++i) {
        obs[i] += static_cast<double>(row[i]);
        m += static_cast<double>(row[i]);
      }
    }
    const FateProbabilities fp = fate_probabilities(c.n, c.np, c.k);
    double chi2 = 0.0;
    int cells = 0;
    for (std::size_t i = 0; i < kNumKinds; ++i) {
      const double e = m * fp.p[i].convert_to<double>();
      if (e == 0.0) {
        EXPECT_EQ(obs[i], 0.0);
        continue;
      }
      chi2 += (obs[i] - e) * (obs[i] - e) / e;
      ++cells;
    }
    EXPECT_LT(chi2, cells == 4 ? 16.266 : 18.467) << "n=" << c.n << " n'=" << c.np << " k'=" << c.k;
  }
}

TEST(FateProbabilities, UnitMeanMatchesGrowthHeuristic) {
  // n = 10^5, alpha = 0.5, beta = 1: m p_1 against alpha beta sqrt(n).
  const std::uint64_t n = 100'000;
  const auto f = static_cast<std::uint64_t>(std::llround(std::sqrt(double(n))));
  const double m = 0.5 * n;
  const double mean = m * fate_probabilities(n, f, 2)[ClauseKind::Unit].convert_to<double>();
  const double heuristic = 0.5 * 1.0 * std::sqrt(double(n));
  EXPECT_LT(std::fabs(mean / heuristic - 1.0), 0.05);
}

TEST(RunPeeling, TwoRoundChain) {
  const Formula phi = cnf(4, {{1, 2}, {-2, 3}, {3, 4}});
  const PeelingTrace t = run_peeling(phi, LiteralSet{-1});
  ASSERT_EQ(t.rounds.size(), 3u);
  EXPECT_EQ(t.rounds[0].units, (std::vector<Literal>{Literal(2)}));
  EXPECT_EQ(t.rounds[1].units, (std::vector<Literal>{Literal(3)}));
  EXPECT_EQ(t.rounds[2].fate_counts[kind_index(ClauseKind::Star)], 1u);
  EXPECT_TRUE(t.rounds[2].units.empty());
  EXPECT_EQ(t.verdict, PeelVerdict::Sat);
  EXPECT_TRUE(t.final_residual.empty());
  const Assignment x = lift_residual_solution(t, Assignment(t.residual_vars.size(), 1), 4);
  EXPECT_EQ(evaluate(phi, x), 1);
  EXPECT_EQ(x[0], -1);
}

TEST(RunPeeling, EmptyLIsOneTrivialRound) {
  const Formula phi = cnf(4, {{1, 2}, {-3, 4}});
  const PeelingTrace t = run_peeling(phi, LiteralSet{});
  ASSERT_EQ(t.rounds.size(), 1u);
  EXPECT_EQ(t.rounds[0].fate_counts[kind_index(ClauseKind::Binary)], 2u);
  EXPECT_EQ(t.verdict, PeelVerdict::Undetermined);
  EXPECT_EQ(t.final_residual.size(), 2u);
}

TEST(RunPeeling, ZeroClauseIsUnsat) {
  const PeelingTrace t = run_peeling(cnf(2, {{1, 2}}), LiteralSet{-1, -2});
  ASSERT_EQ(t.rounds.size(), 1u);
  EXPECT_TRUE(t.rounds[0].zero_clause);
  EXPECT_EQ(t.verdict, PeelVerdict::Unsat);
}

TEST(RunPeeling, ContradictingUnitsAreUnsat) {
  const PeelingTrace t = run_peeling(cnf(3, {{1, 2}, {1, -2}}), LiteralSet{-1});
  EXPECT_TRUE(t.rounds.back().contradiction);
  EXPECT_EQ(t.verdict, PeelVerdict::Unsat);
}

TEST(RunPeeling, DuplicateUnitsCountOnce) {
  const PeelingTrace t = run_peeling(cnf(3, {{1, 2}, {1, 2}, {3, 1}}), LiteralSet{-1});
  EXPECT_EQ(t.rounds[0].units, (std::vector<Literal>{Literal(2), Literal(3)}));
  EXPECT_EQ(t.verdict, PeelVerdict::Sat);
}

// Verdict path against enumeration; an undetermined residual carries the
// satisfiability of phi_L.
TEST(RunPeeling, AgreesWithEnumeration) {
  Rng rng(SeedSpec{17, 0});
  for (int trial = 0; trial < 1500; ++trial) {
    const unsigned k = rng.coin() ? 2 : 3;
    const auto n = static_cast<Var>(k + rng.below(9));
    const Formula phi = gen_random_kcnf(n, rng.below(3 * n), k, SeedSpec{rng.next(), 0});
    const LiteralSet L = LiteralSet::canonical(n, static_cast<Var>(rng.below(n + 1)));
    const bool truth = testing::enum_sat_restricted(phi, L);
    const PeelingTrace t = run_peeling(phi, L);
    if (t.verdict == PeelVerdict::Unsat) {
      ASSERT_FALSE(truth);
    } else if (t.verdict == PeelVerdict::Sat) {
      ASSERT_TRUE(truth);
    } else {
      ASSERT_EQ(testing::enum_sat(t.final_residual), truth);
      ASSERT_FALSE(t.final_residual.has_kind(ClauseKind::Unit));
    }
    for (std::size_t r = 0; r + 1 < t.rounds.size(); ++r) ASSERT_FALSE(t.rounds[r].units.empty());
  }
}

TEST(RunPeeling, RejectsOutOfRangeL) {
  EXPECT_THROW(run_peeling(cnf(2, {{1, 2}}), LiteralSet{5}), DomainError);
}

}  // namespace
}  // namespace dof
