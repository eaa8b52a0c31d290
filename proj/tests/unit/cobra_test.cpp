#include <gtest/gtest.h>

#include <cmath>

#include "dof/cobra.hpp"
#include "dof/errors.hpp"
#include "dof/peeling.hpp"
#include "dof/random_model.hpp"
#include "dof/theory.hpp"
#include "helpers.hpp"

namespace dof {
namespace {

using testing::cnf;

std::vector<Literal> seq(std::initializer_list<std::int32_t> vs) {
  std::vector<Literal> out;
  for (auto v : vs) out.emplace_back(v);
  return out;
}

TEST(IsCobra, Examples) {
  EXPECT_TRUE(is_cobra(seq({1, 2, -1}), LiteralSet{1}, 3));
  EXPECT_FALSE(is_cobra(seq({2, 3}), LiteralSet{1}, 3));
  EXPECT_FALSE(is_cobra(seq({1, 2, 2, 1}), LiteralSet{1}, 3));
  EXPECT_FALSE(is_cobra(seq({1}), LiteralSet{1}, 3));
  EXPECT_TRUE(is_cobra(seq({-1, 2}), LiteralSet{1, 2}, 3));
  EXPECT_FALSE(is_cobra(seq({1, 2, 3}), LiteralSet{1}, 3));
  EXPECT_FALSE(is_cobra(seq({1, 4}), LiteralSet{1}, 3));
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(cnf(3, {{-1, 2}, {2, 3}}), seq({1, 2})));
  EXPECT_FALSE(contains(Formula(3), seq({1, 2})));
  EXPECT_TRUE(contains(cnf(3, {{-1, 2}, {-2, 3}}), seq({1, 2, 3})));
  EXPECT_FALSE(contains(cnf(3, {{-1, 2}}), seq({2, 1})));
  // A unit clause (a) supports the step -a -> a.
  EXPECT_TRUE(contains(cnf(2, {{2}}), seq({-2, 2})));
  EXPECT_THROW(contains(cnf(3, {{1, 2, 3}}), seq({1, 2})), DomainError);
}

TEST(FindCobra, ChainBackIntoL) {
  const Formula phi = cnf(3, {{-1, 2}, {-2, -1}});
  const LiteralSet L{1};
  const std::optional<Cobra> c = find_cobra(phi, L);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_cobra(c->literals, L, 3));
  EXPECT_TRUE(contains(phi, c->literals));
}

TEST(FindCobra, EmptyFormula) { EXPECT_FALSE(find_cobra(Formula(5), LiteralSet{1, 2}).has_value()); }

TEST(FindCobra, EmptyL) { EXPECT_FALSE(find_cobra(cnf(2, {{1, 2}}), LiteralSet{}).has_value()); }

TEST(FindCobra, ShortestFirst) {
  // Length-3 chain 1 -> 2 -> 3 -> -1 and a direct step 1 -> 4 with 4 in L.
  const Formula phi = cnf(4, {{-1, 2}, {-2, 3}, {-3, -1}, {-1, 4}});
  const std::optional<Cobra> c = find_cobra(phi, LiteralSet{1, 4});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 1u);
}

TEST(FindCobra, NeedsPathsNotJustLiterals) {
  // From -1 the literal 3 is reached by two routes; only the route avoiding
  // variable 2 can continue to -2 without closing early. Either way a
  // certificate must be valid.
  const Formula phi = cnf(5, {{1, 2}, {-2, 3}, {1, 4}, {-4, 3}, {-3, 5}, {-5, -2}});
  const LiteralSet L{1};
  const std::optional<Cobra> c = find_cobra(phi, L);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_cobra(c->literals, L, 5));
  EXPECT_TRUE(contains(phi, c->literals));
}

TEST(FindCobra, BudgetExceeded) {
  const Formula phi = gen_random_kcnf(200, 180, 2, SeedSpec{1, 1});
  EXPECT_THROW(find_cobra(phi, LiteralSet::canonical(200, 3), 1), BudgetExceeded);
}

TEST(FindCobra, CertifiesPeelingFailures) {
  const LiteralSet L = LiteralSet::canonical(30, 8);
  int failures = 0;
  for (std::uint64_t t = 0; t < 2000; ++t) {
    const Formula phi = gen_random_kcnf(30, 21, 2, SeedSpec{404, t});
    const std::optional<Cobra> c = find_cobra(phi, L);
    if (c) {
      ASSERT_TRUE(is_cobra(c->literals, L, 30));
      ASSERT_TRUE(contains(phi, c->literals));
    }
    if (run_peeling(phi, L).verdict != PeelVerdict::Unsat) continue;
    ++failures;
    ASSERT_TRUE(c.has_value());
  }
  EXPECT_GT(failures, 0);
}

TEST(CountCobras, Examples) {
  EXPECT_EQ(count_cobras(Formula(4), LiteralSet{1}, 4), 0u);
  // One chain 1 -> 2 -> -1.
  const Formula phi = cnf(3, {{-1, 2}, {-2, -1}});
  EXPECT_GE(count_cobras(phi, LiteralSet{1}, 3), 1u);
  EXPECT_EQ(count_cobras(phi, LiteralSet{1}, 0), 0u);
}

// Brute force over all literal sequences of size <= 3 on n = 3.
TEST(CountCobras, MatchesExhaustiveEnumeration) {
  Rng rng(SeedSpec{55, 0});
  for (int trial = 0; trial < 200; ++trial) {
    const Var n = 3;
    const Formula phi = gen_random_kcnf(n, rng.below(7), 2, SeedSpec{rng.next(), 0});
    const LiteralSet L = LiteralSet::canonical(n, 1 + static_cast<Var>(rng.below(2)));
    std::uint64_t brute = 0;
    std::vector<Literal> lits;
    for (std::int32_t v = 1; v <= 3; ++v) {
      lits.emplace_back(v);
      lits.emplace_back(-v);
    }
    std::vector<Literal> s;
    auto rec = [&](auto&& self, unsigned len) -> void {
      if (s.size() == len) {
        brute += (is_cobra(s, L, n) && contains(phi, s)) ? 1 : 0;
        return;
      }
      for (Literal l : lits) {
        s.push_back(l);
        self(self, len);
        s.pop_back();
      }
    };
    for (unsigned len = 2; len <= 4; ++len) rec(rec, len);
    ASSERT_EQ(count_cobras(phi, L, 3), brute);
  }
}

// Mean of Z against (f / sqrt(n)) kappa, and P(Z > 0) <= E[Z] + 3 sigma.
TEST(CountCobras, FirstMomentBound) {
  constexpr Var n = 100;
  constexpr std::size_t m = 50;
  constexpr Var f = 3;
  constexpr int trials = 2000;
  const LiteralSet L = LiteralSet::canonical(n, f);
  double sum = 0.0;
  double sum_sq = 0.0;
  int positive = 0;
  for (int t = 0; t < trials; ++t) {
    const Formula phi = gen_random_kcnf(n, m, 2, SeedSpec{808, static_cast<std::uint64_t>(t)});
    const auto z = static_cast<double>(count_cobras(phi, L, n));
    sum += z;
    sum_sq += z * z;
    positive += z > 0 ? 1 : 0;
  }
  const double mean = sum / trials;
  const double sd = std::sqrt(std::max(0.0, sum_sq / trials - mean * mean) / trials);
  const double bound = f / std::sqrt(double(n)) * theory::cobra_kappa(0.5, 0.05);
  EXPECT_LE(mean, bound);
  EXPECT_LE(double(positive) / trials, mean + 3 * sd);
}

}  // namespace
}  // namespace dof
