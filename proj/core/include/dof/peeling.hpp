#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dof/formula.hpp"
#include "dof/random_model.hpp"
#include "dof/solvers.hpp"

namespace dof {

/// Exact per-clause fate law for a random k'-clause when the last n' of n
/// variables are fixed. Entries indexed by kind_index(); p[Ternary] is zero
/// for k' = 2.
struct FateProbabilities {
  unsigned k_prime = 2;
  std::array<Rational, kNumKinds> p;

  const Rational& operator[](ClauseKind k) const { return p[kind_index(k)]; }
  Rational total() const;
};

/// Closed forms for k' in {2, 3}. Requires 2 <= n_prime < n (DomainError).
FateProbabilities fate_probabilities(std::uint64_t n, std::uint64_t n_prime, unsigned k_prime);

enum class PeelVerdict { Sat, Unsat, Undetermined };
std::string_view verdict_name(PeelVerdict v);

struct PeelRound {
  unsigned index = 0;  // 1-based round number r
  std::array<std::size_t, kNumKinds> fate_counts{};
  /// Lambda_r: deduplicated unit literals produced this round, original
  /// variable numbering, sorted by value.
  std::vector<Literal> units;
  bool contradiction = false;  // Lambda_r holds some v and -v
  bool zero_clause = false;    // |C_0^(r)| > 0
};

/// One peel per round: fix the current literal set, classify the surviving
/// clauses, collect the new unit literals, and continue on the renumbered
/// residual until no units appear or a contradiction shows up.
struct PeelingTrace {
  std::vector<PeelRound> rounds;
  /// Clauses still of arity >= 2 after the last round, in renumbered variables.
  Formula final_residual;
  /// final_residual variable i+1 is original variable residual_vars[i].
  std::vector<Var> residual_vars;
  /// Every literal fixed along the way (L and all Lambda_r), original numbering.
  std::vector<Literal> fixed;
  PeelVerdict verdict = PeelVerdict::Undetermined;
};

/// Never throws on consistent L within range; DomainError otherwise.
PeelingTrace run_peeling(const Formula& phi, const LiteralSet& L);

/// Lifts a solution of final_residual to a point of B(L) satisfying phi.
Assignment lift_residual_solution(const PeelingTrace& trace, std::span<const std::int8_t> residual_x, Var n_vars);

/// Fate counts of split_formula on `trials` fresh random k'-CNF formulas with
/// L = [n] \ [n-n'], one row per trial, trial t drawn from seed.child(t).
std::vector<std::array<std::uint64_t, kNumKinds>> empirical_fate_counts(Var n, Var n_prime, unsigned k_prime,
                                                                        std::size_t m, std::size_t trials,
                                                                        SeedSpec seed);

}  // namespace dof
