#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "dof/formula.hpp"

namespace dof {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct SatVerdict {
  bool satisfiable = false;
  /// Present iff satisfiable; evaluate(phi, *witness) == 1.
  std::optional<Assignment> witness;
};

/// Linear-time 2-SAT via strongly connected components of the implication
/// graph. Accepts Zero/Unit/Binary/Star clauses; throws DomainError on a
/// ternary clause.
SatVerdict solve_2sat(const Formula& phi);

struct DpllStats {
  std::uint64_t decisions = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t propagations = 0;
};

inline constexpr std::uint64_t kDefaultDpllBudget = 1'000'000;

/// DPLL: unit propagation over two watched literals, chronological
/// backtracking, branching on the most frequent unassigned variable
/// (occurrence counts of the input, ties to the smaller index), positive
/// polarity first. `budget` caps the number of decisions; exceeding it throws
/// BudgetExceeded.
SatVerdict solve_dpll(const Formula& phi, std::uint64_t budget = kDefaultDpllBudget, DpllStats* stats = nullptr);

inline constexpr unsigned kBruteForceMaxVars = 24;

/// Exhaustive scan of all 2^n assignments. Throws DomainError if n > 24.
SatVerdict brute_force(const Formula& phi);

inline constexpr std::uint64_t kExactEnumerationBudget = 10'000'000;

/// Exact P(phi_L in SAT) for a random k-CNF phi with m clauses on n variables,
/// by enumerating all (2^k C(n,k))^m equally likely clause tuples. Throws
/// BudgetExceeded beyond 10^7 tuples and DomainError on bad parameters or
/// n > 16.
Rational exact_restricted_sat_prob(unsigned n, unsigned m, unsigned k, const LiteralSet& L);
/// Same with the canonical L = [n] \ [n-f].
Rational exact_restricted_sat_prob(unsigned n, unsigned m, unsigned k, unsigned f);

}  // namespace dof
