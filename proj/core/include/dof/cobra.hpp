#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dof/formula.hpp"
#include "dof/literal.hpp"

namespace dof {

// An L-cobra of size N >= 1 is a literal sequence l_0, ..., l_N with
//   (c1) |l_0|, ..., |l_{N-1}| pairwise distinct,
//   (c2) |l_0| fixed by L,
//   (c3) |l_N| fixed by L or equal to one of |l_0|, ..., |l_{N-1}|.
// A formula contains the sequence when every consecutive pair has a clause
// whose literal set is exactly {-l_{t-1}, l_t}; a unit clause (a) matches
// the degenerate set {a} = {-l_{t-1}, l_t}.

struct Cobra {
  std::vector<Literal> literals;

  std::size_t size() const { return literals.empty() ? 0 : literals.size() - 1; }
};

bool is_cobra(std::span<const Literal> seq, const LiteralSet& L, Var n);

/// Throws DomainError if phi has a ternary clause.
bool contains(const Formula& phi, std::span<const Literal> seq);

inline constexpr std::uint64_t kCobraSearchBudget = 10'000'000;

/// Breadth-first search over implication chains starting at every literal
/// whose variable L fixes; returns a shortest contained L-cobra (ties go to
/// the smaller start literal, then smaller successor literals) or nullopt.
/// Throws DomainError on ternary clauses and BudgetExceeded if more than
/// `budget` partial chains are queued.
std::optional<Cobra> find_cobra(const Formula& phi, const LiteralSet& L, std::uint64_t budget = kCobraSearchBudget);

/// Number of distinct L-cobras of size <= max_size contained in phi. Only
/// clause-supported extensions are enumerated; BudgetExceeded once more than
/// `budget` chains have been visited.
std::uint64_t count_cobras(const Formula& phi, const LiteralSet& L, unsigned max_size,
                           std::uint64_t budget = kCobraSearchBudget);

}  // namespace dof
