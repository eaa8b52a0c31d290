#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dof/formula.hpp"
#include "dof/literal.hpp"

namespace dof {

/// (C)_L: the clause after fixing the variables dictated by L.
///
/// Star if some literal lies in L, otherwise the literals outside -L in their
/// original order (Zero if none survive).
Clause restrict_clause(const Clause& c, const LiteralSet& L);

/// Result of splitting phi_L by clause fate.
///
/// Surviving variables are renumbered densely 1..n-|L| keeping their relative
/// order; original_var maps the new numbering back. Star clauses keep their
/// index in index_sets but do not appear in any sub-formula.
struct FateSplit {
  std::array<std::vector<std::uint32_t>, kNumKinds> index_sets;
  /// Restricted clause per original index, in the renumbered variables.
  std::vector<Clause> restricted;
  /// original_var[i] is the original index of renumbered variable i+1.
  std::vector<Var> original_var;

  Var residual_vars() const { return static_cast<Var>(original_var.size()); }
  const std::vector<std::uint32_t>& indices(ClauseKind k) const { return index_sets[kind_index(k)]; }
  std::size_t count(ClauseKind k) const { return indices(k).size(); }

  /// phi_k as a formula over the residual variables.
  Formula sub_formula(ClauseKind k) const;
  /// phi_0 & phi_1 & phi_2 & phi_3, clauses in original index order.
  Formula reassembled() const;
  /// The clauses of fate 2 and 3 in original index order.
  Formula residual() const;
  /// Translates a literal of the residual numbering to original coordinates.
  Literal to_original(Literal l) const;
};

/// Throws DomainError if L mentions a variable > phi.n_vars().
FateSplit split_formula(const Formula& phi, const LiteralSet& L);

/// Maps an assignment of the residual variables to the point of B(L) it
/// denotes (fixed variables take their L value).
Assignment lift_assignment(const FateSplit& split, const LiteralSet& L, std::span<const std::int8_t> residual_x,
                           Var n_vars);

}  // namespace dof
