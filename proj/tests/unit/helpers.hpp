#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dof/formula.hpp"
#include "dof/literal.hpp"

namespace dof::testing {

// Formula from clause literal lists, e.g. cnf(3, {{1, 2}, {-1, 3}}).
inline Formula cnf(Var n, std::initializer_list<std::initializer_list<std::int32_t>> clauses) {
  Formula phi(n);
  for (const auto& c : clauses) phi.add(c.size() == 0 ? Clause::zero() : Clause::of(c));
  return phi;
}

// Every point of {-1,1}^n, in binary order.
inline std::vector<Assignment> all_points(Var n) {
  std::vector<Assignment> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment x(n);
    for (Var v = 0; v < n; ++v) x[v] = ((bits >> v) & 1) ? 1 : -1;
    out.push_back(std::move(x));
  }
  return out;
}

// Satisfiability by plain enumeration, independent of the library solvers.
inline bool enum_sat(const Formula& phi) {
  for (const Assignment& x : all_points(phi.n_vars())) {
    if (evaluate(phi, x) == 1) return true;
  }
  return false;
}

inline bool in_box(const Assignment& x, const LiteralSet& L) {
  for (Literal l : L) {
    if (x[l.var() - 1] != l.sign()) return false;
  }
  return true;
}

// phi_L satisfiable, by enumeration over B(L).
inline bool enum_sat_restricted(const Formula& phi, const LiteralSet& L) {
  for (const Assignment& x : all_points(phi.n_vars())) {
    if (in_box(x, L) && evaluate(phi, x) == 1) return true;
  }
  return false;
}

}  // namespace dof::testing
