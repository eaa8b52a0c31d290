#include "dof/restrict.hpp"

#include <string>

#include "dof/errors.hpp"

namespace dof {
namespace {

// fixed[v] in {-1, 0, +1}; renumber[v] is the residual index of an unfixed v.
struct RestrictionTable {
  std::vector<std::int8_t> fixed;
  std::vector<Var> renumber;
  std::vector<Var> original;

  RestrictionTable(Var n, const LiteralSet& L) : fixed(n + 1, 0), renumber(n + 1, 0) {
    for (Literal l : L) fixed[l.var()] = static_cast<std::int8_t>(l.sign());
    original.reserve(n - L.size());
    for (Var v = 1; v <= n; ++v) {
      if (fixed[v] == 0) {
        original.push_back(v);
        renumber[v] = static_cast<Var>(original.size());
      }
    }
  }

  // Restricts c; when `dense` the surviving literals are renumbered.
  Clause apply(const Clause& c, bool dense) const {
    if (c.kind() == ClauseKind::Zero || c.kind() == ClauseKind::Star) return c;
    std::array<Literal, kMaxArity> kept{};
    std::size_t n_kept = 0;
    for (Literal l : c.literals()) {
      const int f = fixed[l.var()];
      if (f == 0) {
        kept[n_kept++] = dense ? Literal(l.sign() * static_cast<std::int32_t>(renumber[l.var()])) : l;
      } else if (f == l.sign()) {
        return Clause::star();
      }
    }
    if (n_kept == 0) return Clause::zero();
    return Clause::of(std::span<const Literal>(kept.data(), n_kept));
  }
};

}  // namespace

Clause restrict_clause(const Clause& c, const LiteralSet& L) {
  if (c.kind() == ClauseKind::Zero || c.kind() == ClauseKind::Star) return c;
  std::array<Literal, kMaxArity> kept{};
  std::size_t n_kept = 0;
  for (Literal l : c.literals()) {
    if (L.contains(l)) return Clause::star();
    if (!L.contains(-l)) kept[n_kept++] = l;
  }
  if (n_kept == 0) return Clause::zero();
  return Clause::of(std::span<const Literal>(kept.data(), n_kept));
}

FateSplit split_formula(const Formula& phi, const LiteralSet& L) {
  if (L.max_var() > phi.n_vars()) {
    throw DomainError("literal set mentions variable " + std::to_string(L.max_var()) + " > n_vars " +
                      std::to_string(phi.n_vars()));
  }
  const RestrictionTable table(phi.n_vars(), L);
  FateSplit split;
  split.original_var = table.original;
  split.restricted.reserve(phi.size());
  for (std::uint32_t j = 0; j < phi.size(); ++j) {
    Clause r = table.apply(phi[j], true);
    split.index_sets[kind_index(r.kind())].push_back(j);
    split.restricted.push_back(r);
  }
  return split;
}

Formula FateSplit::sub_formula(ClauseKind k) const {
  Formula out(residual_vars());
  if (k == ClauseKind::Star) return out;
  out.reserve(indices(k).size());
  for (std::uint32_t j : indices(k)) out.add(restricted[j]);
  return out;
}

Formula FateSplit::reassembled() const {
  Formula out(residual_vars());
  for (ClauseKind k : {ClauseKind::Zero, ClauseKind::Unit, ClauseKind::Binary, ClauseKind::Ternary}) {
    for (std::uint32_t j : indices(k)) out.add(restricted[j]);
  }
  return out;
}

Formula FateSplit::residual() const {
  Formula out(residual_vars());
  out.reserve(count(ClauseKind::Binary) + count(ClauseKind::Ternary));
  for (const Clause& c : restricted) {
    if (c.kind() == ClauseKind::Binary || c.kind() == ClauseKind::Ternary) out.add(c);
  }
  return out;
}

Literal FateSplit::to_original(Literal l) const {
  return Literal(l.sign() * static_cast<std::int32_t>(original_var.at(l.var() - 1)));
}

Assignment lift_assignment(const FateSplit& split, const LiteralSet& L, std::span<const std::int8_t> residual_x,
                           Var n_vars) {
  if (residual_x.size() != split.residual_vars()) throw DomainError("residual assignment has wrong length");
  Assignment x(n_vars, 1);
  for (Literal l : L) x[l.var() - 1] = static_cast<std::int8_t>(l.sign());
  for (std::size_t i = 0; i < residual_x.size(); ++i) x[split.original_var[i] - 1] = residual_x[i];
  return x;
}

}  // namespace dof
