#include <string>
#include <vector>

#include "dof/errors.hpp"
#include "dof/solvers.hpp"

namespace dof {
namespace {

// A clause as two bitmasks over assignment bits (bit v-1 set means x_v = +1):
// satisfied at x iff (x & pos) | (~x & neg) is nonzero.
struct MaskClause {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

}  // namespace

SatVerdict brute_force(const Formula& phi) {
  const Var n = phi.n_vars();
  if (n > kBruteForceMaxVars) {
    throw DomainError("brute_force supports n <= " + std::to_string(kBruteForceMaxVars) + " (got " +
                      std::to_string(n) + ")");
  }
  std::vector<MaskClause> masks;
  masks.reserve(phi.size());
  for (const Clause& c : phi) {
    if (c.kind() == ClauseKind::Star) continue;
    if (c.kind() == ClauseKind::Zero) return {};
    MaskClause mc;
    for (Literal l : c.literals()) (l.positive() ? mc.pos : mc.neg) |= 1u << (l.var() - 1);
    masks.push_back(mc);
  }
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (std::uint32_t x = 0; x < limit; ++x) {
    bool ok = true;
    for (const MaskClause& mc : masks) {
      if (((x & mc.pos) | (~x & mc.neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a(n);
      for (Var v = 0; v < n; ++v) a[v] = (x >> v) & 1u ? 1 : -1;
      return {true, std::move(a)};
    }
  }
  return {};
}

}  // namespace dof
