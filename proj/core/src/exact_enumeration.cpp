#include <string>
#include <vector>

#include "dof/errors.hpp"
#include "dof/solvers.hpp"

namespace dof {
namespace {

constexpr unsigned kMaxExactVars = 16;

using Bits = std::vector<std::uint64_t>;

// All 2^k C(n,k) clause supports, as clauses.
std::vector<Clause> all_clauses(unsigned n, unsigned k) {
  std::vector<Clause> out;
  std::vector<unsigned> vars(k);
  auto emit = [&]() {
    for (unsigned signs = 0; signs < (1u << k); ++signs) {
      std::array<Literal, kMaxArity> lits{};
      for (unsigned i = 0; i < k; ++i) {
        const auto v = static_cast<std::int32_t>(vars[i]);
        lits[i] = Literal((signs >> i) & 1u ? -v : v);
      }
      out.push_back(Clause::of(std::span<const Literal>(lits.data(), k)));
    }
  };
  // Lexicographic k-subsets of [n].
  for (unsigned i = 0; i < k; ++i) vars[i] = i + 1;
  for (;;) {
    emit();
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && vars[i] == n - k + 1 + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++vars[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) vars[j] = vars[j - 1] + 1;
  }
  return out;
}

struct Enumerator {
  std::vector<Bits> satisfied;  // per clause support, the points of B(L) satisfying it
  std::size_t words = 0;
  unsigned m = 0;
  BigInt sat_count = 0;
  std::vector<Bits> scratch;

  void run(unsigned depth, const Bits& alive) {
    if (depth == m) {
      sat_count += 1;
      return;
    }
    Bits& next = scratch[depth];
    for (const Bits& s : satisfied) {
      bool any = false;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] = alive[w] & s[w];
        any |= next[w] != 0;
      }
      // An empty intersection stays empty: all continuations are UNSAT.
      if (any) run(depth + 1, next);
    }
  }
};

}  // namespace

Rational exact_restricted_sat_prob(unsigned n, unsigned m, unsigned k, const LiteralSet& L) {
  if (k < 1 || k > kMaxArity || k > n) throw DomainError("exact_restricted_sat_prob: need 1 <= k <= min(3, n)");
  if (n > kMaxExactVars) throw DomainError("exact_restricted_sat_prob supports n <= 16");
  if (L.max_var() > n) throw DomainError("exact_restricted_sat_prob: literal set exceeds n");

  const std::vector<Clause> supports = all_clauses(n, k);
  const BigInt total = boost::multiprecision::pow(BigInt(supports.size()), m);
  if (total > kExactEnumerationBudget) {
    throw BudgetExceeded("exact enumeration needs " + total.str() + " clause tuples (budget " +
                         std::to_string(kExactEnumerationBudget) + ")");
  }

  // Points of B(L): free variables enumerate all sign patterns, fixed ones
  // take their value in L.
  std::vector<Var> free_vars;
  for (Var v = 1; v <= n; ++v) {
    if (L.value_of(v) == 0) free_vars.push_back(v);
  }
  const std::size_t points = std::size_t{1} << free_vars.size();
  Enumerator e;
  e.m = m;
  e.words = (points + 63) / 64;
  e.satisfied.reserve(supports.size());
  Assignment x(n);
  for (const Clause& c : supports) {
    Bits bits(e.words, 0);
    for (std::size_t p = 0; p < points; ++p) {
      for (Var v = 1; v <= n; ++v) x[v - 1] = static_cast<std::int8_t>(L.value_of(v));
      for (std::size_t i = 0; i < free_vars.size(); ++i) x[free_vars[i] - 1] = (p >> i) & 1u ? 1 : -1;
      if (c.evaluate(x) > 0) bits[p / 64] |= std::uint64_t{1} << (p % 64);
    }
    e.satisfied.push_back(std::move(bits));
  }
  Bits all(e.words, 0);
  for (std::size_t p = 0; p < points; ++p) all[p / 64] |= std::uint64_t{1} << (p % 64);
  e.scratch.assign(m, Bits(e.words, 0));
  e.run(0, all);
  return Rational(e.sat_count, total);
}

Rational exact_restricted_sat_prob(unsigned n, unsigned m, unsigned k, unsigned f) {
  if (f > n) throw DomainError("exact_restricted_sat_prob: f > n");
  return exact_restricted_sat_prob(n, m, k, LiteralSet::canonical(n, f));
}

}  // namespace dof
