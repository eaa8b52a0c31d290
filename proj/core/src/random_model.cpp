#include "dof/random_model.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "dof/errors.hpp"

namespace dof {

std::uint64_t Rng::below(std::uint64_t bound) {
  // 128-bit multiply-shift with rejection of the biased low region.
  unsigned __int128 prod = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(prod);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      prod = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(prod);
    }
  }
  return static_cast<std::uint64_t>(prod >> 64);
}

Literal random_literal(Rng& rng, Var n) {
  const auto v = static_cast<std::int32_t>(rng.below(n) + 1);
  return Literal(rng.coin() ? v : -v);
}

Clause random_clause(Rng& rng, Var n, unsigned k) {
  // Rejection keeps the draw uniform over ordered tuples of distinct
  // variables; with k <= 3 the expected number of retries is tiny unless n is.
  std::array<Literal, kMaxArity> lits{};
  std::array<Var, kMaxArity> vars{};
  for (unsigned i = 0; i < k; ++i) {
    Var v = 0;
    do {
      v = static_cast<Var>(rng.below(n) + 1);
    } while (std::find(vars.begin(), vars.begin() + i, v) != vars.begin() + i);
    vars[i] = v;
  }
  for (unsigned i = 0; i < k; ++i) {
    const auto v = static_cast<std::int32_t>(vars[i]);
    lits[i] = Literal(rng.coin() ? v : -v);
  }
  return Clause::of(std::span<const Literal>(lits.data(), k));
}

namespace {

void check_arity(Var n, unsigned k) {
  if (k < 1 || k > kMaxArity) throw DomainError("clause arity must be 1, 2 or 3 (got " + std::to_string(k) + ")");
  if (k > n) throw DomainError("arity k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
}

}  // namespace

Formula gen_random_kcnf(Var n, std::size_t m, unsigned k, SeedSpec seed) {
  Formula phi(n);
  if (m == 0) return phi;
  check_arity(n, k);
  Rng rng(seed);
  phi.reserve(m);
  for (std::size_t j = 0; j < m; ++j) phi.add(random_clause(rng, n, k));
  return phi;
}

void MixSpec::validate() const {
  if (counts_by_arity[0] != 0) throw DomainError("mix spec has 0-clauses");
  for (unsigned k = 1; k <= kMaxArity; ++k) {
    if (counts_by_arity[k] > 0) check_arity(n_vars, k);
  }
}

Formula gen_mixed(const MixSpec& spec, SeedSpec seed) {
  spec.validate();
  Formula phi(spec.n_vars);
  std::size_t total = 0;
  for (std::size_t c : spec.counts_by_arity) total += c;
  phi.reserve(total);
  for (unsigned k = 1; k <= kMaxArity; ++k) {
    const std::size_t m = spec.counts_by_arity[k];
    if (m == 0) continue;
    Rng rng(seed.child(k));
    for (std::size_t j = 0; j < m; ++j) phi.add(random_clause(rng, spec.n_vars, k));
  }
  return phi;
}

std::size_t count_distinct_literals(const Formula& lambda) {
  std::vector<std::int32_t> values;
  values.reserve(lambda.size());
  for (const Clause& c : lambda) {
    if (c.kind() != ClauseKind::Unit) throw DomainError("count_distinct_literals expects unit clauses only");
    values.push_back(c[0].value());
  }
  std::sort(values.begin(), values.end());
  return static_cast<std::size_t>(std::unique(values.begin(), values.end()) - values.begin());
}

}  // namespace dof
