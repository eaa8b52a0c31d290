#include "dof/peeling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dof/errors.hpp"
#include "dof/restrict.hpp"

namespace dof {

Rational FateProbabilities::total() const {
  Rational s = 0;
  for (const Rational& r : p) s += r;
  return s;
}

FateProbabilities fate_probabilities(std::uint64_t n, std::uint64_t n_prime, unsigned k_prime) {
  if (k_prime != 2 && k_prime != 3) throw DomainError("fate_probabilities: k' must be 2 or 3");
  if (n_prime < 2 || n_prime >= n) {
    throw DomainError("fate_probabilities: need 2 <= n' < n (got n=" + std::to_string(n) +
                      ", n'=" + std::to_string(n_prime) + ")");
  }
  const BigInt N(n);
  const BigInt F(n_prime);
  const BigInt U = N - F;  // unfixed variables

  FateProbabilities out;
  out.k_prime = k_prime;
  auto& p = out.p;
  if (k_prime == 2) {
    const BigInt denom = N * (N - 1);
    p[kind_index(ClauseKind::Zero)] = Rational(F * (F - 1), 4 * denom);
    p[kind_index(ClauseKind::Unit)] = Rational(F * U, denom);
    p[kind_index(ClauseKind::Binary)] = Rational(U * (U - 1), denom);
    p[kind_index(ClauseKind::Ternary)] = 0;
  } else {
    const BigInt denom = N * (N - 1) * (N - 2);
    p[kind_index(ClauseKind::Zero)] = Rational(F * (F - 1) * (F - 2), 8 * denom);
    p[kind_index(ClauseKind::Unit)] = Rational(3 * F * (F - 1) * U, 4 * denom);
    p[kind_index(ClauseKind::Binary)] = Rational(3 * F * U * (U - 1), 2 * denom);
    p[kind_index(ClauseKind::Ternary)] = Rational(U * (U - 1) * (U - 2), denom);
  }
  Rational rest = 1;
  for (std::size_t i = 0; i < kind_index(ClauseKind::Star); ++i) rest -= p[i];
  p[kind_index(ClauseKind::Star)] = rest;
  return out;
}

std::string_view verdict_name(PeelVerdict v) {
  switch (v) {
    case PeelVerdict::Sat: return "SAT";
    case PeelVerdict::Unsat: return "UNSAT";
    case PeelVerdict::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

PeelingTrace run_peeling(const Formula& phi, const LiteralSet& L) {
  if (L.max_var() > phi.n_vars()) throw DomainError("run_peeling: literal set exceeds n_vars");

  PeelingTrace trace;
  Formula current = phi;
  LiteralSet fixing = L;
  // original_of[i] is the original index of current variable i+1.
  std::vector<Var> original_of(phi.n_vars());
  std::iota(original_of.begin(), original_of.end(), Var{1});

  auto to_original = [&](Literal l) {
    return Literal(l.sign() * static_cast<std::int32_t>(original_of[l.var() - 1]));
  };

  for (unsigned r = 1;; ++r) {
    for (Literal l : fixing) trace.fixed.push_back(to_original(l));

    FateSplit split = split_formula(current, fixing);
    PeelRound round;
    round.index = r;
    for (std::size_t k = 0; k < kNumKinds; ++k) round.fate_counts[k] = split.index_sets[k].size();
    round.zero_clause = split.count(ClauseKind::Zero) > 0;

    std::vector<Literal> units;
    units.reserve(split.count(ClauseKind::Unit));
    for (std::uint32_t j : split.indices(ClauseKind::Unit)) units.push_back(split.restricted[j][0]);
    std::sort(units.begin(), units.end());
    units.erase(std::unique(units.begin(), units.end()), units.end());
    round.contradiction = !is_consistent(units);

    std::vector<Var> next_original(split.original_var.size());
    for (std::size_t i = 0; i < next_original.size(); ++i) next_original[i] = original_of[split.original_var[i] - 1];
    original_of = std::move(next_original);

    round.units.reserve(units.size());
    for (Literal u : units) round.units.push_back(to_original(u));
    std::sort(round.units.begin(), round.units.end());

    const bool failed = round.zero_clause || round.contradiction;
    const bool exhausted = units.empty();
    trace.rounds.push_back(std::move(round));

    if (failed || exhausted) {
      trace.final_residual = split.residual();
      trace.residual_vars = original_of;
      if (failed) {
        trace.verdict = PeelVerdict::Unsat;
      } else {
        trace.verdict = trace.final_residual.empty() ? PeelVerdict::Sat : PeelVerdict::Undetermined;
      }
      break;
    }
    current = split.residual();
    fixing = LiteralSet(std::move(units));
  }
  return trace;
}

Assignment lift_residual_solution(const PeelingTrace& trace, std::span<const std::int8_t> residual_x, Var n_vars) {
  if (residual_x.size() != trace.residual_vars.size()) throw DomainError("residual solution has wrong length");
  Assignment x(n_vars, 1);
  for (Literal l : trace.fixed) x[l.var() - 1] = static_cast<std::int8_t>(l.sign());
  for (std::size_t i = 0; i < residual_x.size(); ++i) x[trace.residual_vars[i] - 1] = residual_x[i];
  return x;
}

std::vector<std::array<std::uint64_t, kNumKinds>> empirical_fate_counts(Var n, Var n_prime, unsigned k_prime,
                                                                        std::size_t m, std::size_t trials,
                                                                        SeedSpec seed) {
  if (k_prime != 2 && k_prime != 3) throw DomainError("empirical_fate_counts: k' must be 2 or 3");
  const LiteralSet L = LiteralSet::canonical(n, n_prime);
  std::vector<std::array<std::uint64_t, kNumKinds>> rows;
  rows.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const Formula phi = gen_random_kcnf(n, m, k_prime, seed.child(t));
    const FateSplit split = split_formula(phi, L);
    std::array<std::uint64_t, kNumKinds> row{};
    for (std::size_t k = 0; k < kNumKinds; ++k) row[k] = split.index_sets[k].size();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dof
