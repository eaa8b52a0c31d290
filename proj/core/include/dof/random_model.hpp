#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "dof/formula.hpp"

namespace dof {

/// SplitMix64 finalizer applied to (a, b). Part of the reproducibility
/// contract: changing it changes every generated instance and CSV.
constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9E3779B97F4A7C15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  std::uint64_t engine_seed() const { return mix64(master_seed, stream_index); }
  /// A child stream, e.g. per arity block or per trial.
  SeedSpec child(std::uint64_t index) const { return {engine_seed(), index}; }
};

/// Portable random source: mt19937_64 output (fully specified by the
/// standard) with our own bounded sampling, since std distributions differ
/// between standard libraries.
class Rng {
 public:
  explicit Rng(SeedSpec seed) : engine_(seed.engine_seed()) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound >= 1 (Lemire's nearly-divisionless method).
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Random literal uniform on +-[n].
Literal random_literal(Rng& rng, Var n);

/// One random k-clause: k distinct variables as a uniform ordered tuple,
/// independent fair signs. 1 <= k <= min(3, n).
Clause random_clause(Rng& rng, Var n, unsigned k);

/// m i.i.d. random k-clauses over n variables. Throws DomainError unless
/// 1 <= k <= 3 and k <= n (m = 0 is always allowed).
Formula gen_random_kcnf(Var n, std::size_t m, unsigned k, SeedSpec seed);

struct MixSpec {
  Var n_vars = 0;
  /// counts_by_arity[k] = number of k-clauses, k in {1,2,3}; index 0 unused.
  std::array<std::size_t, 4> counts_by_arity{};

  void validate() const;
};

/// Independent random blocks in arity order 1, 2, 3; block k draws from the
/// substream seed.child(k).
Formula gen_mixed(const MixSpec& spec, SeedSpec seed);

/// |Lambda|: the number of distinct literals among the unit clauses.
/// Throws DomainError if a non-unit clause is present.
std::size_t count_distinct_literals(const Formula& lambda);

}  // namespace dof
