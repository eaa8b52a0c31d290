#pragma once

#include <cstdint>
#include <limits>

#include "dof/solvers.hpp"

namespace dof::theory {

/// Upper end of the 2-SAT validity range (the 2-SAT satisfiability threshold).
inline constexpr double kAlphaValid2 = 1.0;
/// Upper end of the proven 3-SAT range.
inline constexpr double kAlphaValid3 = 3.145;
/// Best known upper bound on the 3-SAT threshold. Documentation only: the
/// threshold function is unknown on [kAlphaValid3, kAlphaSatUpper3].
inline constexpr double kAlphaSatUpper3 = 4.4898;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Parameters of the critical scaling: alpha = m/n, beta = f/sqrt(n) for k=2
/// (f/n^{1-1/k} in general), gamma = f m^{1/k}/n. gamma = beta alpha^{1/k}.
struct ThresholdParams {
  unsigned k = 2;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  static ThresholdParams from_beta(unsigned k, double alpha, double beta);
  static ThresholdParams from_gamma(unsigned k, double alpha, double gamma);
};

/// Throws DomainError unless k in {2,3} and alpha inside the proven range.
void check_validity(unsigned k, double alpha);

/// Limit of P(phi_L in SAT) with f m^{1/k}/n -> gamma:
/// k=2: exp(-(gamma/2)^2 / (1-alpha)), k=3: exp(-(gamma/2)^3). gamma = inf -> 0.
double threshold_gamma(unsigned k, double gamma, double alpha);

/// Same limit in the beta parameterization: exp(-(beta/2)^2 alpha/(1-alpha))
/// and exp(-(beta/2)^3 alpha). alpha = 0 yields 1 for every beta.
double threshold_beta(unsigned k, double beta, double alpha);

/// Limit of P(phi & lambda in SAT) with lambda a random 1-CNF of beta sqrt(n)
/// clauses: exp(-(beta/2)^2/(1-alpha)) for k=2, exp(-(beta/2)^2) for k=3.
double mixed_limit(unsigned k, double alpha, double beta);

/// beta' with (beta'/beta)^2 = (1-alpha')/(1-alpha). Requires alpha, alpha' in [0,1).
double exchange_rate(double alpha, double beta, double alpha_prime);

/// n / m^{1/k}. Throws DomainError when m = 0.
double degrees_of_freedom(unsigned k, double n, double m);

/// P(a random 1-CNF with f clauses on n variables is satisfiable).
/// Exact big-integer evaluation for small f, a floating-point recurrence over
/// the number of distinct variables drawn otherwise.
double exact_1sat_prob(std::uint64_t n, std::uint64_t f);

/// Largest f accepted by exact_1sat_prob_rational.
inline constexpr std::uint64_t kExact1SatMaxClauses = 400;

/// The same probability as an exact rational, via
/// #satisfiable sequences = f! [x^f] (2e^x - 1)^n
///                        = sum_j n(n-1)...(n-j+1) 2^j S(f, j)
/// with S the Stirling numbers of the second kind. Throws DomainError for
/// f > kExact1SatMaxClauses.
Rational exact_1sat_prob_rational(std::uint64_t n, std::uint64_t f);

/// The part of the 1-SAT probability where every variable is drawn at most
/// twice: sum_k C(n-k, f-2k) C(n,k) f! / (4^k n^f). Evaluated in log space.
double one_sat_prob_at_most_two(std::uint64_t n, std::uint64_t f);

/// kappa = sum_{N>=1} 4 (alpha+eps)^N N = 4x/(1-x)^2 with x = alpha + eps < 1.
double cobra_kappa(double alpha, double eps);

/// Upper bound 2^{N+1} n^{N-1} f (f+N) on the number of L-cobras of size N.
double cobra_count_bound(double n, double f, unsigned size);

}  // namespace dof::theory
