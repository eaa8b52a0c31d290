#include "dof/theory.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dof/errors.hpp"

namespace dof::theory {
namespace {

void check_k(unsigned k) {
  if (k != 2 && k != 3) throw DomainError("k must be 2 or 3 (got " + std::to_string(k) + ")");
}

void check_nonneg(double v, const char* name) {
  if (!(v >= 0.0)) throw DomainError(std::string(name) + " must be >= 0");
}

// exp(-t) with exp(-inf) = 0.
double exp_neg(double t) { return std::isinf(t) ? 0.0 : std::exp(-t); }

}  // namespace

ThresholdParams ThresholdParams::from_beta(unsigned k, double alpha, double beta) {
  check_k(k);
  check_nonneg(alpha, "alpha");
  check_nonneg(beta, "beta");
  ThresholdParams p{k, alpha, beta, 0.0};
  p.gamma = alpha == 0.0 ? 0.0 : beta * std::pow(alpha, 1.0 / k);
  return p;
}

ThresholdParams ThresholdParams::from_gamma(unsigned k, double alpha, double gamma) {
  check_k(k);
  check_nonneg(alpha, "alpha");
  check_nonneg(gamma, "gamma");
  ThresholdParams p{k, alpha, 0.0, gamma};
  p.beta = alpha == 0.0 ? kInfinity : gamma / std::pow(alpha, 1.0 / k);
  if (alpha == 0.0 && gamma == 0.0) p.beta = 0.0;
  return p;
}

void check_validity(unsigned k, double alpha) {
  check_k(k);
  check_nonneg(alpha, "alpha");
  const double hi = k == 2 ? kAlphaValid2 : kAlphaValid3;
  if (!(alpha < hi)) {
    throw DomainError("alpha=" + std::to_string(alpha) + " outside the proven range [0, " + std::to_string(hi) +
                      ") for k=" + std::to_string(k));
  }
}

double threshold_gamma(unsigned k, double gamma, double alpha) {
  check_validity(k, alpha);
  check_nonneg(gamma, "gamma");
  const double h = gamma / 2.0;
  if (k == 2) return exp_neg(h * h / (1.0 - alpha));
  return exp_neg(h * h * h);
}

double threshold_beta(unsigned k, double beta, double alpha) {
  check_validity(k, alpha);
  check_nonneg(beta, "beta");
  if (alpha == 0.0) return 1.0;
  const double h = beta / 2.0;
  if (k == 2) return exp_neg(h * h * alpha / (1.0 - alpha));
  return exp_neg(h * h * h * alpha);
}

double mixed_limit(unsigned k, double alpha, double beta) {
  check_validity(k, alpha);
  check_nonneg(beta, "beta");
  const double h = beta / 2.0;
  if (k == 2) return exp_neg(h * h / (1.0 - alpha));
  return exp_neg(h * h);
}

double exchange_rate(double alpha, double beta, double alpha_prime) {
  check_nonneg(beta, "beta");
  for (double a : {alpha, alpha_prime}) {
    if (!(a >= 0.0 && a < 1.0)) throw DomainError("exchange_rate: alpha values must lie in [0, 1)");
  }
  return beta * std::sqrt((1.0 - alpha_prime) / (1.0 - alpha));
}

double degrees_of_freedom(unsigned k, double n, double m) {
  check_k(k);
  if (!(m > 0.0)) throw DomainError("degrees_of_freedom: m must be >= 1");
  return n / std::pow(m, 1.0 / k);
}

Rational exact_1sat_prob_rational(std::uint64_t n, std::uint64_t f) {
  if (n == 0) throw DomainError("exact_1sat_prob: n must be >= 1");
  if (f > kExact1SatMaxClauses) {
    throw DomainError("exact_1sat_prob_rational: f=" + std::to_string(f) + " above the exact-mode cutoff " +
                      std::to_string(kExact1SatMaxClauses));
  }
  // stirling[j] = S(i, j) for the current row i.
  std::vector<BigInt> stirling(f + 1, 0);
  stirling[0] = 1;
  for (std::uint64_t i = 1; i <= f; ++i) {
    for (std::uint64_t j = i; j >= 1; --j) stirling[j] = j * stirling[j] + stirling[j - 1];
    stirling[0] = 0;
  }
  BigInt count = 0;
  BigInt falling = 1;  // n (n-1) ... (n-j+1) 2^j
  for (std::uint64_t j = 0; j <= f && j <= n; ++j) {
    if (j > 0) falling *= 2 * BigInt(n - j + 1);
    count += falling * stirling[j];
  }
  return Rational(count, boost::multiprecision::pow(BigInt(2 * n), static_cast<unsigned>(f)));
}

double exact_1sat_prob(std::uint64_t n, std::uint64_t f) {
  if (n == 0) throw DomainError("exact_1sat_prob: n must be >= 1");
  if (f <= 64) return static_cast<double>(exact_1sat_prob_rational(n, f));
  // prob[j] = P(no contradiction so far and j distinct variables drawn).
  const auto nd = static_cast<double>(n);
  const std::uint64_t jmax = std::min(n, f);
  std::vector<double> prob(jmax + 2, 0.0);
  prob[0] = 1.0;
  for (std::uint64_t t = 0; t < f; ++t) {
    const std::uint64_t top = std::min(t, jmax);
    for (std::uint64_t j = top + 1; j-- > 0;) {
      const double pj = prob[j];
      if (pj == 0.0) continue;
      // Repeat of an already drawn literal keeps j; a fresh variable moves
      // to j+1; the opposite sign of a drawn variable is a contradiction.
      prob[j] = pj * (static_cast<double>(j) / (2.0 * nd));
      if (j + 1 <= jmax) prob[j + 1] += pj * ((nd - static_cast<double>(j)) / nd);
    }
  }
  double s = 0.0;
  for (double p : prob) s += p;
  return s;
}

double one_sat_prob_at_most_two(std::uint64_t n, std::uint64_t f) {
  if (n == 0) throw DomainError("one_sat_prob_at_most_two: n must be >= 1");
  const auto nd = static_cast<double>(n);
  const auto fd = static_cast<double>(f);
  auto log_choose = [](double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); };
  double s = 0.0;
  for (std::uint64_t k = 0; 2 * k <= f; ++k) {
    const auto kd = static_cast<double>(k);
    if (fd - 2 * kd > nd - kd) continue;
    const double log_term = log_choose(nd - kd, fd - 2 * kd) + log_choose(nd, kd) + std::lgamma(fd + 1) -
                            kd * std::log(4.0) - fd * std::log(nd);
    s += std::exp(log_term);
  }
  return s;
}

double cobra_kappa(double alpha, double eps) {
  const double x = alpha + eps;
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("cobra_kappa: need 0 <= alpha + eps < 1");
  return 4.0 * x / ((1.0 - x) * (1.0 - x));
}

double cobra_count_bound(double n, double f, unsigned size) {
  if (size == 0) throw DomainError("cobra size must be >= 1");
  return std::pow(2.0, size + 1) * std::pow(n, static_cast<double>(size) - 1.0) * f * (f + size);
}

}  // namespace dof::theory
