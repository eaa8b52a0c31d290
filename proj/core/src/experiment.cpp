#include "dof/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>

#include "dof/errors.hpp"
#include "dof/literal.hpp"
#include "dof/peeling.hpp"
#include "dof/random_model.hpp"
#include "dof/theory.hpp"

namespace dof::experiment {

std::string_view mode_name(TrialMode m) { return m == TrialMode::FixedL ? "fixed" : "mixed"; }

TrialMode parse_mode(std::string_view s) {
  if (s == "fixed") return TrialMode::FixedL;
  if (s == "mixed") return TrialMode::Mixed;
  throw DomainError("unknown mode '" + std::string(s) + "' (expected fixed or mixed)");
}

namespace {

double nan() { return std::numeric_limits<double>::quiet_NaN(); }

Var round_count(double x) {
  if (!(x >= 0.0) || std::isinf(x)) throw DomainError("derived variable count is not finite");
  return static_cast<Var>(std::llround(x));
}

}  // namespace

double Cell::p_theory() const {
  try {
    if (mode == TrialMode::Mixed) return theory::mixed_limit(k, alpha, beta);
    if (scaling == Scaling::Beta) return theory::threshold_beta(k, beta, alpha);
    return theory::threshold_gamma(k, gamma, alpha);
  } catch (const DomainError&) {
    return nan();
  }
}

Cell make_cell(unsigned k, TrialMode mode, const CellSpec& spec) {
  if (k != 2 && k != 3) throw DomainError("cell: k must be 2 or 3");
  if (spec.n < k) throw DomainError("cell: n must be >= k");
  if (spec.trials < 1) throw DomainError("cell: trials must be >= 1");
  if (spec.alpha.has_value() == spec.m.has_value()) throw DomainError("cell: give exactly one of alpha, m");
  const int params = int(spec.gamma.has_value()) + int(spec.beta.has_value()) + int(spec.f.has_value());
  if (params != 1) throw DomainError("cell: give exactly one of gamma, beta, f");

  Cell c;
  c.k = k;
  c.n = spec.n;
  c.trials = spec.trials;
  c.mode = mode;
  const auto nd = static_cast<double>(spec.n);
  if (spec.alpha) {
    if (!(*spec.alpha >= 0.0)) throw DomainError("cell: alpha must be >= 0");
    c.m = round_count(*spec.alpha * nd);
    c.alpha = *spec.alpha;
  } else {
    c.m = *spec.m;
    c.alpha = static_cast<double>(c.m) / nd;
  }
  const double md = static_cast<double>(c.m);
  const double m_root = std::pow(md, 1.0 / k);
  const double n_pow = std::pow(nd, 1.0 - 1.0 / k);

  if (mode == TrialMode::Mixed) {
    // Unit-clause count scales with sqrt(n) for both k.
    if (spec.gamma) throw DomainError("cell: mixed mode is parameterized by beta or f");
    c.scaling = spec.beta ? Scaling::Beta : Scaling::ExplicitF;
    c.f = spec.beta ? round_count(*spec.beta * std::sqrt(nd)) : *spec.f;
    c.beta = spec.beta ? *spec.beta : static_cast<double>(c.f) / std::sqrt(nd);
    c.gamma = c.beta * std::pow(c.alpha, 1.0 / k);
  } else if (spec.gamma) {
    if (!(*spec.gamma >= 0.0)) throw DomainError("cell: gamma must be >= 0");
    if (c.m < 1 && *spec.gamma > 0.0) throw DomainError("cell: gamma > 0 needs m >= 1");
    c.scaling = Scaling::Gamma;
    c.gamma = *spec.gamma;
    c.f = c.m == 0 ? 0 : round_count(c.gamma * nd / m_root);
    c.beta = static_cast<double>(c.f) / n_pow;
  } else if (spec.beta) {
    if (!(*spec.beta >= 0.0)) throw DomainError("cell: beta must be >= 0");
    c.scaling = Scaling::Beta;
    c.beta = *spec.beta;
    c.f = round_count(c.beta * n_pow);
    c.gamma = c.beta * std::pow(c.alpha, 1.0 / k);
  } else {
    c.scaling = Scaling::ExplicitF;
    c.f = *spec.f;
    c.gamma = static_cast<double>(c.f) * m_root / nd;
    c.beta = static_cast<double>(c.f) / n_pow;
  }
  if (mode == TrialMode::FixedL && c.f > c.n) throw DomainError("cell: f exceeds n");
  return c;
}

TrialRecord run_trial(const Cell& cell, std::uint64_t cell_seed, std::size_t trial, std::uint64_t budget) {
  TrialRecord rec;
  rec.trial = trial;
  const SeedSpec seed{cell_seed, trial};

  PeelingTrace trace;
  if (cell.mode == TrialMode::FixedL) {
    const Formula phi = gen_random_kcnf(cell.n, cell.m, cell.k, seed);
    trace = run_peeling(phi, LiteralSet::canonical(cell.n, cell.f));
  } else {
    MixSpec mix;
    mix.n_vars = cell.n;
    mix.counts_by_arity[1] = cell.f;
    mix.counts_by_arity[cell.k] = cell.m;
    // Round one of peeling turns the random unit clauses into Lambda_1.
    trace = run_peeling(gen_mixed(mix, seed), LiteralSet{});
  }
  rec.peel_rounds = static_cast<unsigned>(trace.rounds.size());

  switch (trace.verdict) {
    case PeelVerdict::Unsat:
      rec.sat = false;
      break;
    case PeelVerdict::Sat:
      rec.sat = true;
      break;
    case PeelVerdict::Undetermined: {
      const Formula& residual = trace.final_residual;
      if (!residual.has_kind(ClauseKind::Ternary)) {
        rec.sat = solve_2sat(residual).satisfiable;
        break;
      }
      DpllStats stats;
      try {
        rec.sat = solve_dpll(residual, budget, &stats).satisfiable;
      } catch (const BudgetExceeded&) {
        rec.budget_exhausted = true;
      }
      rec.solver_nodes = stats.decisions;
      break;
    }
  }
  return rec;
}

Interval wilson_interval(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const auto n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  // The bounds are exactly 0 and 1 at the extremes; rounding would otherwise
  // leave them a few ulps inside.
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t cell_id) { return mix64(master_seed, cell_id); }

CellResult run_cell(const Cell& cell, std::size_t cell_id, std::uint64_t master_seed, const RunOptions& opts) {
  const std::uint64_t seed = cell_seed(master_seed, cell_id);
  std::vector<TrialRecord> records(cell.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&]() {
    try {
      for (std::size_t t = next++; t < cell.trials; t = next++) {
        records[t] = run_trial(cell, seed, t, opts.budget);
        records[t].cell_id = cell_id;
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = cell.trials;
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(cell.trials)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  CellResult r;
  r.cell = cell;
  r.seed = master_seed;
  for (const TrialRecord& rec : records) {
    r.sat_count += rec.sat ? 1 : 0;
    r.exhausted += rec.budget_exhausted ? 1 : 0;
  }
  // More than 0.1% exhausted trials invalidates the cell.
  if (r.exhausted * 1000 > cell.trials) {
    throw BudgetExceeded("cell " + std::to_string(cell_id) + ": " + std::to_string(r.exhausted) + " of " +
                         std::to_string(cell.trials) + " trials exhausted the solver budget");
  }
  r.p_hat = static_cast<double>(r.sat_count) / static_cast<double>(cell.trials);
  const Interval ci = wilson_interval(r.sat_count, cell.trials);
  r.ci_lo = ci.lo;
  r.ci_hi = ci.hi;
  r.p_theory = cell.p_theory();
  if (opts.records != nullptr) *opts.records = std::move(records);
  return r;
}

std::vector<CellResult> run_sweep(const ExperimentConfig& config, unsigned workers) {
  std::vector<CellResult> rows;
  rows.reserve(config.cells.size());
  RunOptions opts;
  opts.budget = config.budget;
  opts.workers = workers;
  for (std::size_t i = 0; i < config.cells.size(); ++i) {
    try {
      rows.push_back(run_cell(config.cells[i], i, config.master_seed, opts));
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded("sweep aborted at cell " + std::to_string(i) + ": " + e.what());
    } catch (const DomainError& e) {
      throw DomainError("sweep aborted at cell " + std::to_string(i) + ": " + e.what());
    }
  }
  return rows;
}

namespace {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<CellResult>& rows) {
  out << kCsvHeader << '\n';
  for (const CellResult& r : rows) {
    const Cell& c = r.cell;
    out << c.k << ',' << c.n << ',' << c.m << ',' << c.f << ',' << fmt_double(c.alpha) << ',' << fmt_double(c.beta)
        << ',' << fmt_double(c.gamma) << ',' << c.trials << ',' << r.sat_count << ',' << fmt_double(r.p_hat) << ','
        << fmt_double(r.ci_lo) << ',' << fmt_double(r.ci_hi) << ',' << fmt_double(r.p_theory) << ','
        << mode_name(c.mode) << ',' << r.seed << '\n';
  }
}

unsigned default_workers() {
  if (const char* env = std::getenv("DOFSAT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace dof::experiment
