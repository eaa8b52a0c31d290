#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dof/formula.hpp"
#include "dof/solvers.hpp"

namespace dof::experiment {

/// FixedL: decide phi_L for the canonical L = [n] \ [n-f].
/// Mixed: decide phi & lambda for an independent random 1-CNF lambda with f clauses.
enum class TrialMode { FixedL, Mixed };
std::string_view mode_name(TrialMode m);
TrialMode parse_mode(std::string_view s);

/// Which parameter the cell was specified by; f is derived from it.
enum class Scaling { Gamma, Beta, ExplicitF };

/// One grid cell. Build with make_cell so that m, f and the derived
/// parameters are consistent.
struct Cell {
  unsigned k = 2;
  Var n = 0;
  std::size_t m = 0;
  Var f = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  Scaling scaling = Scaling::Gamma;
  std::size_t trials = 1;
  TrialMode mode = TrialMode::FixedL;

  /// Limit value for this cell, NaN outside the proven alpha range.
  double p_theory() const;
};

struct CellSpec {
  Var n = 0;
  std::optional<double> alpha;  // m = round(alpha n)
  std::optional<std::size_t> m;
  std::optional<double> gamma;  // f = round(gamma n / m^{1/k})
  std::optional<double> beta;   // f = round(beta n^{1-1/k}); mixed mode: round(beta sqrt(n))
  std::optional<Var> f;
  std::size_t trials = 1;
};

/// Throws DomainError on inconsistent or out-of-range specifications.
Cell make_cell(unsigned k, TrialMode mode, const CellSpec& spec);

struct TrialRecord {
  std::size_t cell_id = 0;
  std::size_t trial = 0;
  bool sat = false;
  unsigned peel_rounds = 0;
  std::uint64_t solver_nodes = 0;
  bool budget_exhausted = false;
};

/// The per-trial kernel: generate, peel, solve the residual (2-SAT when no
/// 3-clauses remain, DPLL otherwise). Pure in (cell, cell_seed, trial).
TrialRecord run_trial(const Cell& cell, std::uint64_t cell_seed, std::size_t trial, std::uint64_t budget);

struct CellResult {
  Cell cell;
  std::uint64_t seed = 0;  // master seed of the sweep
  std::size_t sat_count = 0;
  std::size_t exhausted = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double p_theory = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval at 95% (z = 1.959963984540054).
Interval wilson_interval(std::size_t successes, std::size_t trials);

struct RunOptions {
  std::uint64_t budget = kDefaultDpllBudget;
  unsigned workers = 1;
  /// Receives every trial record, ordered by trial index.
  std::vector<TrialRecord>* records = nullptr;
};

/// Seed of cell `cell_id` under `master_seed`.
std::uint64_t cell_seed(std::uint64_t master_seed, std::size_t cell_id);

/// Runs all trials of one cell. Throws BudgetExceeded if more than 0.1% of
/// the trials exhaust the solver budget.
CellResult run_cell(const Cell& cell, std::size_t cell_id, std::uint64_t master_seed, const RunOptions& opts);

struct ExperimentConfig {
  unsigned k = 2;
  TrialMode mode = TrialMode::FixedL;
  std::uint64_t master_seed = 0;
  std::uint64_t budget = kDefaultDpllBudget;
  std::vector<Cell> cells;
};

/// Parses the JSON configuration format (see README). Throws ParseError or
/// DomainError.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Rows in cell order regardless of scheduling. A failing cell aborts the
/// sweep with a DomainError/BudgetExceeded naming the cell.
std::vector<CellResult> run_sweep(const ExperimentConfig& config, unsigned workers);

inline constexpr std::string_view kCsvHeader =
    "k,n,m,f,alpha,beta,gamma,trials,sat_count,p_hat,ci_lo,ci_hi,p_theory,mode,seed";

void write_csv(std::ostream& out, const std::vector<CellResult>& rows);

/// Worker count: DOFSAT_WORKERS if set to a positive integer, else the
/// hardware concurrency. Never affects results.
unsigned default_workers();

}  // namespace dof::experiment
