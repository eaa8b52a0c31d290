// dofsat: command-line front end to the dof core library.
//
// Exit codes: 0 success, 1 domain error or failed selftest, 2 I/O or parse
// error, 64 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dof/acceptance.hpp"
#include "dof/cobra.hpp"
#include "dof/dimacs.hpp"
#include "dof/errors.hpp"
#include "dof/experiment.hpp"
#include "dof/peeling.hpp"
#include "dof/random_model.hpp"
#include "dof/solvers.hpp"
#include "dof/theory.hpp"

namespace {

using nlohmann::json;
using namespace dof;

constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;

struct Common {
  bool pretty = false;
};

void emit(const json& j, const Common& c) { std::cout << (c.pretty ? j.dump(2) : j.dump()) << '\n'; }

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json literals_json(const std::vector<Literal>& lits) {
  json a = json::array();
  for (Literal l : lits) a.push_back(l.value());
  return a;
}

// "3,-5,7" -> {3, -5, 7}; empty string -> {}.
LiteralSet parse_literal_set(const std::string& text) {
  std::vector<Literal> lits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad literal '" + item + "'");
    }
    if (used != item.size() || v == 0) throw DomainError("bad literal '" + item + "'");
    lits.emplace_back(static_cast<std::int32_t>(v));
  }
  return LiteralSet(std::move(lits));
}

LiteralSet literal_set_from(const std::optional<std::string>& text, const std::optional<Var>& f, Var n) {
  if (text && f) throw DomainError("give --L or --f, not both");
  if (f) return LiteralSet::canonical(n, *f);
  if (text) return parse_literal_set(*text);
  return LiteralSet{};
}

Formula read_input(const std::string& path) {
  if (path == "-") return read_dimacs(std::cin);
  return load_dimacs(path);
}

// ---- gen ----

struct GenArgs {
  unsigned k = 2;
  Var n = 0;
  std::size_t m = 0;
  std::size_t units = 0;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int run_gen(const GenArgs& a) {
  Formula phi;
  if (a.units == 0) {
    phi = gen_random_kcnf(a.n, a.m, a.k, SeedSpec{a.seed, 0});
  } else {
    MixSpec spec;
    spec.n_vars = a.n;
    spec.counts_by_arity[1] = a.units;
    if (a.k < 1 || a.k > 3) throw DomainError("k must be in {1,2,3}");
    spec.counts_by_arity[a.k] += a.m;
    phi = gen_mixed(spec, SeedSpec{a.seed, 0});
  }
  std::ostringstream body;
  body << "c dofsat gen k=" << a.k << " n=" << a.n << " m=" << a.m << " units=" << a.units << " seed=" << a.seed
       << '\n';
  write_dimacs(body, phi);
  if (a.out == "-") {
    std::cout << body.str();
  } else {
    std::ofstream f(a.out);
    if (!f) throw IoError("cannot open '" + a.out + "' for writing");
    f << body.str();
    if (!f) throw IoError("write to '" + a.out + "' failed");
  }
  return 0;
}

// ---- solve ----

struct SolveArgs {
  std::string in;
  std::string solver = "auto";
  std::uint64_t budget = kDefaultDpllBudget;
};

int run_solve(const SolveArgs& a, const Common& c) {
  const Formula phi = read_input(a.in);
  std::string used = a.solver;
  if (used == "auto") used = phi.has_kind(ClauseKind::Ternary) ? "dpll" : "2sat";
  SatVerdict v;
  json j;
  if (used == "2sat") {
    v = solve_2sat(phi);
  } else if (used == "dpll") {
    DpllStats stats;
    v = solve_dpll(phi, a.budget, &stats);
    j["decisions"] = stats.decisions;
    j["conflicts"] = stats.conflicts;
    j["propagations"] = stats.propagations;
  } else {
    v = brute_force(phi);
  }
  j["solver"] = used;
  j["satisfiable"] = v.satisfiable;
  if (v.witness) {
    json w = json::array();
    for (std::size_t i = 0; i < v.witness->size(); ++i) {
      const auto var = static_cast<std::int32_t>(i + 1);
      w.push_back((*v.witness)[i] > 0 ? var : -var);
    }
    j["witness"] = w;
  }
  emit(j, c);
  return 0;
}

// ---- peel ----

struct PeelArgs {
  std::string in;
  std::optional<std::string> literals;
  std::optional<Var> f;
  bool solve = false;
  std::uint64_t budget = kDefaultDpllBudget;
};

int run_peel(const PeelArgs& a, const Common& c) {
  const Formula phi = read_input(a.in);
  const LiteralSet L = literal_set_from(a.literals, a.f, phi.n_vars());
  const PeelingTrace trace = run_peeling(phi, L);
  json j;
  j["verdict"] = std::string(verdict_name(trace.verdict));
  json rounds = json::array();
  for (const PeelRound& r : trace.rounds) {
    json jr;
    jr["round"] = r.index;
    json counts;
    for (std::size_t k = 0; k < kNumKinds; ++k) {
      counts[std::string(kind_name(static_cast<ClauseKind>(k)))] = r.fate_counts[k];
    }
    jr["fates"] = counts;
    jr["units"] = literals_json(r.units);
    jr["contradiction"] = r.contradiction;
    jr["zero_clause"] = r.zero_clause;
    rounds.push_back(jr);
  }
  j["rounds"] = rounds;
  j["fixed"] = trace.fixed.size();
  j["residual_vars"] = trace.residual_vars.size();
  j["residual_clauses"] = trace.final_residual.size();
  if (a.solve) {
    bool sat = trace.verdict == PeelVerdict::Sat;
    if (trace.verdict == PeelVerdict::Undetermined) {
      sat = trace.final_residual.has_kind(ClauseKind::Ternary)
                ? solve_dpll(trace.final_residual, a.budget).satisfiable
                : solve_2sat(trace.final_residual).satisfiable;
    }
    j["satisfiable"] = sat;
  }
  emit(j, c);
  return 0;
}

// ---- theory ----

struct TheoryArgs {
  std::string quantity = "threshold";
  unsigned k = 2;
  std::vector<double> alpha;
  std::optional<double> alpha_prime;
  std::vector<double> beta;
  std::vector<double> gamma;
  std::optional<double> eps;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> f;
  std::optional<unsigned> size;
  bool grid = false;
};

template <typename T>
T need(const std::optional<T>& v, const char* flag, const std::string& quantity) {
  if (!v) throw CLI::RequiredError(std::string(flag) + " (needed by --quantity " + quantity + ")");
  return *v;
}

double need_one(const std::vector<double>& v, const char* flag, const std::string& quantity) {
  if (v.empty()) throw CLI::RequiredError(std::string(flag) + " (needed by --quantity " + quantity + ")");
  if (v.size() > 1) throw CLI::ValidationError(std::string(flag) + ": one value expected without --grid");
  return v.front();
}

// threshold / mixed over the product alpha x (gamma | beta), as CSV.
int run_theory_grid(const TheoryArgs& a) {
  const std::string& q = a.quantity;
  if (q != "threshold" && q != "mixed") throw CLI::ValidationError("--grid applies to threshold and mixed only");
  if (a.alpha.empty()) throw CLI::RequiredError("--alpha");
  const bool by_gamma = !a.gamma.empty();
  if (by_gamma == !a.beta.empty()) throw CLI::ValidationError("give exactly one of --gamma, --beta");
  if (q == "mixed" && by_gamma) throw CLI::ValidationError("mixed is parameterized by --beta");
  std::cout << "k,alpha,beta,gamma,p_theory\n";
  for (double alpha : a.alpha) {
    for (double x : by_gamma ? a.gamma : a.beta) {
      const double root = std::pow(alpha, 1.0 / a.k);
      const double beta = by_gamma ? (root > 0 ? x / root : theory::kInfinity) : x;
      const double gamma = by_gamma ? x : x * root;
      double p = std::numeric_limits<double>::quiet_NaN();
      try {
        if (q == "mixed") {
          p = theory::mixed_limit(a.k, alpha, beta);
        } else {
          p = by_gamma ? theory::threshold_gamma(a.k, gamma, alpha) : theory::threshold_beta(a.k, beta, alpha);
        }
      } catch (const DomainError&) {
        // Outside the proven range: left as nan.
      }
      std::cout << a.k << ',' << num(alpha) << ',' << num(beta) << ',' << num(gamma) << ',' << num(p) << '\n';
    }
  }
  return 0;
}

int run_theory(const TheoryArgs& a, const Common& c) {
  if (a.grid) return run_theory_grid(a);
  const std::string& q = a.quantity;
  double value = 0.0;
  if (q == "threshold") {
    const double alpha = need_one(a.alpha, "--alpha", q);
    if (a.gamma.empty() == a.beta.empty()) throw CLI::ValidationError("give exactly one of --gamma, --beta");
    value = !a.gamma.empty() ? theory::threshold_gamma(a.k, need_one(a.gamma, "--gamma", q), alpha)
                             : theory::threshold_beta(a.k, need_one(a.beta, "--beta", q), alpha);
  } else if (q == "mixed") {
    value = theory::mixed_limit(a.k, need_one(a.alpha, "--alpha", q), need_one(a.beta, "--beta", q));
  } else if (q == "exchange") {
    value = theory::exchange_rate(need_one(a.alpha, "--alpha", q), need_one(a.beta, "--beta", q),
                                  need(a.alpha_prime, "--alpha-prime", q));
  } else if (q == "dof") {
    value = theory::degrees_of_freedom(a.k, static_cast<double>(need(a.n, "--n", q)),
                                       static_cast<double>(need(a.m, "--m", q)));
  } else if (q == "one-sat") {
    value = theory::exact_1sat_prob(need(a.n, "--n", q), need(a.f, "--f", q));
  } else if (q == "kappa") {
    value = theory::cobra_kappa(need_one(a.alpha, "--alpha", q), need(a.eps, "--eps", q));
  } else if (q == "cobra-bound") {
    value = theory::cobra_count_bound(static_cast<double>(need(a.n, "--n", q)),
                                      static_cast<double>(need(a.f, "--f", q)), need(a.size, "--size", q));
  }
  if (c.pretty) {
    std::cout << q << " = " << num(value) << '\n';
  } else {
    std::cout << num(value) << '\n';
  }
  return 0;
}

// ---- cobra ----

struct CobraArgs {
  std::string in;
  std::optional<std::string> literals;
  std::optional<Var> f;
  std::optional<unsigned> count;
  std::uint64_t budget = kCobraSearchBudget;
};

int run_cobra(const CobraArgs& a, const Common& c) {
  const Formula phi = read_input(a.in);
  const LiteralSet L = literal_set_from(a.literals, a.f, phi.n_vars());
  json j;
  const std::optional<Cobra> found = find_cobra(phi, L, a.budget);
  j["found"] = found.has_value();
  if (found) {
    j["cobra"] = literals_json(found->literals);
    j["size"] = found->size();
  }
  if (a.count) j["count"] = count_cobras(phi, L, *a.count, a.budget);
  emit(j, c);
  return 0;
}

// ---- sweep ----

struct SweepArgs {
  std::string config;
  std::string out = "-";
  std::optional<unsigned> workers;
};

int run_sweep_cmd(const SweepArgs& a) {
  const experiment::ExperimentConfig cfg = experiment::load_config(a.config);
  const auto rows = experiment::run_sweep(cfg, a.workers.value_or(experiment::default_workers()));
  if (a.out == "-") {
    experiment::write_csv(std::cout, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw IoError("cannot open '" + a.out + "' for writing");
    experiment::write_csv(f, rows);
    if (!f) throw IoError("write to '" + a.out + "' failed");
  }
  return 0;
}

// ---- selftest ----

struct SelftestArgs {
  std::vector<std::string> only;
  std::uint64_t seed = acceptance::Options{}.seed;
  std::optional<unsigned> workers;
};

int run_selftest(const SelftestArgs& a) {
  acceptance::Options opts;
  opts.seed = a.seed;
  opts.only = a.only;
  opts.workers = a.workers.value_or(experiment::default_workers());
  opts.on_result = [](const acceptance::CriterionResult& r) {
    std::cout << acceptance::format_line(r) << std::endl;
  };
  const auto results = acceptance::run_acceptance(opts);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << " (" << results.size()
            << " criteria)\n";
  return failed == 0 ? 0 : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dofsat: random k-SAT degrees-of-freedom laboratory"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--pretty", common.pretty, "Human-readable output");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a random k-CNF formula as DIMACS");
  g->add_option("--k", gen.k, "Clause width (1..3)")->required();
  g->add_option("--n", gen.n, "Number of variables")->required();
  g->add_option("--m", gen.m, "Number of k-clauses")->required();
  g->add_option("--units", gen.units, "Additional random unit clauses (mixed formula)");
  g->add_option("--seed", gen.seed, "Seed (required)")->required();
  g->add_option("--out", gen.out, "Output path, - for stdout");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Decide a DIMACS formula");
  s->add_option("--in", solve.in, "DIMACS input, - for stdin")->required();
  s->add_option("--solver", solve.solver, "auto | 2sat | dpll | brute")
      ->check(CLI::IsMember({"auto", "2sat", "dpll", "brute"}));
  s->add_option("--budget", solve.budget, "DPLL decision budget");

  PeelArgs peel;
  auto* p = app.add_subcommand("peel", "Run the peeling rounds on phi_L");
  p->add_option("--in", peel.in, "DIMACS input, - for stdin")->required();
  p->add_option("--L", peel.literals, "Comma-separated literals, e.g. 3,-5");
  p->add_option("--f", peel.f, "Use the canonical L of size f");
  p->add_flag("--solve", peel.solve, "Also decide the residual formula");
  p->add_option("--budget", peel.budget, "DPLL decision budget");

  TheoryArgs th;
  auto* t = app.add_subcommand("theory", "Evaluate closed-form quantities");
  t->add_option("--quantity", th.quantity, "threshold | mixed | exchange | dof | one-sat | kappa | cobra-bound")
      ->check(CLI::IsMember({"threshold", "mixed", "exchange", "dof", "one-sat", "kappa", "cobra-bound"}));
  t->add_option("--k", th.k, "Clause width (2 or 3)");
  t->add_option("--alpha", th.alpha, "Clause density m/n (comma list with --grid)")->delimiter(',');
  t->add_option("--alpha-prime", th.alpha_prime, "Target density for exchange");
  t->add_option("--beta", th.beta, "beta parameter (comma list with --grid)")->delimiter(',');
  t->add_option("--gamma", th.gamma, "gamma parameter (comma list with --grid)")->delimiter(',');
  t->add_option("--eps", th.eps, "epsilon for kappa");
  t->add_option("--n", th.n, "Number of variables");
  t->add_option("--m", th.m, "Number of clauses");
  t->add_option("--f", th.f, "Number of fixed literals or unit clauses");
  t->add_option("--size", th.size, "Cobra size N");
  t->add_flag("--grid", th.grid, "CSV over all alpha x gamma (or beta) combinations");

  CobraArgs cob;
  auto* cb = app.add_subcommand("cobra", "Search and count L-cobras in a 2-CNF");
  cb->add_option("--in", cob.in, "DIMACS input, - for stdin")->required();
  cb->add_option("--L", cob.literals, "Comma-separated literals");
  cb->add_option("--f", cob.f, "Use the canonical L of size f");
  cb->add_option("--count", cob.count, "Also count cobras up to this size");
  cb->add_option("--budget", cob.budget, "Search budget");

  SweepArgs sw;
  auto* swp = app.add_subcommand("sweep", "Run a Monte Carlo sweep from a JSON config");
  swp->add_option("--config", sw.config, "JSON configuration")->required();
  swp->add_option("--out", sw.out, "CSV output path, - for stdout");
  swp->add_option("--workers", sw.workers, "Worker threads (default DOFSAT_WORKERS or all cores)");

  SelftestArgs st;
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--only", st.only, "Criterion ids, e.g. A1 A3")->delimiter(',');
  self->add_option("--seed", st.seed, "Base seed");
  self->add_option("--workers", st.workers, "Worker threads");

  try {
    app.parse(argc, argv);
    if (*g) return run_gen(gen);
    if (*s) return run_solve(solve, common);
    if (*p) return run_peel(peel, common);
    if (*t) return run_theory(th, common);
    if (*cb) return run_cobra(cob, common);
    if (*swp) return run_sweep_cmd(sw);
    if (*self) return run_selftest(st);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "dofsat: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "dofsat: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "dofsat: " << e.what() << '\n';
    return kExitDomain;
  } catch (const BudgetExceeded& e) {
    std::cerr << "dofsat: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
