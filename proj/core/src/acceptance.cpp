#include "dof/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

#include "dof/cobra.hpp"
#include "dof/errors.hpp"
#include "dof/experiment.hpp"
#include "dof/peeling.hpp"
#include "dof/random_model.hpp"
#include "dof/restrict.hpp"
#include "dof/solvers.hpp"
#include "dof/theory.hpp"

namespace dof::acceptance {
namespace {

using experiment::CellSpec;
using experiment::TrialMode;

std::string fmt(double v, int digits = 4) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void note(const std::string& s) {
    if (detail.tellp() > 0) detail << "; ";
    detail << s;
  }
  void require(bool ok, const std::string& s) {
    pass = pass && ok;
    note(s);
  }
};

// Monte Carlo threshold cells: |p_hat - p_theory| <= tol for every cell.
void threshold_cells(Check& chk, unsigned k, TrialMode mode, std::vector<CellSpec> specs, double tol,
                     std::uint64_t seed, unsigned workers) {
  experiment::RunOptions opts;
  opts.workers = workers;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const experiment::Cell cell = experiment::make_cell(k, mode, specs[i]);
    const experiment::CellResult r = experiment::run_cell(cell, i, seed, opts);
    const double err = std::fabs(r.p_hat - r.p_theory);
    const std::string param = specs[i].gamma ? "gamma=" + fmt(*specs[i].gamma, 2) : "beta=" + fmt(*specs[i].beta, 2);
    chk.require(err <= tol, param + " f=" + std::to_string(cell.f) + " p_hat=" + fmt(r.p_hat) + " theory=" +
                                fmt(r.p_theory) + " |err|=" + fmt(err) + (err <= tol ? "" : " > tol"));
  }
}

CellSpec gamma_cell(Var n, double alpha, double gamma, std::size_t trials) {
  CellSpec s;
  s.n = n;
  s.alpha = alpha;
  s.gamma = gamma;
  s.trials = trials;
  return s;
}

CellSpec beta_cell(Var n, double alpha, double beta, std::size_t trials) {
  CellSpec s;
  s.n = n;
  s.alpha = alpha;
  s.beta = beta;
  s.trials = trials;
  return s;
}

void a1(Check& chk, std::uint64_t seed, unsigned workers) {
  std::vector<CellSpec> cells;
  for (double g : {0.5, 1.0, 2.0}) cells.push_back(gamma_cell(4000, 0.5, g, 2000));
  threshold_cells(chk, 2, TrialMode::FixedL, cells, 0.05, seed, workers);
}

void a2(Check& chk, std::uint64_t seed, unsigned workers) {
  std::vector<CellSpec> cells;
  for (double g : {0.5, 1.0, 2.0}) cells.push_back(gamma_cell(3000, 1.0, g, 1000));
  threshold_cells(chk, 3, TrialMode::FixedL, cells, 0.06, seed, workers);
}

// Independent oracle: walk all (2n)^f literal sequences and count those in
// which no variable appears with both signs.
Rational brute_1sat(unsigned n, unsigned f) {
  std::vector<int> seq(f, 0);
  const unsigned base = 2 * n;
  std::uint64_t good = 0;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < f; ++i) total *= base;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::vector<int> seen(n + 1, 0);
    bool ok = true;
    for (unsigned i = 0; i < f && ok; ++i) {
      const auto d = static_cast<unsigned>(c % base);
      c /= base;
      const unsigned var = d / 2 + 1;
      const int sign = (d % 2 == 0) ? 1 : -1;
      if (seen[var] == -sign) ok = false;
      seen[var] = sign;
    }
    good += ok ? 1 : 0;
  }
  return Rational(good) / Rational(total);
}

void a3(Check& chk) {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned f = 0; f <= 5; ++f) {
      ++cases;
      const Rational exact = theory::exact_1sat_prob_rational(n, f);
      const Rational oracle = brute_1sat(n, f);
      const double fl = theory::exact_1sat_prob(n, f);
      if (exact != oracle || std::fabs(fl - oracle.convert_to<double>()) > 1e-12) ++mismatches;
    }
  }
  chk.require(mismatches == 0, std::to_string(cases) + " (n,f) pairs vs brute force, " + std::to_string(mismatches) +
                                   " mismatches");
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto f = static_cast<std::uint64_t>(std::floor(beta * 1000.0));
    const double p = theory::exact_1sat_prob(1'000'000, f);
    const double lim = std::exp(-(beta / 2) * (beta / 2));
    const double err = std::fabs(p - lim);
    chk.require(err <= 0.01, "beta=" + fmt(beta, 1) + " p=" + fmt(p, 5) + " limit=" + fmt(lim, 5) +
                                 " |err|=" + fmt(err, 5));
  }
}

void a4(Check& chk, std::uint64_t seed) {
  constexpr Var n = 100;
  constexpr Var n_prime = 10;
  constexpr std::size_t m = 100'000;
  for (unsigned kp : {2u, 3u}) {
    const FateProbabilities fp = fate_probabilities(n, n_prime, kp);
    chk.require(fp.total() == 1, "k'=" + std::to_string(kp) + " exact sum " + fp.total().str());
    const auto rows = empirical_fate_counts(n, n_prime, kp, m, 1, SeedSpec{seed, kp});
    const auto& counts = rows.front();
    double worst = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < kNumKinds; ++i) {
      const double p = fp.p[i].convert_to<double>();
      const double freq = static_cast<double>(counts[i]) / static_cast<double>(m);
      const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(m));
      const double dev = std::fabs(freq - p);
      if (sigma == 0.0) {
        ok = ok && counts[i] == 0;
      } else {
        ok = ok && dev <= 3.0 * sigma;
        worst = std::max(worst, dev / sigma);
      }
    }
    chk.require(ok, "k'=" + std::to_string(kp) + " max deviation " + fmt(worst, 2) + " sigma");
  }
}

Formula random_small_formula(Rng& rng, Var n, bool allow_ternary, std::uint64_t stream) {
  MixSpec spec;
  spec.n_vars = n;
  spec.counts_by_arity[1] = rng.below(3);
  spec.counts_by_arity[2] = n >= 2 ? rng.below(2 * n + 2) : 0;
  spec.counts_by_arity[3] = (allow_ternary && n >= 3) ? rng.below(5 * n + 2) : 0;
  return gen_mixed(spec, SeedSpec{rng.next(), stream});
}

bool witness_ok(const Formula& phi, const SatVerdict& v) {
  if (!v.satisfiable) return !v.witness.has_value();
  return v.witness.has_value() && evaluate(phi, *v.witness) == 1;
}

void a5(Check& chk, std::uint64_t seed) {
  constexpr std::size_t instances = 10'000;
  Rng rng(SeedSpec{seed, 0});
  std::size_t bad2 = 0;
  std::size_t bad_dpll = 0;
  std::size_t sat2 = 0;
  std::size_t sat3 = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto n = static_cast<Var>(1 + rng.below(12));
    const Formula two = random_small_formula(rng, n, false, i);
    const SatVerdict bf2 = brute_force(two);
    const SatVerdict s2 = solve_2sat(two);
    if (s2.satisfiable != bf2.satisfiable || !witness_ok(two, s2)) ++bad2;
    sat2 += bf2.satisfiable ? 1 : 0;

    const Formula three = random_small_formula(rng, n, true, i);
    const SatVerdict bf3 = brute_force(three);
    const SatVerdict s3 = solve_dpll(three);
    if (s3.satisfiable != bf3.satisfiable || !witness_ok(three, s3)) ++bad_dpll;
    sat3 += bf3.satisfiable ? 1 : 0;
  }
  chk.require(bad2 == 0, "solve_2sat: " + std::to_string(bad2) + "/" + std::to_string(instances) +
                             " disagreements (" + std::to_string(sat2) + " SAT)");
  chk.require(bad_dpll == 0, "solve_dpll: " + std::to_string(bad_dpll) + "/" + std::to_string(instances) +
                                 " disagreements (" + std::to_string(sat3) + " SAT)");
}

LiteralSet random_literal_set(Rng& rng, Var n, Var f) {
  std::vector<Var> vars(n);
  for (Var v = 0; v < n; ++v) vars[v] = v + 1;
  std::vector<Literal> lits;
  for (Var i = 0; i < f; ++i) {
    const auto j = static_cast<Var>(i + rng.below(n - i));
    std::swap(vars[i], vars[j]);
    const auto v = static_cast<std::int32_t>(vars[i]);
    lits.emplace_back(rng.coin() ? v : -v);
  }
  return LiteralSet(std::move(lits));
}

Formula with_units(const Formula& phi, const LiteralSet& L) {
  Formula out = phi;
  for (Literal l : L) out.add(Clause::of({l.value()}));
  return out;
}

void a6(Check& chk, std::uint64_t seed) {
  constexpr std::size_t instances = 10'000;
  Rng rng(SeedSpec{seed, 0});
  std::size_t bad = 0;
  std::array<std::size_t, 3> by_verdict{};
  for (std::size_t i = 0; i < instances; ++i) {
    const unsigned k = rng.coin() ? 3 : 2;
    const auto n = static_cast<Var>(k + rng.below(14 - k + 1));
    const std::size_t m = rng.below((k == 2 ? 2 : 5) * n + 1);
    const auto f = static_cast<Var>(rng.below(n + 1));
    const Formula phi = gen_random_kcnf(n, m, k, SeedSpec{rng.next(), i});
    const LiteralSet L = random_literal_set(rng, n, f);

    const bool truth = brute_force(with_units(phi, L)).satisfiable;
    const PeelingTrace trace = run_peeling(phi, L);
    by_verdict[static_cast<std::size_t>(trace.verdict)]++;
    bool verdict = false;
    std::optional<Assignment> x;
    if (trace.verdict == PeelVerdict::Sat) {
      verdict = true;
      x = lift_residual_solution(trace, Assignment(trace.residual_vars.size(), 1), n);
    } else if (trace.verdict == PeelVerdict::Undetermined) {
      const SatVerdict s = trace.final_residual.has_kind(ClauseKind::Ternary) ? solve_dpll(trace.final_residual)
                                                                              : solve_2sat(trace.final_residual);
      verdict = s.satisfiable;
      if (s.satisfiable) x = lift_residual_solution(trace, *s.witness, n);
    }
    bool ok = verdict == truth;
    if (ok && verdict) {
      ok = x.has_value() && evaluate(phi, *x) == 1;
      for (Literal l : L) ok = ok && (*x)[l.var() - 1] == l.sign();
    }
    bad += ok ? 0 : 1;
  }
  chk.require(bad == 0, std::to_string(bad) + "/" + std::to_string(instances) + " disagreements (peeling SAT " +
                            std::to_string(by_verdict[0]) + ", UNSAT " + std::to_string(by_verdict[1]) +
                            ", residual " + std::to_string(by_verdict[2]) + ")");
}

// All consistent literal sets over [n] with exactly f entries.
std::vector<LiteralSet> all_literal_sets(Var n, Var f) {
  std::vector<LiteralSet> out;
  std::uint32_t limit = 1;
  for (Var v = 0; v < n; ++v) limit *= 3;
  for (std::uint32_t code = 0; code < limit; ++code) {
    std::vector<Literal> lits;
    std::uint32_t c = code;
    for (Var v = 1; v <= n; ++v, c /= 3) {
      if (c % 3 == 1) lits.emplace_back(static_cast<std::int32_t>(v));
      if (c % 3 == 2) lits.emplace_back(-static_cast<std::int32_t>(v));
    }
    if (lits.size() == f) out.emplace_back(std::move(lits));
  }
  return out;
}

void a7(Check& chk) {
  constexpr unsigned kMaxM = 3;
  std::size_t evaluations = 0;
  std::size_t invariance_fail = 0;
  std::size_t f_fail = 0;
  std::size_t m_fail = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      // table[m][f]
      std::vector<std::vector<Rational>> table(kMaxM + 1, std::vector<Rational>(n + 1));
      for (unsigned m = 0; m <= kMaxM; ++m) {
        for (unsigned f = 0; f <= n; ++f) {
          const std::vector<LiteralSet> sets = all_literal_sets(n, f);
          table[m][f] = exact_restricted_sat_prob(n, m, k, sets.front());
          ++evaluations;
          for (std::size_t s = 1; s < sets.size(); ++s) {
            ++evaluations;
            if (exact_restricted_sat_prob(n, m, k, sets[s]) != table[m][f]) ++invariance_fail;
          }
          if (table[m][f] != exact_restricted_sat_prob(n, m, k, f)) ++invariance_fail;
          if (f > 0 && table[m][f] > table[m][f - 1]) ++f_fail;
          if (m > 0 && table[m][f] > table[m - 1][f]) ++m_fail;
        }
      }
    }
  }
  chk.require(invariance_fail == 0, "invariance over equal-size L: " + std::to_string(invariance_fail) +
                                        " violations in " + std::to_string(evaluations) + " exact evaluations");
  chk.require(f_fail == 0, "non-increasing in f: " + std::to_string(f_fail) + " violations");
  chk.require(m_fail == 0, "non-increasing in m: " + std::to_string(m_fail) + " violations");
}

void a8(Check& chk, std::uint64_t seed) {
  constexpr std::size_t instances = 10'000;
  constexpr Var n = 30;
  constexpr std::size_t m = 21;
  const LiteralSet L = LiteralSet::canonical(n, 8);
  std::size_t failures = 0;
  std::size_t certified = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    const Formula phi = gen_random_kcnf(n, m, 2, SeedSpec{seed, i});
    if (run_peeling(phi, L).verdict != PeelVerdict::Unsat) continue;
    ++failures;
    const std::optional<Cobra> c = find_cobra(phi, L);
    if (c && is_cobra(c->literals, L, n) && contains(phi, c->literals)) ++certified;
  }
  chk.require(failures > 0 && certified == failures, std::to_string(certified) + "/" + std::to_string(failures) +
                                                          " peeling failures certified by a contained cobra");
}

void a9(Check& chk, std::uint64_t seed, unsigned workers) {
  std::vector<CellSpec> cells;
  for (double b : {0.5, 1.0}) cells.push_back(beta_cell(4000, 0.5, b, 2000));
  threshold_cells(chk, 2, TrialMode::Mixed, cells, 0.05, seed, workers);
}

void a10(Check& chk, std::uint64_t seed) {
  constexpr Var n = 1'000'000;
  constexpr std::size_t f = 1000;
  constexpr std::size_t w = 50;
  constexpr std::size_t trials = 10'000;
  MixSpec spec;
  spec.n_vars = n;
  spec.counts_by_arity[1] = f;
  std::size_t short_count = 0;
  std::size_t total_duplicates = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t distinct = count_distinct_literals(gen_mixed(spec, SeedSpec{seed, t}));
    short_count += distinct < f - w ? 1 : 0;
    total_duplicates += f - distinct;
  }
  const double freq = static_cast<double>(short_count) / trials;
  const double beta = static_cast<double>(f) / std::sqrt(static_cast<double>(n));
  const double bound = 4.0 * beta * beta / static_cast<double>(w);
  chk.require(freq <= bound, "P(|Lambda| < f-w) = " + fmt(freq) + " <= " + fmt(bound) + " (mean duplicates " +
                                 fmt(static_cast<double>(total_duplicates) / trials, 3) + ")");
}

struct Entry {
  const char* id;
  const char* title;
  std::function<void(Check&, std::uint64_t, unsigned)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"A1", "2-SAT threshold, fixed L (n=4000, alpha=0.5)", a1},
      {"A2", "3-SAT threshold, fixed L (n=3000, alpha=1)", a2},
      {"A3", "1-SAT exact law", [](Check& c, std::uint64_t, unsigned) { a3(c); }},
      {"A4", "fate multinomial (n=100, n'=10)", [](Check& c, std::uint64_t s, unsigned) { a4(c, s); }},
      {"A5", "2-SAT and DPLL against brute force", [](Check& c, std::uint64_t s, unsigned) { a5(c, s); }},
      {"A6", "peeling plus residual solve against brute force",
       [](Check& c, std::uint64_t s, unsigned) { a6(c, s); }},
      {"A7", "exact monotonicity and invariance in L", [](Check& c, std::uint64_t, unsigned) { a7(c); }},
      {"A8", "cobra certificates for peeling failures", [](Check& c, std::uint64_t s, unsigned) { a8(c, s); }},
      {"A9", "mixed 1-and-2-SAT (n=4000, alpha=0.5)", a9},
      {"A10", "duplicate-literal bound (n=10^6, f=1000, w=50)",
       [](Check& c, std::uint64_t s, unsigned) { a10(c, s); }},
  };
  return entries;
}

}  // namespace

std::vector<std::string> criterion_ids() {
  std::vector<std::string> ids;
  for (const Entry& e : registry()) ids.emplace_back(e.id);
  return ids;
}

std::vector<CriterionResult> run_acceptance(const Options& opts) {
  for (const std::string& id : opts.only) {
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const Entry& e) { return id == e.id; })) {
      throw DomainError("unknown acceptance criterion '" + id + "'");
    }
  }
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < registry().size(); ++i) {
    const Entry& e = registry()[i];
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end()) continue;
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    const auto start = std::chrono::steady_clock::now();
    Check chk;
    try {
      e.run(chk, mix64(opts.seed, i), std::max(1u, opts.workers));
      r.pass = chk.pass;
      r.detail = chk.detail.str();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = chk.detail.str();
      r.detail += (r.detail.empty() ? "" : "; ") + std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.on_result) opts.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  char head[32];
  std::snprintf(head, sizeof head, "%-4s %s", r.id.c_str(), r.pass ? "PASS" : "FAIL");
  return std::string(head) + "  " + r.title + "  [" + r.detail + "] (" + fmt(r.seconds, 1) + " s)";
}

}  // namespace dof::acceptance
