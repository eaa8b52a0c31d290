#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dof/errors.hpp"
#include "dof/solvers.hpp"

namespace dof {
namespace {

class Dpll {
 public:
  Dpll(const Formula& phi, std::uint64_t budget) : n_(phi.n_vars()), budget_(budget) {
    value_.assign(n_ + 1, 0);
    watches_.resize(2 * static_cast<std::size_t>(n_));
    std::vector<std::uint32_t> occurrences(n_ + 1, 0);

    for (const Clause& c : phi) {
      switch (c.kind()) {
        case ClauseKind::Star:
          break;
        case ClauseKind::Zero:
          trivially_unsat_ = true;
          break;
        case ClauseKind::Unit:
          units_.push_back(c[0]);
          ++occurrences[c[0].var()];
          break;
        default: {
          const auto id = static_cast<std::uint32_t>(clauses_.size());
          WatchedClause w;
          w.size = static_cast<std::uint8_t>(c.arity());
          std::copy(c.literals().begin(), c.literals().end(), w.lits.begin());
          clauses_.push_back(w);
          for (Literal l : c.literals()) ++occurrences[l.var()];
          watches_[c[0].index()].push_back(id);
          watches_[c[1].index()].push_back(id);
        }
      }
    }

    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Var{1});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Var a, Var b) { return occurrences[a] > occurrences[b]; });
    // Variables absent from every clause are never branched on.
    while (!order_.empty() && occurrences[order_.back()] == 0) order_.pop_back();
  }

  SatVerdict run(DpllStats& stats) {
    if (trivially_unsat_) return {};
    for (Literal u : units_) {
      if (!enqueue(u)) return {};
    }
    if (!propagate(stats)) return {};

    std::size_t cursor = 0;
    for (;;) {
      while (cursor < order_.size() && value_[order_[cursor]] != 0) ++cursor;
      if (cursor == order_.size()) break;

      if (stats.decisions >= budget_) {
        throw BudgetExceeded("DPLL exceeded its budget of " + std::to_string(budget_) + " decisions");
      }
      ++stats.decisions;
      const Var v = order_[cursor];
      levels_.push_back({trail_.size(), v, false});
      enqueue(Literal(static_cast<std::int32_t>(v)));

      while (!propagate(stats)) {
        ++stats.conflicts;
        // Chronological backtracking to the deepest decision with an untried
        // polarity.
        while (!levels_.empty() && levels_.back().flipped) undo_level();
        if (levels_.empty()) return {};
        Level& top = levels_.back();
        const Var dv = top.var;
        unassign_to(top.trail_start);
        top.flipped = true;
        enqueue(Literal(-static_cast<std::int32_t>(dv)));
        cursor = 0;
      }
    }

    Assignment x(n_, 1);
    for (Var v = 1; v <= n_; ++v) {
      if (value_[v] != 0) x[v - 1] = value_[v];
    }
    return {true, std::move(x)};
  }

 private:
  struct WatchedClause {
    std::array<Literal, kMaxArity> lits{};
    std::uint8_t size = 0;
  };

  struct Level {
    std::size_t trail_start;
    Var var;
    bool flipped;
  };

  int lit_value(Literal l) const { return value_[l.var()] * l.sign(); }

  bool enqueue(Literal l) {
    const int cur = lit_value(l);
    if (cur != 0) return cur > 0;
    value_[l.var()] = static_cast<std::int8_t>(l.sign());
    trail_.push_back(l);
    return true;
  }

  void unassign_to(std::size_t size) {
    while (trail_.size() > size) {
      value_[trail_.back().var()] = 0;
      trail_.pop_back();
    }
    qhead_ = std::min(qhead_, size);
  }

  void undo_level() {
    unassign_to(levels_.back().trail_start);
    levels_.pop_back();
  }

  // Returns false on conflict.
  bool propagate(DpllStats& stats) {
    while (qhead_ < trail_.size()) {
      const Literal p = trail_[qhead_++];
      const Literal false_lit = -p;
      auto& ws = watches_[false_lit.index()];
      std::size_t keep = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const std::uint32_t id = ws[i];
        auto& c = clauses_[id].lits;
        // Invariant: the two watched literals sit at positions 0 and 1.
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        if (lit_value(c[0]) > 0) {
          ws[keep++] = id;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < clauses_[id].size; ++k) {
          if (lit_value(c[k]) >= 0) {
            std::swap(c[1], c[k]);
            watches_[c[1].index()].push_back(id);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = id;
        ++stats.propagations;
        if (!enqueue(c[0])) {
          for (++i; i < ws.size(); ++i) ws[keep++] = ws[i];
          ws.resize(keep);
          return false;
        }
      }
      ws.resize(keep);
    }
    return true;
  }

  Var n_;
  std::uint64_t budget_;
  bool trivially_unsat_ = false;
  std::vector<WatchedClause> clauses_;
  std::vector<Literal> units_;
  std::vector<std::vector<std::uint32_t>> watches_;
  std::vector<std::int8_t> value_;
  std::vector<Literal> trail_;
  std::size_t qhead_ = 0;
  std::vector<Level> levels_;
  std::vector<Var> order_;
};

}  // namespace

SatVerdict solve_dpll(const Formula& phi, std::uint64_t budget, DpllStats* stats) {
  DpllStats local;
  Dpll solver(phi, budget);
  SatVerdict verdict = solver.run(stats != nullptr ? *stats : local);
  return verdict;
}

}  // namespace dof
