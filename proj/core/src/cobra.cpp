#include "dof/cobra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>

#include "dof/errors.hpp"

namespace dof {
namespace {

// successors[index(u)] = sorted distinct w with {-u, w} a clause of phi.
struct ChainGraph {
  std::vector<std::vector<Literal>> successors;
  Var n = 0;

  const std::vector<Literal>& next(Literal u) const { return successors[u.index()]; }
};

void reject_ternary(const Formula& phi) {
  for (const Clause& c : phi) {
    if (c.kind() == ClauseKind::Ternary) throw DomainError("cobra routines expect a formula without 3-clauses");
  }
}

ChainGraph build_chain_graph(const Formula& phi) {
  reject_ternary(phi);
  ChainGraph g;
  g.n = phi.n_vars();
  g.successors.resize(2 * static_cast<std::size_t>(g.n));
  for (const Clause& c : phi) {
    if (c.kind() == ClauseKind::Unit) {
      g.successors[(-c[0]).index()].push_back(c[0]);
    } else if (c.kind() == ClauseKind::Binary) {
      g.successors[(-c[0]).index()].push_back(c[1]);
      g.successors[(-c[1]).index()].push_back(c[0]);
    }
  }
  for (auto& s : g.successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return g;
}

std::vector<Literal> start_literals(const LiteralSet& L) {
  std::vector<Literal> roots;
  for (Literal l : L) {
    roots.push_back(l);
    roots.push_back(-l);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::pair<std::int32_t, std::int32_t> clause_key(Literal a, Literal b) {
  return std::minmax(a.value(), b.value());
}

}  // namespace

bool is_cobra(std::span<const Literal> seq, const LiteralSet& L, Var n) {
  if (seq.size() < 2) return false;
  for (Literal l : seq) {
    if (!l.valid() || l.var() > n) return false;
  }
  const std::size_t N = seq.size() - 1;
  std::set<Var> prefix;
  for (std::size_t t = 0; t < N; ++t) {
    if (!prefix.insert(seq[t].var()).second) return false;  // c1
  }
  if (L.value_of(seq[0].var()) == 0) return false;  // c2
  const Var last = seq[N].var();
  return L.value_of(last) != 0 || prefix.count(last) > 0;  // c3
}

bool contains(const Formula& phi, std::span<const Literal> seq) {
  reject_ternary(phi);
  std::set<std::pair<std::int32_t, std::int32_t>> clauses;
  for (const Clause& c : phi) {
    if (c.kind() == ClauseKind::Unit) clauses.insert(clause_key(c[0], c[0]));
    if (c.kind() == ClauseKind::Binary) clauses.insert(clause_key(c[0], c[1]));
  }
  for (std::size_t t = 1; t < seq.size(); ++t) {
    if (clauses.count(clause_key(-seq[t - 1], seq[t])) == 0) return false;
  }
  return true;
}

std::optional<Cobra> find_cobra(const Formula& phi, const LiteralSet& L, std::uint64_t budget) {
  if (L.max_var() > phi.n_vars()) throw DomainError("find_cobra: literal set exceeds n_vars");
  const ChainGraph g = build_chain_graph(phi);

  // Partial chains as a parent-pointer forest, expanded in FIFO order.
  struct Node {
    Literal lit;
    std::uint32_t parent;
  };
  constexpr std::uint32_t kNoParent = ~0u;
  std::vector<Node> nodes;
  std::deque<std::uint32_t> queue;
  for (Literal r : start_literals(L)) {
    nodes.push_back({r, kNoParent});
    queue.push_back(static_cast<std::uint32_t>(nodes.size() - 1));
  }

  std::vector<Literal> path;
  while (!queue.empty()) {
    const std::uint32_t id = queue.front();
    queue.pop_front();
    path.clear();
    for (std::uint32_t p = id; p != kNoParent; p = nodes[p].parent) path.push_back(nodes[p].lit);
    std::reverse(path.begin(), path.end());
    const Literal tail = path.back();

    for (Literal w : g.next(tail)) {
      const bool closes = L.value_of(w.var()) != 0 ||
                          std::any_of(path.begin(), path.end(), [&](Literal l) { return l.var() == w.var(); });
      if (closes) {
        Cobra c{path};
        c.literals.push_back(w);
        return c;
      }
      if (nodes.size() >= budget) {
        throw BudgetExceeded("find_cobra exceeded its budget of " + std::to_string(budget) + " chains");
      }
      nodes.push_back({w, id});
      queue.push_back(static_cast<std::uint32_t>(nodes.size() - 1));
    }
  }
  return std::nullopt;
}

std::uint64_t count_cobras(const Formula& phi, const LiteralSet& L, unsigned max_size, std::uint64_t budget) {
  if (L.max_var() > phi.n_vars()) throw DomainError("count_cobras: literal set exceeds n_vars");
  const ChainGraph g = build_chain_graph(phi);
  std::vector<std::uint8_t> on_path(g.n + 1, 0);
  std::vector<Literal> path;
  std::uint64_t count = 0;
  std::uint64_t visited = 0;

  // Depth-first over chains l_0..l_{t-1} with distinct variables.
  auto extend = [&](auto&& self) -> void {
    if (++visited > budget) {
      throw BudgetExceeded("count_cobras exceeded its budget of " + std::to_string(budget) + " chains");
    }
    const std::size_t t = path.size();
    for (Literal w : g.next(path.back())) {
      const bool repeats = on_path[w.var()] != 0;
      if (repeats || L.value_of(w.var()) != 0) ++count;
      if (!repeats && t < max_size) {
        on_path[w.var()] = 1;
        path.push_back(w);
        self(self);
        path.pop_back();
        on_path[w.var()] = 0;
      }
    }
  };

  if (max_size == 0) return 0;
  for (Literal r : start_literals(L)) {
    on_path[r.var()] = 1;
    path.assign(1, r);
    extend(extend);
    on_path[r.var()] = 0;
  }
  return count;
}

}  // namespace dof
