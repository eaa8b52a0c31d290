#include <algorithm>
#include <vector>

#include "dof/errors.hpp"
#include "dof/solvers.hpp"

namespace dof {
namespace {

// Implication graph over literal indices in CSR form.
struct ImplicationGraph {
  std::vector<std::uint32_t> offsets;
  std::vector<std::uint32_t> targets;
};

ImplicationGraph build_graph(const Formula& phi, std::uint32_t nodes) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(2 * phi.size());
  for (const Clause& c : phi) {
    switch (c.kind()) {
      case ClauseKind::Unit:
        edges.emplace_back((-c[0]).index(), c[0].index());
        break;
      case ClauseKind::Binary:
        edges.emplace_back((-c[0]).index(), c[1].index());
        edges.emplace_back((-c[1]).index(), c[0].index());
        break;
      default:
        break;
    }
  }
  ImplicationGraph g;
  g.offsets.assign(nodes + 1, 0);
  for (const auto& e : edges) ++g.offsets[e.first + 1];
  for (std::uint32_t i = 0; i < nodes; ++i) g.offsets[i + 1] += g.offsets[i];
  g.targets.resize(edges.size());
  std::vector<std::uint32_t> fill(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& e : edges) g.targets[fill[e.first]++] = e.second;
  return g;
}

// Iterative Tarjan. Components are numbered in completion order, which is a
// reverse topological order of the condensation.
std::vector<std::uint32_t> tarjan_components(const ImplicationGraph& g, std::uint32_t nodes) {
  constexpr std::uint32_t kUnvisited = ~0u;
  std::vector<std::uint32_t> index(nodes, kUnvisited);
  std::vector<std::uint32_t> low(nodes, 0);
  std::vector<std::uint32_t> comp(nodes, kUnvisited);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // (node, next edge)
  std::uint32_t counter = 0;
  std::uint32_t n_comp = 0;

  for (std::uint32_t root = 0; root < nodes; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, g.offsets[root]);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!call.empty()) {
      auto& [u, e] = call.back();
      if (e < g.offsets[u + 1]) {
        const std::uint32_t w = g.targets[e++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, g.offsets[w]);
        } else if (comp[w] == kUnvisited) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      const std::uint32_t done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::uint32_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = n_comp;
        } while (w != done);
        ++n_comp;
      }
    }
  }
  return comp;
}

}  // namespace

SatVerdict solve_2sat(const Formula& phi) {
  for (const Clause& c : phi) {
    if (c.kind() == ClauseKind::Ternary) throw DomainError("solve_2sat: ternary clause present");
  }
  for (const Clause& c : phi) {
    if (c.kind() == ClauseKind::Zero) return {};
  }
  const Var n = phi.n_vars();
  const std::uint32_t nodes = 2 * n;
  const ImplicationGraph g = build_graph(phi, nodes);
  const std::vector<std::uint32_t> comp = tarjan_components(g, nodes);

  Assignment x(n, 1);
  for (Var v = 1; v <= n; ++v) {
    const std::uint32_t pos = 2 * (v - 1);
    const std::uint32_t neg = pos + 1;
    if (comp[pos] == comp[neg]) return {};
    // The literal whose component completes first is topologically later.
    x[v - 1] = comp[pos] < comp[neg] ? 1 : -1;
  }
  return {true, std::move(x)};
}

}  // namespace dof
