#include "dof/formula.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dof/errors.hpp"

namespace dof {

std::string_view kind_name(ClauseKind k) {
  switch (k) {
    case ClauseKind::Zero: return "0";
    case ClauseKind::Unit: return "1";
    case ClauseKind::Binary: return "2";
    case ClauseKind::Ternary: return "3";
    case ClauseKind::Star: return "star";
  }
  return "?";
}

Clause Clause::of(std::span<const Literal> literals) {
  if (literals.empty() || literals.size() > kMaxArity) {
    throw DomainError("clause arity must be 1, 2 or 3 (got " + std::to_string(literals.size()) + ")");
  }
  Clause c(static_cast<ClauseKind>(literals.size()));
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (!literals[i].valid()) throw DomainError("clause contains the zero literal");
    for (std::size_t j = 0; j < i; ++j) {
      if (literals[j].var() == literals[i].var()) {
        throw DomainError("clause repeats variable " + std::to_string(literals[i].var()));
      }
    }
    c.lits_[i] = literals[i];
  }
  c.size_ = static_cast<std::uint8_t>(literals.size());
  return c;
}

Clause Clause::of(std::initializer_list<std::int32_t> values) {
  std::array<Literal, kMaxArity> buf{};
  if (values.size() > kMaxArity) throw DomainError("clause arity must be 1, 2 or 3");
  std::size_t i = 0;
  for (std::int32_t v : values) buf[i++] = Literal(v);
  return of(std::span<const Literal>(buf.data(), values.size()));
}

int Clause::evaluate(std::span<const std::int8_t> x) const {
  if (kind_ == ClauseKind::Star) return 1;
  for (Literal l : literals()) {
    if (l.sign() * x[l.var() - 1] > 0) return 1;
  }
  return -1;
}

bool Clause::same_function(const Clause& other) const {
  if (kind_ != other.kind_) return false;
  auto a = lits_;
  auto b = other.lits_;
  std::sort(a.begin(), a.begin() + size_);
  std::sort(b.begin(), b.begin() + other.size_);
  return a == b;
}

Formula::Formula(Var n_vars, std::vector<Clause> clauses) : n_vars_(n_vars) {
  clauses_.reserve(clauses.size());
  for (const Clause& c : clauses) add(c);
}

void Formula::add(const Clause& c) {
  for (Literal l : c.literals()) {
    if (l.var() > n_vars_) {
      throw DomainError("literal " + std::to_string(l.value()) + " exceeds n_vars=" + std::to_string(n_vars_));
    }
  }
  clauses_.push_back(c);
}

std::size_t Formula::count(ClauseKind k) const {
  return static_cast<std::size_t>(
      std::count_if(clauses_.begin(), clauses_.end(), [k](const Clause& c) { return c.kind() == k; }));
}

int evaluate(const Formula& phi, std::span<const std::int8_t> x) {
  if (x.size() != phi.n_vars()) {
    throw DomainError("assignment length " + std::to_string(x.size()) + " != n_vars " +
                      std::to_string(phi.n_vars()));
  }
  for (const Clause& c : phi) {
    if (c.evaluate(x) < 0) return -1;
  }
  return 1;
}

Formula conjoin(const Formula& a, const Formula& b) {
  Formula out(std::max(a.n_vars(), b.n_vars()));
  out.reserve(a.size() + b.size());
  for (const Clause& c : a) out.add(c);
  for (const Clause& c : b) out.add(c);
  return out;
}

bool same_clause_multiset(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return false;
  auto key = [](const Clause& c) {
    std::vector<std::int32_t> k{static_cast<std::int32_t>(c.kind())};
    for (Literal l : c.literals()) k.push_back(l.value());
    std::sort(k.begin() + 1, k.end());
    return k;
  };
  std::map<std::vector<std::int32_t>, long> counts;
  for (const Clause& c : a) ++counts[key(c)];
  for (const Clause& c : b) --counts[key(c)];
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace dof
