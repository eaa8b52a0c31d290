#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "dof/literal.hpp"

namespace dof {

/// Clause fate / kind. Zero is the constant-false clause, Star the
/// constant-true clause; the others are named by arity.
enum class ClauseKind : std::uint8_t { Zero = 0, Unit = 1, Binary = 2, Ternary = 3, Star = 4 };

inline constexpr std::size_t kNumKinds = 5;
inline constexpr std::size_t kMaxArity = 3;

constexpr std::size_t kind_index(ClauseKind k) { return static_cast<std::size_t>(k); }
std::string_view kind_name(ClauseKind k);

/// A disjunction of up to three literals over pairwise distinct variables,
/// or one of the constant clauses.
class Clause {
 public:
  /// Builds a 1-, 2- or 3-clause in the given literal order. Throws
  /// DomainError on repeated variables or unsupported arity.
  static Clause of(std::span<const Literal> literals);
  static Clause of(std::initializer_list<std::int32_t> values);
  static Clause zero() { return Clause(ClauseKind::Zero); }
  static Clause star() { return Clause(ClauseKind::Star); }

  ClauseKind kind() const { return kind_; }
  std::size_t arity() const { return size_; }
  std::span<const Literal> literals() const { return {lits_.data(), size_}; }
  Literal operator[](std::size_t i) const { return lits_[i]; }

  /// Value at x in {-1,1}^n (x[v-1] is the value of variable v).
  int evaluate(std::span<const std::int8_t> x) const;

  /// Set-based equality: clauses are order-free functions.
  bool same_function(const Clause& other) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  explicit Clause(ClauseKind kind) : kind_(kind) {}

  std::array<Literal, kMaxArity> lits_{};
  std::uint8_t size_ = 0;
  ClauseKind kind_ = ClauseKind::Zero;
};

using Assignment = std::vector<std::int8_t>;

/// CNF formula over variables 1..n_vars. No clauses means the constant-1
/// formula.
class Formula {
 public:
  Formula() = default;
  explicit Formula(Var n_vars) : n_vars_(n_vars) {}
  Formula(Var n_vars, std::vector<Clause> clauses);

  Var n_vars() const { return n_vars_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& operator[](std::size_t j) const { return clauses_[j]; }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }

  /// Throws DomainError if the clause mentions a variable > n_vars.
  void add(const Clause& c);
  void reserve(std::size_t m) { clauses_.reserve(m); }

  std::size_t count(ClauseKind k) const;
  bool has_kind(ClauseKind k) const { return count(k) > 0; }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Var n_vars_ = 0;
  std::vector<Clause> clauses_;
};

/// min over clauses of max over literals; Zero -> -1, Star -> +1, empty -> +1.
/// Throws DomainError when x.size() != n_vars.
int evaluate(const Formula& phi, std::span<const std::int8_t> x);

/// Conjunction over the same variable set (n = max of the two).
Formula conjoin(const Formula& a, const Formula& b);

/// True if both formulas contain the same multiset of clause functions.
bool same_clause_multiset(const Formula& a, const Formula& b);

}  // namespace dof
