#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <vector>

namespace dof {

using Var = std::uint32_t;

/// A literal in +-[n]: the sign is the required polarity of variable |value|.
///
/// Literal{} is a placeholder (value 0) used only to fill fixed-size storage;
/// every literal reachable through a public container is nonzero.
class Literal {
 public:
  constexpr Literal() = default;
  explicit Literal(std::int32_t value);

  constexpr std::int32_t value() const { return value_; }
  constexpr Var var() const { return static_cast<Var>(value_ < 0 ? -value_ : value_); }
  constexpr bool positive() const { return value_ > 0; }
  /// +1 or -1.
  constexpr int sign() const { return value_ > 0 ? 1 : -1; }
  constexpr bool valid() const { return value_ != 0; }

  constexpr Literal operator-() const {
    Literal l;
    l.value_ = -value_;
    return l;
  }

  /// Dense index in [0, 2n): 2(v-1) for +v, 2(v-1)+1 for -v.
  constexpr std::uint32_t index() const { return 2 * (var() - 1) + (value_ < 0 ? 1u : 0u); }
  static Literal from_index(std::uint32_t index);

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::int32_t value_ = 0;
};

/// True iff no variable appears with both signs.
bool is_consistent(std::span<const Literal> entries);

/// A consistent set of literals, i.e. a partial assignment fixing |L| variables.
///
/// Entries are kept sorted by value and deduplicated. Construction throws
/// DomainError on inconsistent input or a zero literal.
class LiteralSet {
 public:
  LiteralSet() = default;
  explicit LiteralSet(std::vector<Literal> entries);
  LiteralSet(std::initializer_list<std::int32_t> values);

  /// The canonical set [n] \ [n-f] = {+(n-f+1), ..., +n}.
  static LiteralSet canonical(Var n, Var f);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Literal>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool contains(Literal l) const;
  /// +1 / -1 if the variable is fixed to that value, 0 if unfixed.
  int value_of(Var v) const;
  /// Largest variable index mentioned (0 when empty).
  Var max_var() const;

  LiteralSet united(const LiteralSet& other) const;

  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;

 private:
  std::vector<Literal> entries_;
};

}  // namespace dof
