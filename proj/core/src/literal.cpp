#include "dof/literal.hpp"

#include <algorithm>
#include <string>

#include "dof/errors.hpp"

namespace dof {

Literal::Literal(std::int32_t value) : value_(value) {
  if (value == 0) throw DomainError("literal value must be nonzero");
}

Literal Literal::from_index(std::uint32_t index) {
  const auto v = static_cast<std::int32_t>(index / 2 + 1);
  return Literal(index % 2 == 0 ? v : -v);
}

bool is_consistent(std::span<const Literal> entries) {
  std::vector<std::int32_t> values;
  values.reserve(entries.size());
  for (Literal l : entries) values.push_back(l.value());
  std::sort(values.begin(), values.end());
  for (std::int32_t v : values) {
    if (v > 0 && std::binary_search(values.begin(), values.end(), -v)) return false;
  }
  return true;
}

LiteralSet::LiteralSet(std::vector<Literal> entries) : entries_(std::move(entries)) {
  for (Literal l : entries_) {
    if (!l.valid()) throw DomainError("literal set contains the zero literal");
  }
  std::sort(entries_.begin(), entries_.end());
  entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
  if (!is_consistent(entries_)) throw DomainError("literal set is inconsistent (contains some v and -v)");
}

LiteralSet::LiteralSet(std::initializer_list<std::int32_t> values) {
  std::vector<Literal> lits;
  lits.reserve(values.size());
  for (std::int32_t v : values) lits.emplace_back(v);
  *this = LiteralSet(std::move(lits));
}

LiteralSet LiteralSet::canonical(Var n, Var f) {
  if (f > n) throw DomainError("cannot fix " + std::to_string(f) + " of " + std::to_string(n) + " variables");
  std::vector<Literal> lits;
  lits.reserve(f);
  for (Var v = n - f + 1; v <= n; ++v) lits.emplace_back(static_cast<std::int32_t>(v));
  return LiteralSet(std::move(lits));
}

bool LiteralSet::contains(Literal l) const { return std::binary_search(entries_.begin(), entries_.end(), l); }

int LiteralSet::value_of(Var v) const {
  const auto sv = static_cast<std::int32_t>(v);
  if (contains(Literal(sv))) return 1;
  if (contains(Literal(-sv))) return -1;
  return 0;
}

Var LiteralSet::max_var() const {
  Var m = 0;
  for (Literal l : entries_) m = std::max(m, l.var());
  return m;
}

LiteralSet LiteralSet::united(const LiteralSet& other) const {
  std::vector<Literal> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return LiteralSet(std::move(all));
}

}  // namespace dof
