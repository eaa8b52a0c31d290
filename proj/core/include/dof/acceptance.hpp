#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace dof::acceptance {

struct CriterionResult {
  std::string id;     // "A1" .. "A10"
  std::string title;
  bool pass = false;
  std::string detail;  // measured values against the tolerance
  double seconds = 0.0;
};

struct Options {
  std::uint64_t seed = 20240917;
  unsigned workers = 1;
  /// Ids to run; empty runs all of them.
  std::vector<std::string> only;
  /// Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Ids of all criteria in run order.
std::vector<std::string> criterion_ids();

/// Runs the acceptance criteria at their fixed sizes and tolerances. Each
/// criterion draws from its own seed stream, so results do not depend on
/// which others are selected. An exception inside a criterion marks it
/// failed with the message as detail.
std::vector<CriterionResult> run_acceptance(const Options& opts);

/// "A3 PASS  title  [detail] (1.2 s)"
std::string format_line(const CriterionResult& r);

}  // namespace dof::acceptance
