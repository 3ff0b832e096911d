#pragma once

#include <cstdint>
#include <optional>

#include "nctb/concept.hpp"

namespace nctb {

/// above_kmax: every k up to k_max was refuted, so the value exceeds k_max.
enum class SolveStatus { optimal, budget_exceeded, above_kmax };

const char *to_string(SolveStatus status);

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct DecisionResult {
  /// Empty when the budget ran out before an answer.
  std::optional<bool> answer;
  std::optional<TeachingMap> witness;
  std::uint64_t nodes = 0;
};

/// Is there a non-clashing map of size <= k? Ground sets are limited to 64
/// elements. Deterministic: the same input yields the same witness.
DecisionResult nctd_decision(const ConceptClass &cc, int k, bool positive_only,
                             std::uint64_t budget = kDefaultNodeBudget);

struct SolveResult {
  /// Minimum size when optimal; otherwise the smallest size not yet ruled out.
  int k = 0;
  std::optional<TeachingMap> witness;
  bool positive_only = false;
  std::uint64_t nodes = 0;
  SolveStatus status = SolveStatus::optimal;
};

/// Tries k = 0, 1, ..., k_max in turn; the node budget is shared.
SolveResult nctd_exact(const ConceptClass &cc, bool positive_only, int k_max,
                       std::uint64_t budget = kDefaultNodeBudget);

} // namespace nctb
