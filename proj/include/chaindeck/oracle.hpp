#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "chaindeck/digraph.hpp"
#include "chaindeck/spectrum.hpp"

namespace chaindeck {

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

std::string search_status_name(SearchStatus s);

inline constexpr std::int64_t kUnlimitedBudget = INT64_MAX;

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Decomposition> witness;  // present iff Found
  std::int64_t nodes_explored = 0;
  std::int64_t budget = 0;
};

// Exhaustive backtracking over arc partitions with the given profile.
//
// Parts are placed one at a time; each new part must cover the currently
// smallest uncovered arc in (tail, head) order, and the candidate parts for
// that arc are generated in a fixed order (shorter lengths first, then the
// arc's position within the part, then extension vertices ascending). Every
// partition is therefore generated exactly once, which makes an Exhausted
// verdict a proof of non-existence without any symmetry argument.
//
// With require_balanced, a profile whose forced k is non-integral fails at
// the root with zero nodes. prune enables the balance feasibility cuts
// (per-vertex path quota vs. remaining degrees); disabling it keeps the same
// enumeration but checks balance only on complete partitions, which is what
// the pruned/unpruned cross-validation compares. A node is one invocation of
// the recursive step; the budget is measured in nodes, never wall clock.
SearchOutcome search(int n, const LengthProfile& profile, bool require_balanced,
                     std::int64_t budget_nodes, bool prune = true);

}  // namespace chaindeck
