#pragma once

#include "fincat/functor.hpp"

namespace fincat {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;
inline constexpr std::size_t kAllResults = static_cast<std::size_t>(-1);

struct SearchResult {
  std::vector<NatTransformData> found;
  bool truncated = false;         // budget ran out; absence of results proves nothing
  std::uint64_t nodes = 0;        // candidate assignments attempted
};

// Exhaustive backtracking over component choices. Objects are assigned in
// ascending order of candidate count (object index breaks ties), candidates
// in ascending morphism index, and every naturality square between assigned
// objects prunes immediately, so results arrive in a fixed deterministic
// order. Each attempted assignment costs one node against the budget.
SearchResult search_natural_transformations(const FunctorData& f, const FunctorData& g,
                                            bool iso_only,
                                            std::uint64_t node_budget = kDefaultSearchBudget,
                                            std::size_t max_results = kAllResults);

// First natural isomorphism found, if any. A nullopt return can also mean
// the budget was exhausted; callers that need to distinguish should use
// search_natural_transformations and read the truncation flag.
std::optional<NatTransformData> exists_natural_iso(const FunctorData& f, const FunctorData& g,
                                                   std::uint64_t node_budget = kDefaultSearchBudget);

}  // namespace fincat
