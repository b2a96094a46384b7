#pragma once

#include "fincat/generators.hpp"
#include "fincat/monoidal.hpp"
#include "fincat/search.hpp"

namespace fincat {

// Each verifier replays one implication over a concrete category: hypotheses
// are established mechanically (a search only counts as evidence when it is
// decisive within its budget), the conclusion is recomputed independently,
// and the verdict follows the TheoremReport rules. Whenever the comparison
// family is decisively absent and the conclusion fails too, the contrapositive
// is recorded as a note.

// If the ternary comparison family has a natural isomorphism and products by
// the initial object collapse to it, the category is distributive.
TheoremReport verify_absorption_distributivity(const LimitCache& cache,
                                               std::uint64_t node_budget = kDefaultSearchBudget);

// Under the same comparison family, the self-product of the initial object is
// initial again and the initial object is subterminal.
TheoremReport verify_zero_subterminal(const LimitCache& cache,
                                      std::uint64_t node_budget = kDefaultSearchBudget);

// With a zero object on top of the comparison family, everything collapses:
// exactly one morphism between any two objects.
TheoremReport verify_pointed_trivial(const LimitCache& cache,
                                     std::uint64_t node_budget = kDefaultSearchBudget);

// The comparison family alone already forces distributivity.
TheoremReport verify_distributivity(const LimitCache& cache,
                                    std::uint64_t node_budget = kDefaultSearchBudget);

// A natural isomorphism between the binary coproduct and product functors
// forces a zero object and invertible canonical maps, i.e. semi-additivity.
TheoremReport verify_additivity(const LimitCache& cache,
                                std::uint64_t node_budget = kDefaultSearchBudget);

// check_strength_theorem instantiated at every meet functor a x -, with the
// canonical comparisons as the candidate isomorphism, plus the identity
// functor between the meet and join structures when a zero object exists.
TheoremReport verify_monoidal_strength(const LimitCache& cache);

// check_coproduct_preservation instantiated at every meet functor.
TheoremReport verify_coproduct_preservation(const LimitCache& cache);

struct SuiteMember {
  std::string label;
  CategoryRef category;
};

struct SuiteEntry {
  std::string label;
  bool validated = false;
  std::vector<std::string> validation_failures;
  std::vector<TheoremReport> reports;  // the seven verifiers, in declaration order
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  int consistent = 0;
  int not_applicable = 0;
  int inconsistent = 0;

  bool ok() const { return inconsistent == 0; }
};

// Members failing validation are recorded and skipped; entries keep the input
// order regardless of how the work is scheduled.
SuiteReport run_full_suite(const std::vector<SuiteMember>& members,
                           std::uint64_t node_budget = kDefaultSearchBudget);
SuiteReport run_full_suite(const std::vector<CorpusSpec>& corpus,
                           std::uint64_t node_budget = kDefaultSearchBudget);

}  // namespace fincat
