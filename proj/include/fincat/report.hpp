#pragma once

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

// consistent:     fully decided and in agreement with the expected implication
// not_applicable: a hypothesis failed, a search was inconclusive, or coverage
//                 was partial, so the implication was never put to the test
// inconsistent:   every hypothesis held and the conclusion still failed;
//                 since the implications checked here are established facts,
//                 this always points at a defect in the engine
enum class Verdict { consistent, not_applicable, inconsistent };

const char* to_string(Verdict v);

struct HypothesisRecord {
  std::string name;
  bool satisfied = false;
  std::string evidence;
};

// Shared result shape for the theorem checks and for the decision procedures
// built on the same machinery. For decision procedures the boolean answer is
// `conclusion`, and `verdict` only records whether the question was fully
// decided (consistent) or left open by partial coverage (not_applicable).
struct TheoremReport {
  std::string id;
  std::vector<HypothesisRecord> hypotheses;
  bool conclusion = false;
  std::string conclusion_witness;  // e.g. the first failing tuple
  Verdict verdict = Verdict::not_applicable;
  std::vector<std::string> notes;
  std::vector<std::vector<Obj>> skipped;  // tuples left unchecked for lack of witnesses

  bool hypotheses_hold() const;
  HypothesisRecord& add_hypothesis(std::string name, bool satisfied, std::string evidence = "");
};

}  // namespace fincat
