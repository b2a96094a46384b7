#include "fincat/report.hpp"

#include <algorithm>

namespace fincat {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::not_applicable: return "not-applicable";
    case Verdict::inconsistent: return "inconsistent";
  }
  return "?";
}

bool TheoremReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const HypothesisRecord& h) { return h.satisfied; });
}

HypothesisRecord& TheoremReport::add_hypothesis(std::string name, bool satisfied,
                                                std::string evidence) {
  hypotheses.push_back({std::move(name), satisfied, std::move(evidence)});
  return hypotheses.back();
}

}  // namespace fincat
