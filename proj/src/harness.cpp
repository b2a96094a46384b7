#include "fincat/harness.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

namespace {

// Outcome of a single decisive-or-not isomorphism search.
struct IsoProbe {
  bool found = false;
  bool truncated = false;
  std::string evidence;

  bool decisively_absent() const { return !found && !truncated; }
};

IsoProbe probe_iso(const FunctorData& lhs, const FunctorData& rhs,
                   std::uint64_t node_budget) {
  SearchResult result =
      search_natural_transformations(lhs, rhs, true, node_budget, 1);
  IsoProbe probe;
  probe.found = !result.found.empty();
  probe.truncated = result.truncated;
  const std::string nodes = std::to_string(result.nodes) + " nodes";
  if (probe.found)
    probe.evidence = "found after " + nodes;
  else if (probe.truncated)
    probe.evidence = "budget exhausted after " + nodes;
  else
    probe.evidence = "none exists (search exhausted after " + nodes + ")";
  return probe;
}

std::string pair_list(const FinCategory& c,
                      const std::vector<std::array<Obj, 2>>& pairs) {
  std::string out;
  const std::size_t shown = std::min<std::size_t>(pairs.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out += ", ";
    out += "(" + object_label(c, pairs[i][0]) + ", " +
           object_label(c, pairs[i][1]) + ")";
  }
  if (pairs.size() > shown) out += ", ...";
  return out;
}

// Records the coverage hypothesis shared by the comparison-family verifiers
// and returns whether every binary product and coproduct exists.
bool coverage_hypothesis(TheoremReport& report, const LimitCache& cache) {
  const FinCategory& c = *cache.category();
  const bool total = cache.products_total() && cache.coproducts_total();
  std::string evidence;
  if (!cache.products_total())
    evidence += "missing products: " + pair_list(c, cache.missing_products());
  if (!cache.coproducts_total()) {
    if (!evidence.empty()) evidence += "; ";
    evidence +=
        "missing coproducts: " + pair_list(c, cache.missing_coproducts());
  }
  report.add_hypothesis("total product and coproduct coverage", total,
                        evidence);
  return total;
}

// Probes for a natural isomorphism between the two legs of the ternary
// comparison family and records the result as a hypothesis. Only meaningful
// when coverage is total; otherwise the family itself is undefined.
IsoProbe ternary_family_hypothesis(TheoremReport& report,
                                   const LimitCache& cache, bool total,
                                   std::uint64_t node_budget) {
  if (!total) {
    report.add_hypothesis("ternary comparison family has a natural isomorphism",
                          false, "family undefined without total coverage");
    return {};
  }
  DeltaFunctors family = delta_functors(cache);
  IsoProbe probe = probe_iso(family.lhs, family.rhs, node_budget);
  report.add_hypothesis("ternary comparison family has a natural isomorphism",
                        probe.found, probe.evidence);
  if (probe.truncated)
    report.notes.push_back("existence undecided within the node budget");
  return probe;
}

bool object_is_initial(const FinCategory& c, Obj x) {
  for (Obj y = 0; y < c.object_count(); ++y)
    if (c.hom(x, y).size() != 1) return false;
  return true;
}

void settle_verdict(TheoremReport& report) {
  if (!report.hypotheses_hold())
    report.verdict = Verdict::not_applicable;
  else
    report.verdict =
        report.conclusion ? Verdict::consistent : Verdict::inconsistent;
}

}  // namespace

TheoremReport verify_absorption_distributivity(const LimitCache& cache,
                                               std::uint64_t node_budget) {
  TheoremReport report;
  report.id = "absorption-distributivity";
  const FinCategory& c = *cache.category();

  const bool total = coverage_hypothesis(report, cache);
  ternary_family_hypothesis(report, cache, total, node_budget);

  if (cache.initial()) {
    bool absorbing = true;
    std::string where;
    for (Obj x = 0; x < c.object_count() && absorbing; ++x) {
      const ProductWitness* w = cache.product(x, *cache.initial());
      if (!w) {
        absorbing = false;
        where = "product with " + object_label(c, x) + " missing";
      } else if (!object_is_initial(c, w->apex)) {
        absorbing = false;
        where = "product with " + object_label(c, x) + " is " +
                object_label(c, w->apex) + ", not initial";
      }
    }
    report.add_hypothesis("products with the initial object stay initial",
                          absorbing, where);
  } else {
    report.add_hypothesis("products with the initial object stay initial",
                          false, "no initial object");
  }

  if (total) {
    TheoremReport dist = is_distributive(cache, Scope::All);
    report.conclusion = dist.conclusion;
    report.conclusion_witness = dist.conclusion_witness;
  }
  settle_verdict(report);
  return report;
}

TheoremReport verify_zero_subterminal(const LimitCache& cache,
                                      std::uint64_t node_budget) {
  TheoremReport report;
  report.id = "zero-subterminal";
  const FinCategory& c = *cache.category();

  const bool total = coverage_hypothesis(report, cache);
  ternary_family_hypothesis(report, cache, total, node_budget);

  const bool has_initial = cache.initial().has_value();
  report.add_hypothesis("initial object present", has_initial,
                        has_initial ? object_label(c, *cache.initial()) : "");

  if (total && has_initial) {
    const Obj zero = *cache.initial();
    const ProductWitness& square = cache.require_product(zero, zero);
    const bool self_initial = object_is_initial(c, square.apex);
    const bool subterminal = is_subterminal(c, zero);
    report.conclusion = self_initial && subterminal;
    if (!self_initial)
      report.conclusion_witness = "self-product " +
                                  object_label(c, square.apex) +
                                  " is not initial";
    else if (!subterminal)
      report.conclusion_witness =
          object_label(c, zero) + " is not subterminal";
  }
  settle_verdict(report);
  return report;
}

TheoremReport verify_pointed_trivial(const LimitCache& cache,
                                     std::uint64_t node_budget) {
  TheoremReport report;
  report.id = "pointed-trivial";
  const FinCategory& c = *cache.category();

  const bool pointed = cache.zero().has_value();
  report.add_hypothesis(
      "zero object present", pointed,
      pointed ? object_label(c, cache.zero()->zero) : "");
  const bool total = coverage_hypothesis(report, cache);
  ternary_family_hypothesis(report, cache, total, node_budget);

  report.conclusion = is_trivial(c);
  if (!report.conclusion)
    report.conclusion_witness = "category is not trivial";
  settle_verdict(report);
  return report;
}

TheoremReport verify_distributivity(const LimitCache& cache,
                                    std::uint64_t node_budget) {
  TheoremReport report;
  report.id = "distributivity";

  const bool total = coverage_hypothesis(report, cache);
  IsoProbe probe = ternary_family_hypothesis(report, cache, total, node_budget);

  if (total) {
    TheoremReport dist = is_distributive(cache, Scope::All);
    report.conclusion = dist.conclusion;
    report.conclusion_witness = dist.conclusion_witness;
    if (probe.decisively_absent() && !dist.conclusion)
      report.notes.push_back(
          "contrapositive confirmed: no comparison isomorphism and "
          "distributivity fails at " +
          dist.conclusion_witness);
  }
  settle_verdict(report);
  return report;
}

TheoremReport verify_additivity(const LimitCache& cache,
                                std::uint64_t node_budget) {
  TheoremReport report;
  report.id = "additivity";

  const bool total = coverage_hypothesis(report, cache);
  IsoProbe probe;
  if (total) {
    PlusTimesFunctors family = plus_times_functors(cache);
    probe = probe_iso(family.plus, family.times, node_budget);
    report.add_hypothesis("binary comparison family has a natural isomorphism",
                          probe.found, probe.evidence);
    if (probe.truncated)
      report.notes.push_back("existence undecided within the node budget");
  } else {
    report.add_hypothesis("binary comparison family has a natural isomorphism",
                          false, "family undefined without total coverage");
  }

  if (total) {
    TheoremReport semi = is_semi_additive(cache, Scope::All);
    report.conclusion = cache.zero().has_value() && semi.conclusion;
    report.conclusion_witness = semi.conclusion_witness;
    if (probe.decisively_absent() && !report.conclusion)
      report.notes.push_back(
          "contrapositive confirmed: no comparison isomorphism and the "
          "category is not semi-additive");
  }
  settle_verdict(report);
  return report;
}

namespace {

// Shared skeleton for the verifiers that replay a theorem once per canonical
// instance: each instance contributes one hypothesis record, and the
// aggregate is inconsistent exactly when some instance is.
struct InstanceAggregate {
  TheoremReport report;
  int applicable = 0;
  int instances = 0;
  bool all_conclusions = true;
  bool any_inconsistent = false;

  void absorb(const std::string& label, const TheoremReport& instance) {
    ++instances;
    std::string evidence = to_string(instance.verdict);
    for (const auto& h : instance.hypotheses)
      if (!h.satisfied) {
        evidence += "; " + h.name + " fails";
        break;
      }
    report.add_hypothesis(label, instance.hypotheses_hold(), evidence);
    if (instance.verdict == Verdict::inconsistent) {
      any_inconsistent = true;
      report.notes.push_back(label + ": replay inconsistent");
      for (const auto& note : instance.notes)
        report.notes.push_back(label + ": " + note);
    }
    if (instance.hypotheses_hold()) {
      ++applicable;
      all_conclusions = all_conclusions && instance.conclusion;
    }
  }

  TheoremReport finish() {
    report.conclusion = applicable == instances && all_conclusions;
    if (any_inconsistent)
      report.verdict = Verdict::inconsistent;
    else if (!report.hypotheses_hold())
      report.verdict = Verdict::not_applicable;
    else
      report.verdict = Verdict::consistent;
    return std::move(report);
  }
};

// The structures both instance verifiers need exist exactly when coverage is
// total and an initial object provides the join unit.
bool instance_prerequisites(TheoremReport& report, const LimitCache& cache) {
  const bool ready = cache.products_total() && cache.coproducts_total() &&
                     cache.initial().has_value();
  report.add_hypothesis("meet and join structures available", ready,
                        ready ? "" : "coverage partial or no initial object");
  return ready;
}

}  // namespace

TheoremReport verify_monoidal_strength(const LimitCache& cache) {
  InstanceAggregate agg;
  agg.report.id = "monoidal-strength";
  const FinCategory& c = *cache.category();

  if (!instance_prerequisites(agg.report, cache)) {
    agg.report.verdict = Verdict::not_applicable;
    return std::move(agg.report);
  }

  MonoidalRef cocart = cocartesian_monoidal(cache);
  for (Obj a = 0; a < c.object_count(); ++a) {
    MonoidalFunctorData meet = meet_lax_functor(cache, a, cocart);
    auto [lhs, rhs] = strength_square_functors(meet);
    MonoidalNatData psi{lhs, rhs, meet.phi};
    agg.absorb("canonical comparison at " + object_label(c, a),
               check_strength_theorem(meet, psi));
  }

  if (cache.zero()) {
    // The identity functor carries the binary comparison maps as a lax
    // structure from the meet monoidal category to the join one.
    const Obj n = c.object_count();
    MonoidalFunctorData bridge;
    bridge.source = cartesian_monoidal(cache);
    bridge.target = cocart;
    bridge.functor = identity_functor(cache.category());
    bridge.phi.resize(static_cast<std::size_t>(n) * n);
    for (Obj y = 0; y < n; ++y)
      for (Obj z = 0; z < n; ++z)
        bridge.phi[static_cast<std::size_t>(y) * n + z] =
            canonical_alpha(cache, y, z);
    bridge.phi0 = c.hom(cocart->unit, bridge.source->unit).front();
    auto [lhs, rhs] = strength_square_functors(bridge);
    MonoidalNatData psi{lhs, rhs, bridge.phi};
    agg.absorb("identity between join and meet structures",
               check_strength_theorem(bridge, psi));
  }

  return agg.finish();
}

TheoremReport verify_coproduct_preservation(const LimitCache& cache) {
  InstanceAggregate agg;
  agg.report.id = "coproduct-preservation";
  const FinCategory& c = *cache.category();

  if (!instance_prerequisites(agg.report, cache)) {
    agg.report.verdict = Verdict::not_applicable;
    return std::move(agg.report);
  }

  MonoidalRef cocart = cocartesian_monoidal(cache);
  for (Obj a = 0; a < c.object_count(); ++a) {
    MonoidalFunctorData meet = meet_lax_functor(cache, a, cocart);
    auto [lhs, rhs] = coproduct_comparison_functors(meet.functor, cache, cache);
    NatTransformData psi{lhs, rhs, meet.phi};
    agg.absorb("canonical comparison at " + object_label(c, a),
               check_coproduct_preservation(meet.functor, psi, cache, cache));
  }

  return agg.finish();
}

SuiteReport run_full_suite(const std::vector<SuiteMember>& members,
                           std::uint64_t node_budget) {
  SuiteReport suite;
  suite.entries.reserve(members.size());
  for (const SuiteMember& member : members) {
    SuiteEntry entry;
    entry.label = member.label;
    ValidationReport validation = validate_category(*member.category);
    entry.validated = validation.ok;
    for (const ValidationFailure& failure : validation.failures) {
      std::string where;
      for (Mor m : failure.where) {
        if (!where.empty()) where += ", ";
        where += std::to_string(m);
      }
      entry.validation_failures.push_back(failure.law + " at [" + where + "]");
    }
    if (entry.validated) {
      LimitCache cache(member.category);
      entry.reports.push_back(
          verify_absorption_distributivity(cache, node_budget));
      entry.reports.push_back(verify_zero_subterminal(cache, node_budget));
      entry.reports.push_back(verify_pointed_trivial(cache, node_budget));
      entry.reports.push_back(verify_distributivity(cache, node_budget));
      entry.reports.push_back(verify_additivity(cache, node_budget));
      entry.reports.push_back(verify_monoidal_strength(cache));
      entry.reports.push_back(verify_coproduct_preservation(cache));
      for (const TheoremReport& report : entry.reports) {
        switch (report.verdict) {
          case Verdict::consistent: ++suite.consistent; break;
          case Verdict::not_applicable: ++suite.not_applicable; break;
          case Verdict::inconsistent: ++suite.inconsistent; break;
        }
      }
    }
    suite.entries.push_back(std::move(entry));
  }
  return suite;
}

SuiteReport run_full_suite(const std::vector<CorpusSpec>& corpus,
                           std::uint64_t node_budget) {
  std::vector<SuiteMember> members;
  members.reserve(corpus.size());
  for (const CorpusSpec& spec : corpus)
    members.push_back({spec.label(), make_ref(build_corpus_member(spec))});
  return run_full_suite(members, node_budget);
}

}  // namespace fincat
