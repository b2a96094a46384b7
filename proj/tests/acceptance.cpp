// Acceptance gate: nine end-to-end criteria, each printed as a single
// PASS/FAIL line with its runtime against a pinned limit. Exit status is the
// number of failing criteria (0 = all green). Oracles here are deliberately
// independent of the library internals they judge.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fincat/harness.hpp"
#include "fincat/serialize.hpp"

using namespace fincat;

namespace {

// ---------------------------------------------------------------- oracles

bool leq(const FinCategory& c, Obj a, Obj b) { return !c.hom(a, b).empty(); }

std::optional<Obj> poset_meet(const FinCategory& c, Obj x, Obj y) {
  for (Obj z = 0; z < c.object_count(); ++z) {
    if (!leq(c, z, x) || !leq(c, z, y)) continue;
    bool greatest = true;
    for (Obj w = 0; w < c.object_count(); ++w)
      if (leq(c, w, x) && leq(c, w, y) && !leq(c, w, z)) greatest = false;
    if (greatest) return z;
  }
  return std::nullopt;
}

std::optional<Obj> poset_join(const FinCategory& c, Obj x, Obj y) {
  for (Obj z = 0; z < c.object_count(); ++z) {
    if (!leq(c, x, z) || !leq(c, y, z)) continue;
    bool least = true;
    for (Obj w = 0; w < c.object_count(); ++w)
      if (leq(c, x, w) && leq(c, y, w) && !leq(c, z, w)) least = false;
    if (least) return z;
  }
  return std::nullopt;
}

// The lattice law x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) checked element by element.
bool lattice_law_distributes(const FinCategory& c) {
  const Obj n = c.object_count();
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (Obj z = 0; z < n; ++z) {
        auto lhs = poset_meet(c, x, *poset_join(c, y, z));
        auto rhs = poset_join(c, *poset_meet(c, x, y), *poset_meet(c, x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

// Every component tuple, filtered by the naturality squares alone. Blows up
// combinatorially by design; callers keep the candidate space small.
std::vector<std::vector<Mor>> naive_transformations(const FunctorData& f,
                                                    const FunctorData& g) {
  const FinCategory& a = *f.source;
  const FinCategory& b = *f.target;
  const Obj n = a.object_count();

  std::vector<std::vector<Mor>> candidates(static_cast<std::size_t>(n));
  for (Obj x = 0; x < n; ++x) {
    auto hom = b.hom(f.object_map[static_cast<std::size_t>(x)],
                     g.object_map[static_cast<std::size_t>(x)]);
    candidates[static_cast<std::size_t>(x)].assign(hom.begin(), hom.end());
    if (candidates[static_cast<std::size_t>(x)].empty()) return {};
  }

  std::vector<std::vector<Mor>> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::vector<Mor> components(static_cast<std::size_t>(n));
  while (true) {
    for (Obj x = 0; x < n; ++x)
      components[static_cast<std::size_t>(x)] =
          candidates[static_cast<std::size_t>(x)][pick[static_cast<std::size_t>(x)]];
    bool natural = true;
    for (Mor m = 0; m < a.morphism_count() && natural; ++m) {
      const Mor left = b.compose(components[static_cast<std::size_t>(a.dst(m))],
                                 f.morphism_map[static_cast<std::size_t>(m)]);
      const Mor right = b.compose(g.morphism_map[static_cast<std::size_t>(m)],
                                  components[static_cast<std::size_t>(a.src(m))]);
      if (left != right) natural = false;
    }
    if (natural) out.push_back(components);

    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == candidates[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

double naive_space(const FunctorData& f, const FunctorData& g) {
  double space = 1;
  for (Obj x = 0; x < f.source->object_count(); ++x)
    space *= static_cast<double>(f.target->hom(f.object_map[static_cast<std::size_t>(x)],
                                               g.object_map[static_cast<std::size_t>(x)]).size());
  return space;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

CorpusSpec spec_of(std::string family, int param = 0) {
  CorpusSpec spec;
  spec.family = std::move(family);
  spec.param = param;
  return spec;
}

std::vector<CorpusSpec> poset_corpus() {
  std::vector<CorpusSpec> out;
  for (const CorpusSpec& spec : default_corpus())
    if (spec.family != "bool_matrix") out.push_back(spec);
  return out;
}

// -------------------------------------------------------------- criteria

bool criterion_suite(std::string& detail) {
  SuiteReport suite = run_full_suite(default_corpus());
  bool ok = suite.inconsistent == 0 && suite.entries.size() == default_corpus().size();
  for (const SuiteEntry& entry : suite.entries)
    ok = ok && entry.validated && entry.reports.size() == 7;
  detail = std::to_string(suite.entries.size()) + " members, consistent " +
           std::to_string(suite.consistent) + ", not-applicable " +
           std::to_string(suite.not_applicable) + ", inconsistent " +
           std::to_string(suite.inconsistent);
  return ok;
}

bool criterion_distributivity_oracle(std::string& detail) {
  bool ok = true;
  int checked = 0;
  for (const CorpusSpec& spec : poset_corpus()) {
    LimitCache cache(make_ref(build_corpus_member(spec)));
    TheoremReport report = is_distributive(cache, Scope::All);
    const bool oracle = lattice_law_distributes(*cache.category());
    if (report.conclusion != oracle) {
      detail = spec.label() + " disagrees with the lattice law";
      ok = false;
    }
    if (spec.family == "boolean" && spec.param == 2 && !report.conclusion) ok = false;
    if (spec.family == "m3" &&
        (report.conclusion || report.conclusion_witness != "(a,b,c)")) {
      detail = "m3 witness was " + report.conclusion_witness;
      ok = false;
    }
    if (spec.family == "n5" && report.conclusion) ok = false;
    ++checked;
  }
  if (ok) detail = std::to_string(checked) + " poset members agree";
  return ok;
}

bool criterion_iso_existence(std::string& detail) {
  bool ok = true;
  for (const char* family : {"m3", "n5"}) {
    LimitCache cache(make_ref(build_corpus_member(spec_of(family))));
    DeltaFunctors d = delta_functors(cache);
    SearchResult r = search_natural_transformations(d.lhs, d.rhs, true);
    if (!r.found.empty() || r.truncated) {
      detail = std::string(family) + ": expected decisive absence";
      ok = false;
    }
  }

  auto expect_identity_family = [&](const CorpusSpec& spec) {
    LimitCache cache(make_ref(build_corpus_member(spec)));
    const FinCategory& c = *cache.category();
    DeltaFunctors d = delta_functors(cache);
    SearchResult r = search_natural_transformations(d.lhs, d.rhs, true);
    if (r.found.empty() || r.truncated) {
      detail = spec.label() + ": no isomorphism found";
      return false;
    }
    const NatTransformData& t = r.found.front();
    for (std::size_t w = 0; w < t.components.size(); ++w) {
      if (d.lhs.object_map[w] != d.rhs.object_map[w] ||
          t.components[w] != c.identity(d.lhs.object_map[w])) {
        detail = spec.label() + ": family is not the identity";
        return false;
      }
    }
    return true;
  };
  for (int n = 1; n <= 3; ++n) ok = expect_identity_family(spec_of("chain", n)) && ok;
  ok = expect_identity_family(spec_of("boolean", 2)) && ok;
  if (ok) detail = "absence decisive on the two counterexamples, identity family elsewhere";
  return ok;
}

bool criterion_delta_construction(std::string& detail) {
  LimitCache m3(make_ref(gen_m3()));
  const FinCategory& c = *m3.category();
  const Mor delta = canonical_delta(m3, 1, 2, 3);
  auto bottom_to_a = c.hom(0, 1);
  bool ok = bottom_to_a.size() == 1 && delta == bottom_to_a.front() &&
            !is_invertible(c, delta).has_value();
  if (!ok) detail = "m3 comparison at (a,b,c) misbehaves";

  LimitCache b2(make_ref(gen_boolean_algebra(2)));
  const FinCategory& b = *b2.category();
  for (Obj x = 0; x < b.object_count(); ++x)
    for (Obj y = 0; y < b.object_count(); ++y)
      for (Obj z = 0; z < b.object_count(); ++z)
        if (!is_invertible(b, canonical_delta(b2, x, y, z))) {
          detail = "boolean(2) comparison not invertible";
          ok = false;
        }
  if (ok) detail = "unique non-invertible map on m3, all invertible on boolean(2)";
  return ok;
}

bool criterion_alpha_construction(std::string& detail) {
  LimitCache cache(make_ref(gen_bool_matrix(2)));
  const FinCategory& c = *cache.category();
  const Mor alpha = canonical_alpha(cache, 1, 1);
  bool ok = alpha == c.identity(2) && is_invertible(c, alpha).has_value();
  if (!ok) detail = "alpha at (1,1) is not the rank-two identity";

  TheoremReport report = is_semi_additive(cache, Scope::Existing);
  if (!report.conclusion) {
    detail = "a covered pair was not invertible";
    ok = false;
  }
  std::vector<std::vector<Obj>> skipped = report.skipped;
  std::sort(skipped.begin(), skipped.end());
  const std::vector<std::vector<Obj>> expected = {{1, 2}, {2, 1}, {2, 2}};
  if (skipped != expected) {
    detail = "uncovered pairs differ from the rank bound";
    ok = false;
  }
  if (ok) detail = "identity comparison at (1,1), uncovered pairs exactly past rank 2";
  return ok;
}

bool criterion_search_oracle(std::string& detail) {
  bool ok = true;
  int cases = 0;

  auto agree = [&](const std::string& label, const FunctorData& f, const FunctorData& g) {
    const double space = naive_space(f, g);
    if (space > 1e6) {
      detail = label + ": naive space too large for the oracle";
      ok = false;
      return std::vector<std::vector<Mor>>{};
    }
    SearchResult r = search_natural_transformations(f, g, false, 100'000'000, kAllResults);
    std::vector<std::vector<Mor>> found;
    for (const NatTransformData& t : r.found) found.push_back(t.components);
    std::sort(found.begin(), found.end());
    const std::vector<std::vector<Mor>> oracle = naive_transformations(f, g);
    if (r.truncated || found != oracle) {
      detail = label + ": search disagrees with naive enumeration";
      ok = false;
    }
    ++cases;
    return oracle;
  };

  for (const CorpusSpec& spec : default_corpus()) {
    CategoryRef c = make_ref(build_corpus_member(spec));
    FunctorData id = identity_functor(c);
    auto self = agree(spec.label() + " identity pair", id, id);
    if (spec.family == "m3" && self.size() != 1) {
      detail = "m3 identity pair should admit exactly one transformation";
      ok = false;
    }

    LimitCache cache(c);
    if (!cache.products_total() || !cache.coproducts_total()) continue;
    DeltaFunctors d = delta_functors(cache);
    agree(spec.label() + " ternary comparison pair", d.lhs, d.rhs);
    PlusTimesFunctors p = plus_times_functors(cache);
    agree(spec.label() + " binary comparison pair", p.plus, p.times);
  }
  if (ok) detail = std::to_string(cases) + " functor pairs match the naive oracle";
  return ok;
}

bool criterion_mutation_kill(std::string& detail) {
  int mutations = 0;
  int kills = 0;
  bool baselines_ok = true;

  auto structure_killed = [](const MonoidalStructure& m) {
    try {
      if (!validate_monoidal(m).ok) return true;
      if (m.braided() && !validate_braiding(m).ok) return true;
    } catch (const StructuralError&) {
      return true;
    }
    return false;
  };
  auto functor_killed = [](const MonoidalFunctorData& f) {
    try {
      return !validate_monoidal_functor(f).ok;
    } catch (const StructuralError&) {
      return true;
    }
  };
  auto mutate_structure = [&](const MonoidalStructure& base, auto&& change) {
    MonoidalStructure mutant = base;
    change(mutant);
    ++mutations;
    if (structure_killed(mutant)) ++kills;
  };
  auto mutate_functor = [&](const MonoidalFunctorData& base, auto&& change) {
    MonoidalFunctorData mutant = base;
    change(mutant);
    ++mutations;
    if (functor_killed(mutant)) ++kills;
  };

  for (const CorpusSpec& spec : poset_corpus()) {
    LimitCache cache(make_ref(build_corpus_member(spec)));
    const FinCategory& c = *cache.category();
    const Mor k = c.morphism_count();
    const Obj n = c.object_count();
    auto next_mor = [k](Mor v) { return static_cast<Mor>((v + 1) % k); };

    for (MonoidalRef base : {cartesian_monoidal(cache), cocartesian_monoidal(cache)}) {
      if (!validate_monoidal(*base).ok || !validate_braiding(*base).ok)
        baselines_ok = false;
      // A single-morphism category offers no wrong value to mutate to.
      if (k < 2) continue;
      mutate_structure(*base, [&](MonoidalStructure& m) {
        m.associator[0] = next_mor(m.associator[0]);
      });
      mutate_structure(*base, [&](MonoidalStructure& m) {
        m.left_unitor.back() = next_mor(m.left_unitor.back());
      });
      mutate_structure(*base, [&](MonoidalStructure& m) {
        m.right_unitor.front() = next_mor(m.right_unitor.front());
      });
      mutate_structure(*base, [&](MonoidalStructure& m) {
        m.braiding[m.braiding.size() / 2] = next_mor(m.braiding[m.braiding.size() / 2]);
      });
      mutate_structure(*base, [&](MonoidalStructure& m) {
        m.tensor.morphism_map.back() = next_mor(m.tensor.morphism_map.back());
      });
      if (n > 1)
        mutate_structure(*base, [&](MonoidalStructure& m) { m.unit = (m.unit + 1) % n; });
    }

    if (k >= 2 && (spec.family == "chain" || spec.family == "boolean" ||
                   spec.family == "m3")) {
      MonoidalFunctorData doubled = tensor_strong_monoidal(cartesian_monoidal(cache));
      if (!validate_monoidal_functor(doubled).ok) baselines_ok = false;
      mutate_functor(doubled, [&](MonoidalFunctorData& f) {
        f.phi[1] = next_mor(f.phi[1]);
      });
      mutate_functor(doubled, [&](MonoidalFunctorData& f) { f.phi0 = next_mor(f.phi0); });
    }
  }

  detail = std::to_string(mutations) + " mutations, " + std::to_string(kills) +
           " killed" + (baselines_ok ? "" : ", baseline failed");
  return baselines_ok && mutations >= 50 && kills == mutations;
}

bool criterion_strength_instance(std::string& detail) {
  LimitCache cache(make_ref(gen_boolean_algebra(2)));
  const FinCategory& c = *cache.category();
  MonoidalFunctorData meet = meet_lax_functor(cache, 1);
  bool ok = validate_monoidal_functor(meet).ok;

  const Obj n = c.object_count();
  for (Obj y = 0; y < n; ++y)
    for (Obj z = 0; z < n; ++z)
      if (!is_invertible(c, meet.phi[static_cast<std::size_t>(y) * n + z])) ok = false;

  auto [lhs, rhs] = strength_square_functors(meet);
  MonoidalNatData psi{lhs, rhs, meet.phi};
  TheoremReport report = check_strength_theorem(meet, psi);
  ok = ok && report.verdict == Verdict::consistent && report.conclusion &&
       report.hypotheses_hold();
  detail = ok ? "lax structure valid, all structure maps invertible, replay consistent"
              : std::string("replay verdict: ") + to_string(report.verdict);
  return ok;
}

bool criterion_serialization(std::string& detail) {
  const std::string first_path = "/tmp/fincat_acceptance_first.json";
  const std::string second_path = "/tmp/fincat_acceptance_second.json";
  bool ok = true;
  for (const CorpusSpec& spec : default_corpus()) {
    FinCategory c = build_corpus_member(spec);
    save_category(c, first_path);
    save_category(load_category(first_path), second_path);
    if (read_file(first_path) != read_file(second_path) ||
        read_file(first_path) != category_to_json(c)) {
      detail = spec.label() + ": bytes drifted across a round-trip";
      ok = false;
    }
  }
  std::remove(first_path.c_str());
  std::remove(second_path.c_str());
  if (ok) detail = "byte-stable for every corpus member";
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {"full-suite consistency", 60, criterion_suite},
      {"distributivity oracle agreement", 5, criterion_distributivity_oracle},
      {"comparison isomorphism existence", 10, criterion_iso_existence},
      {"ternary comparison construction", 1, criterion_delta_construction},
      {"binary comparison construction", 5, criterion_alpha_construction},
      {"search oracle equivalence", 30, criterion_search_oracle},
      {"coherence mutation kill", 30, criterion_mutation_kill},
      {"strength theorem positive instance", 5, criterion_strength_instance},
      {"serialization byte stability", 5, criterion_serialization},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= criterion.limit_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!ok) ++failed;
    std::printf("%s %zu. %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criterion.name, seconds, criterion.limit_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
