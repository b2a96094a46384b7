#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fincat/harness.hpp"
#include "fincat/serialize.hpp"

using namespace fincat;

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  bool json = false;
  bool strict = false;
  std::uint64_t budget = kDefaultSearchBudget;
};

// Not-applicable means the question was never decided, so it only fails the
// exit code under --strict.
int verdict_exit(Verdict verdict, const Options& opt) {
  switch (verdict) {
    case Verdict::consistent: return kOk;
    case Verdict::not_applicable: return opt.strict ? kNegative : kOk;
    case Verdict::inconsistent: return kNegative;
  }
  return kNegative;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ordered_json report_to_json(const TheoremReport& report) {
  ordered_json j;
  j["id"] = report.id;
  j["verdict"] = to_string(report.verdict);
  ordered_json hypotheses = ordered_json::array();
  for (const HypothesisRecord& h : report.hypotheses) {
    ordered_json record;
    record["name"] = h.name;
    record["satisfied"] = h.satisfied;
    if (!h.evidence.empty()) record["evidence"] = h.evidence;
    hypotheses.push_back(std::move(record));
  }
  j["hypotheses"] = std::move(hypotheses);
  j["conclusion"] = report.conclusion;
  if (!report.conclusion_witness.empty())
    j["conclusion_witness"] = report.conclusion_witness;
  if (!report.notes.empty()) j["notes"] = report.notes;
  if (!report.skipped.empty()) j["skipped"] = report.skipped;
  return j;
}

void print_report(const TheoremReport& report, const Options& opt) {
  if (opt.json) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return;
  }
  std::cout << "theorem: " << report.id << "\n";
  for (const HypothesisRecord& h : report.hypotheses) {
    std::cout << "  hypothesis " << (h.satisfied ? "[ok]   " : "[fail] ") << h.name;
    if (!h.evidence.empty()) std::cout << " (" << h.evidence << ")";
    std::cout << "\n";
  }
  std::cout << "conclusion: " << (report.conclusion ? "holds" : "fails");
  if (!report.conclusion_witness.empty())
    std::cout << " (" << report.conclusion_witness << ")";
  std::cout << "\n";
  for (const std::string& note : report.notes) std::cout << "note: " << note << "\n";
  if (!report.skipped.empty())
    std::cout << "skipped tuples: " << report.skipped.size() << "\n";
  std::cout << "verdict: " << to_string(report.verdict) << "\n";
}

void print_validation_failures(const ValidationReport& report, const Options& opt) {
  if (opt.json) {
    ordered_json j;
    j["ok"] = false;
    ordered_json failures = ordered_json::array();
    for (const ValidationFailure& f : report.failures)
      failures.push_back({{"law", f.law}, {"where", f.where}});
    j["failures"] = std::move(failures);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "validation failed:\n";
  for (const ValidationFailure& f : report.failures) {
    std::cout << "  " << f.law << " at [";
    for (std::size_t i = 0; i < f.where.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << f.where[i];
    }
    std::cout << "]\n";
  }
}

int not_applicable_exit(const std::string& reason, const Options& opt) {
  if (opt.json) {
    ordered_json j;
    j["verdict"] = "not-applicable";
    j["reason"] = reason;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "not-applicable: " << reason << "\n";
  }
  return opt.strict ? kNegative : kOk;
}

int cmd_validate(const std::string& path, const Options& opt) {
  FinCategory c;
  try {
    c = load_category(path);
  } catch (const ValidationError& e) {
    print_validation_failures(e.report, opt);
    return kNegative;
  }
  if (opt.json) {
    ordered_json j;
    j["ok"] = true;
    j["objects"] = c.object_count();
    j["morphisms"] = c.morphism_count();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ok: " << c.object_count() << " objects, " << c.morphism_count()
              << " morphisms, all laws hold\n";
  }
  return kOk;
}

int cmd_limits(const std::string& path, const Options& opt) {
  LimitCache cache(make_ref(load_category(path)));
  const FinCategory& c = *cache.category();
  const Obj n = c.object_count();

  if (opt.json) {
    ordered_json j;
    auto opt_obj = [](const std::optional<Obj>& x) {
      return x ? ordered_json(*x) : ordered_json(nullptr);
    };
    j["terminal"] = opt_obj(cache.terminal());
    j["initial"] = opt_obj(cache.initial());
    j["zero"] = cache.zero() ? ordered_json(cache.zero()->zero) : ordered_json(nullptr);
    ordered_json products = ordered_json::array();
    ordered_json coproducts = ordered_json::array();
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y) {
        if (const ProductWitness* w = cache.product(x, y))
          products.push_back({x, y, w->apex});
        if (const CoproductWitness* w = cache.coproduct(x, y))
          coproducts.push_back({x, y, w->apex});
      }
    j["products"] = std::move(products);
    j["missing_products"] = cache.missing_products();
    j["coproducts"] = std::move(coproducts);
    j["missing_coproducts"] = cache.missing_coproducts();
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  auto show = [&](const char* what, const std::optional<Obj>& x) {
    std::cout << what << ": " << (x ? object_label(c, *x) : "none") << "\n";
  };
  show("terminal", cache.terminal());
  show("initial", cache.initial());
  show("zero", cache.zero() ? std::optional<Obj>(cache.zero()->zero) : std::nullopt);

  auto table = [&](const char* what, auto witness,
                   const std::vector<std::array<Obj, 2>>& missing) {
    std::cout << what << ":\n";
    for (Obj x = 0; x < n; ++x)
      for (Obj y = 0; y < n; ++y)
        if (auto* w = witness(x, y))
          std::cout << "  (" << object_label(c, x) << ", " << object_label(c, y)
                    << ") -> " << object_label(c, w->apex) << "\n";
    if (!missing.empty()) {
      std::cout << "  missing:";
      for (const auto& [x, y] : missing)
        std::cout << " (" << object_label(c, x) << ", " << object_label(c, y) << ")";
      std::cout << "\n";
    }
  };
  table("products", [&](Obj x, Obj y) { return cache.product(x, y); },
        cache.missing_products());
  table("coproducts", [&](Obj x, Obj y) { return cache.coproduct(x, y); },
        cache.missing_coproducts());
  return kOk;
}

int cmd_check(const std::string& path, const std::string& scope_name, bool semiadditive,
              const Options& opt) {
  LimitCache cache(make_ref(load_category(path)));
  const Scope scope = scope_name == "existing" ? Scope::Existing : Scope::All;
  TheoremReport report;
  try {
    report = semiadditive ? is_semi_additive(cache, scope) : is_distributive(cache, scope);
  } catch (const LimitAbsent& e) {
    return not_applicable_exit(e.what(), opt);
  }
  print_report(report, opt);
  return report.conclusion ? kOk : kNegative;
}

int cmd_search_natiso(const std::string& path, const std::string& lhs, std::size_t limit,
                      const Options& opt) {
  LimitCache cache(make_ref(load_category(path)));
  FunctorData from, to;
  try {
    if (lhs == "delta") {
      DeltaFunctors family = delta_functors(cache);
      from = std::move(family.lhs);
      to = std::move(family.rhs);
    } else {
      PlusTimesFunctors family = plus_times_functors(cache);
      from = std::move(family.plus);
      to = std::move(family.times);
    }
  } catch (const LimitAbsent& e) {
    return not_applicable_exit(e.what(), opt);
  }

  SearchResult result = search_natural_transformations(from, to, true, opt.budget, limit);
  if (opt.json) {
    ordered_json j;
    j["found"] = ordered_json::array();
    for (const NatTransformData& t : result.found) j["found"].push_back(t.components);
    j["truncated"] = result.truncated;
    j["nodes"] = result.nodes;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "natural isomorphisms found: " << result.found.size() << "\n";
    for (const NatTransformData& t : result.found) {
      std::cout << "  components: [";
      for (std::size_t i = 0; i < t.components.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << t.components[i];
      }
      std::cout << "]\n";
    }
    std::cout << "nodes: " << result.nodes
              << (result.truncated ? " (budget exhausted, absence undecided)" : "") << "\n";
  }
  if (!result.found.empty()) return kOk;
  if (result.truncated) return opt.strict ? kNegative : kOk;
  return kNegative;
}

int cmd_verify(const std::string& path, const std::string& theorem, const Options& opt) {
  LimitCache cache(make_ref(load_category(path)));
  TheoremReport report;
  if (theorem == "lemma1")
    report = verify_absorption_distributivity(cache, opt.budget);
  else if (theorem == "prop2")
    report = verify_zero_subterminal(cache, opt.budget);
  else if (theorem == "prop3")
    report = verify_pointed_trivial(cache, opt.budget);
  else if (theorem == "distributive")
    report = verify_distributivity(cache, opt.budget);
  else if (theorem == "additive")
    report = verify_additivity(cache, opt.budget);
  else if (theorem == "monoidal")
    report = verify_monoidal_strength(cache);
  else
    report = verify_coproduct_preservation(cache);
  print_report(report, opt);
  return verdict_exit(report.verdict, opt);
}

int cmd_gen(const std::string& family, int param, const std::string& out,
            const Options& opt) {
  CorpusSpec spec;
  spec.family = family;
  spec.param = param;
  FinCategory c;
  try {
    c = build_corpus_member(spec);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  save_category(c, out);
  if (opt.json) {
    ordered_json j;
    j["written"] = out;
    j["objects"] = c.object_count();
    j["morphisms"] = c.morphism_count();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << spec.label() << " to " << out << "\n";
  }
  return kOk;
}

int cmd_suite(const std::string& corpus, const Options& opt) {
  SuiteReport suite;
  if (corpus == "default") {
    suite = run_full_suite(default_corpus(), opt.budget);
  } else {
    ordered_json manifest;
    try {
      manifest = ordered_json::parse(read_file(corpus));
    } catch (const ordered_json::parse_error& e) {
      throw DocumentError(e.what());
    }
    if (!manifest.is_array())
      throw DocumentError("corpus manifest must be an array of file paths");
    std::vector<SuiteMember> members;
    for (const ordered_json& entry : manifest) {
      if (!entry.is_string())
        throw DocumentError("corpus manifest entries must be file paths");
      const std::string path = entry.get<std::string>();
      members.push_back({path, make_ref(parse_category_tables(read_file(path)))});
    }
    suite = run_full_suite(members, opt.budget);
  }

  if (opt.json) {
    ordered_json j;
    ordered_json entries = ordered_json::array();
    for (const SuiteEntry& entry : suite.entries) {
      ordered_json e;
      e["label"] = entry.label;
      e["validated"] = entry.validated;
      if (!entry.validation_failures.empty())
        e["validation_failures"] = entry.validation_failures;
      ordered_json reports = ordered_json::array();
      for (const TheoremReport& report : entry.reports)
        reports.push_back(report_to_json(report));
      e["reports"] = std::move(reports);
      entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    j["consistent"] = suite.consistent;
    j["not_applicable"] = suite.not_applicable;
    j["inconsistent"] = suite.inconsistent;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const SuiteEntry& entry : suite.entries) {
      if (!entry.validated) {
        std::cout << entry.label << ": validation failed";
        for (const std::string& failure : entry.validation_failures)
          std::cout << " [" << failure << "]";
        std::cout << "\n";
        continue;
      }
      int consistent = 0, not_applicable = 0, inconsistent = 0;
      for (const TheoremReport& report : entry.reports) {
        switch (report.verdict) {
          case Verdict::consistent: ++consistent; break;
          case Verdict::not_applicable: ++not_applicable; break;
          case Verdict::inconsistent: ++inconsistent; break;
        }
      }
      std::cout << entry.label << ": consistent " << consistent << ", not-applicable "
                << not_applicable << ", inconsistent " << inconsistent << "\n";
      for (const TheoremReport& report : entry.reports)
        if (report.verdict == Verdict::inconsistent)
          std::cout << "  INCONSISTENT: " << report.id << "\n";
    }
    std::cout << "suite: consistent " << suite.consistent << ", not-applicable "
              << suite.not_applicable << ", inconsistent " << suite.inconsistent << "\n";
  }
  return suite.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("FINCAT_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      std::cerr << "error: FINCAT_SEARCH_BUDGET must be a non-negative integer\n";
      return kUsage;
    }
    opt.budget = parsed;
  }

  CLI::App app{"finite category engine: limits, canonical comparison maps, and "
               "theorem consistency checks"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "emit machine-readable JSON reports");
  app.add_flag("--strict", opt.strict, "exit 1 on not-applicable outcomes");

  std::string file, scope = "all", lhs, theorem, family, output, corpus = "default";
  int param = 0;
  std::size_t limit = kAllResults;

  CLI::App* validate = app.add_subcommand("validate", "check the category laws of a document");
  validate->add_option("file", file, "category document")->required();

  CLI::App* limits = app.add_subcommand("limits", "print terminal/initial objects and the product and coproduct tables");
  limits->add_option("file", file, "category document")->required();

  CLI::App* distributive = app.add_subcommand("check-distributive", "decide whether every canonical distributivity map is invertible");
  distributive->add_option("file", file, "category document")->required();
  distributive->add_option("--scope", scope, "all: demand every witness; existing: check what is there")
      ->check(CLI::IsMember({"all", "existing"}));

  CLI::App* semiadditive = app.add_subcommand("check-semiadditive", "decide whether every canonical coproduct-to-product map is invertible");
  semiadditive->add_option("file", file, "category document")->required();
  semiadditive->add_option("--scope", scope, "all: demand every witness; existing: check what is there")
      ->check(CLI::IsMember({"all", "existing"}));

  CLI::App* search = app.add_subcommand("search-natiso", "search for natural isomorphisms between a canonical functor pair");
  search->add_option("file", file, "category document")->required();
  search->add_option("--lhs", lhs, "which functor pair to compare")
      ->required()
      ->check(CLI::IsMember({"delta", "plus-times"}));
  search->add_option("--limit", limit, "stop after this many results");

  CLI::App* verify = app.add_subcommand("verify", "replay one theorem over the category");
  verify->add_option("file", file, "category document")->required();
  verify->add_option("--theorem", theorem, "which statement to replay")
      ->required()
      ->check(CLI::IsMember({"lemma1", "prop2", "prop3", "distributive", "additive",
                             "monoidal", "caccamo-winskel"}));

  CLI::App* gen = app.add_subcommand("gen", "write a generated category to a file");
  gen->add_option("family", family, "chain | boolean | divisor | m3 | n5 | terminal | bool_matrix")
      ->required()
      ->check(CLI::IsMember({"chain", "boolean", "divisor", "m3", "n5", "terminal",
                             "bool_matrix"}));
  gen->add_option("param", param, "size parameter, where the family takes one");
  gen->add_option("-o,--output", output, "destination file")->required();

  CLI::App* suite = app.add_subcommand("suite", "run every verifier over a corpus");
  suite->add_option("--corpus", corpus, "default, or a JSON manifest listing document paths");

  for (CLI::App* sub : {validate, limits, distributive, semiadditive, search, verify,
                        gen, suite})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file, opt);
    if (app.got_subcommand(limits)) return cmd_limits(file, opt);
    if (app.got_subcommand(distributive)) return cmd_check(file, scope, false, opt);
    if (app.got_subcommand(semiadditive)) return cmd_check(file, scope, true, opt);
    if (app.got_subcommand(search)) return cmd_search_natiso(file, lhs, limit, opt);
    if (app.got_subcommand(verify)) return cmd_verify(file, theorem, opt);
    if (app.got_subcommand(gen)) return cmd_gen(family, param, output, opt);
    if (app.got_subcommand(suite)) return cmd_suite(corpus, opt);
  } catch (const ValidationError& e) {
    print_validation_failures(e.report, opt);
    return kNegative;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
