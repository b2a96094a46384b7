#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "fincat/generators.hpp"
#include "fincat/limits.hpp"
#include "test_support.hpp"

using namespace fincat;

namespace {

bool leq(const FinCategory& c, Obj a, Obj b) { return !c.hom(a, b).empty(); }

// Greatest lower bound read off the order relation alone; the final pass
// rejects candidates that are not above every lower bound.
std::optional<Obj> poset_meet(const FinCategory& c, Obj x, Obj y) {
  std::optional<Obj> best;
  for (Obj z = 0; z < c.object_count(); ++z) {
    if (!leq(c, z, x) || !leq(c, z, y)) continue;
    if (!best || leq(c, *best, z)) best = z;
  }
  if (best)
    for (Obj w = 0; w < c.object_count(); ++w)
      if (leq(c, w, x) && leq(c, w, y) && !leq(c, w, *best)) return std::nullopt;
  return best;
}

std::optional<Obj> poset_join(const FinCategory& c, Obj x, Obj y) {
  std::optional<Obj> best;
  for (Obj z = 0; z < c.object_count(); ++z) {
    if (!leq(c, x, z) || !leq(c, y, z)) continue;
    if (!best || leq(c, z, *best)) best = z;
  }
  if (best)
    for (Obj w = 0; w < c.object_count(); ++w)
      if (leq(c, x, w) && leq(c, y, w) && !leq(c, *best, w)) return std::nullopt;
  return best;
}

// The lattice distributivity law x∧(y∨z) = (x∧y)∨(x∧z) over every triple.
bool lattice_law_holds(const FinCategory& c) {
  for (Obj x = 0; x < c.object_count(); ++x)
    for (Obj y = 0; y < c.object_count(); ++y)
      for (Obj z = 0; z < c.object_count(); ++z) {
        Obj lhs = *poset_meet(c, x, *poset_join(c, y, z));
        Obj rhs = *poset_join(c, *poset_meet(c, x, y), *poset_meet(c, x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

bool is_poset_family(const std::string& family) {
  return family != "bool_matrix";
}

}  // namespace

TEST_CASE("terminal and initial objects sit at the ends of a chain", "[limits]") {
  FinCategory chain = gen_chain(3);
  REQUIRE(find_terminal(chain) == 2);
  REQUIRE(find_initial(chain) == 0);

  REQUIRE(find_terminal(gen_m3()) == 4);
  REQUIRE(find_initial(gen_m3()) == 0);
  REQUIRE(find_terminal(gen_bool_matrix(2)) == 0);
  REQUIRE(find_initial(gen_bool_matrix(2)) == 0);

  // Two parallel endomorphisms rule the lone object out as terminal.
  FinCategory z2 = testsupport::cyclic_monoid(2);
  REQUIRE_FALSE(find_terminal(z2).has_value());
  REQUIRE_FALSE(find_initial(z2).has_value());
}

TEST_CASE("poset products are meets and coproducts are joins", "[limits]") {
  for (const CorpusSpec& spec : default_corpus()) {
    if (!is_poset_family(spec.family)) continue;
    INFO(spec.label());
    CategoryRef c = make_ref(build_corpus_member(spec));
    LimitCache cache(c);
    REQUIRE(cache.products_total());
    REQUIRE(cache.coproducts_total());
    for (Obj x = 0; x < c->object_count(); ++x)
      for (Obj y = 0; y < c->object_count(); ++y) {
        REQUIRE(cache.product(x, y)->apex == poset_meet(*c, x, y));
        REQUIRE(cache.coproduct(x, y)->apex == poset_join(*c, x, y));
      }
  }
}

TEST_CASE("divisor lattice meets are gcds and joins are lcms", "[limits]") {
  CategoryRef c = make_ref(gen_divisor_lattice(12));
  LimitCache cache(c);
  for (Obj x = 0; x < c->object_count(); ++x)
    for (Obj y = 0; y < c->object_count(); ++y) {
      int a = std::stoi(c->object_name(x));
      int b = std::stoi(c->object_name(y));
      REQUIRE(std::stoi(c->object_name(cache.product(x, y)->apex)) == std::gcd(a, b));
      REQUIRE(std::stoi(c->object_name(cache.coproduct(x, y)->apex)) == std::lcm(a, b));
    }
}

TEST_CASE("product witnesses carry a sound mediating table", "[limits]") {
  FinCategory mat = gen_bool_matrix(2);
  auto witness = find_binary_product(mat, 1, 1);
  REQUIRE(witness.has_value());
  REQUIRE(witness->apex == 2);
  // Standard projections: [1,0] then [0,1].
  REQUIRE(witness->pr1 == mat.hom(2, 1)[0b01]);
  REQUIRE(witness->pr2 == mat.hom(2, 1)[0b10]);

  // Universal property holds entry by entry.
  for (Obj a = 0; a < mat.object_count(); ++a)
    for (Mor f : mat.hom(a, 1))
      for (Mor g : mat.hom(a, 1)) {
        Mor u = pair_into_product(mat, *witness, f, g);
        REQUIRE(mat.compose(witness->pr1, u) == f);
        REQUIRE(mat.compose(witness->pr2, u) == g);
      }

  // The two permutation matrices give exactly two valid cones on the apex.
  REQUIRE(enumerate_binary_products(mat, 1, 1).size() == 2);

  // No product of the one object with itself in a two-element group.
  FinCategory z2 = testsupport::cyclic_monoid(2);
  REQUIRE_FALSE(find_binary_product(z2, 0, 0).has_value());

  SECTION("mismatched cone legs are rejected") {
    REQUIRE_THROWS_AS(pair_into_product(mat, *witness, mat.hom(1, 1)[0], mat.hom(0, 1)[0]),
                      StructuralError);
    REQUIRE_THROWS_AS(pair_into_product(mat, *witness, mat.hom(1, 2)[0], mat.hom(1, 2)[0]),
                      StructuralError);
  }
}

TEST_CASE("boolean matrix witnesses stop at rank two", "[limits]") {
  LimitCache cache(make_ref(gen_bool_matrix(2)));
  const std::vector<std::array<Obj, 2>> expected{{1, 2}, {2, 1}, {2, 2}};
  REQUIRE(cache.missing_products() == expected);
  REQUIRE(cache.missing_coproducts() == expected);
  REQUIRE_THROWS_AS(cache.require_product(2, 2), LimitAbsent);
  REQUIRE(cache.product(1, 1) != nullptr);
}

TEST_CASE("zero structure needs initial and terminal to coincide", "[limits]") {
  auto mat_zero = zero_structure(gen_bool_matrix(2));
  REQUIRE(mat_zero.has_value());
  REQUIRE(mat_zero->zero == 0);
  FinCategory mat = gen_bool_matrix(2);
  // Every factorization through rank zero is the all-zeros matrix.
  REQUIRE(mat_zero->zero_morphism(1, 1, 3) == mat.hom(1, 1)[0]);
  REQUIRE(mat_zero->zero_morphism(2, 2, 3) == mat.hom(2, 2)[0]);
  REQUIRE(mat_zero->zero_morphism(2, 1, 3) == mat.hom(2, 1)[0]);

  REQUIRE_FALSE(zero_structure(gen_chain(2)).has_value());
  REQUIRE_FALSE(zero_structure(gen_m3()).has_value());
  REQUIRE(zero_structure(gen_terminal()).has_value());
}

TEST_CASE("subterminal objects admit no parallel arrows into them", "[limits]") {
  FinCategory m3 = gen_m3();
  for (Obj x = 0; x < m3.object_count(); ++x) REQUIRE(is_subterminal(m3, x));

  FinCategory mat = gen_bool_matrix(2);
  REQUIRE(is_subterminal(mat, 0));
  REQUIRE_FALSE(is_subterminal(mat, 1));
  REQUIRE_FALSE(is_subterminal(mat, 2));
}

TEST_CASE("distributivity decision matches the lattice-law oracle", "[limits]") {
  for (const CorpusSpec& spec : default_corpus()) {
    if (!is_poset_family(spec.family)) continue;
    INFO(spec.label());
    CategoryRef c = make_ref(build_corpus_member(spec));
    LimitCache cache(c);
    TheoremReport report = is_distributive(cache, Scope::All);
    REQUIRE(report.conclusion == lattice_law_holds(*c));
    REQUIRE(report.verdict == Verdict::consistent);
    REQUIRE(report.skipped.empty());
  }
}

TEST_CASE("the diamond fails distributivity exactly at its atoms", "[limits]") {
  CategoryRef m3 = make_ref(gen_m3());
  LimitCache cache(m3);
  TheoremReport report = is_distributive(cache, Scope::All);
  REQUIRE_FALSE(report.conclusion);
  REQUIRE(report.conclusion_witness == "(a,b,c)");

  Mor delta = canonical_delta(cache, 1, 2, 3);
  REQUIRE(delta == m3->hom(0, 1)[0]);
  REQUIRE_FALSE(is_invertible(*m3, delta).has_value());

  TheoremReport n5_report = is_distributive(LimitCache(make_ref(gen_n5())), Scope::All);
  REQUIRE_FALSE(n5_report.conclusion);
}

TEST_CASE("canonical comparison is the identity on a distributive lattice", "[limits]") {
  CategoryRef c = make_ref(gen_boolean_algebra(2));
  LimitCache cache(c);
  for (Obj x = 0; x < c->object_count(); ++x)
    for (Obj y = 0; y < c->object_count(); ++y)
      for (Obj z = 0; z < c->object_count(); ++z) {
        Mor delta = canonical_delta(cache, x, y, z);
        REQUIRE(c->src(delta) == c->dst(delta));
        REQUIRE(delta == c->identity(c->src(delta)));
      }
}

TEST_CASE("partial coverage downgrades the verdict instead of guessing", "[limits]") {
  LimitCache cache(make_ref(gen_bool_matrix(2)));
  REQUIRE_THROWS_AS(is_distributive(cache, Scope::All), LimitAbsent);
  REQUIRE_THROWS_AS(is_semi_additive(cache, Scope::All), LimitAbsent);

  TheoremReport report = is_semi_additive(cache, Scope::Existing);
  REQUIRE(report.conclusion);
  REQUIRE(report.verdict == Verdict::not_applicable);
  const std::vector<std::vector<Obj>> expected{{1, 2}, {2, 1}, {2, 2}};
  REQUIRE(report.skipped == expected);
}

TEST_CASE("semi-additivity needs a zero object first", "[limits]") {
  TheoremReport chain_report = is_semi_additive(LimitCache(make_ref(gen_chain(2))), Scope::All);
  REQUIRE_FALSE(chain_report.conclusion);
  REQUIRE(chain_report.verdict == Verdict::consistent);
  REQUIRE(chain_report.conclusion_witness == "not pointed");

  TheoremReport terminal_report = is_semi_additive(LimitCache(make_ref(gen_terminal())), Scope::All);
  REQUIRE(terminal_report.conclusion);
  REQUIRE(terminal_report.verdict == Verdict::consistent);
}

TEST_CASE("alpha at rank one is the boolean identity matrix", "[limits]") {
  CategoryRef mat = make_ref(gen_bool_matrix(2));
  LimitCache cache(mat);
  REQUIRE(canonical_alpha(cache, 1, 1) == mat->identity(2));
  REQUIRE(is_invertible(*mat, canonical_alpha(cache, 1, 1)).has_value());

  REQUIRE_THROWS_AS(canonical_alpha(LimitCache(make_ref(gen_chain(2))), 0, 1), LimitAbsent);
}

TEST_CASE("comparison functors act as sum and product pointwise", "[limits]") {
  SECTION("join and meet on a chain") {
    CategoryRef c = make_ref(gen_chain(2));
    PlusTimesFunctors pt = plus_times_functors(LimitCache(c));
    REQUIRE(validate_functor(pt.plus).ok);
    REQUIRE(validate_functor(pt.times).ok);
    REQUIRE(pt.alpha.empty());

    const Obj dims[2] = {2, 2};
    for (Obj x = 0; x < 2; ++x)
      for (Obj y = 0; y < 2; ++y) {
        const Obj pair[2] = {x, y};
        REQUIRE(pt.plus.object_map[tuple_encode(dims, pair)] == std::max(x, y));
        REQUIRE(pt.times.object_map[tuple_encode(dims, pair)] == std::min(x, y));
      }
  }

  SECTION("union and intersection on a Boolean algebra") {
    CategoryRef c = make_ref(gen_boolean_algebra(2));
    PlusTimesFunctors pt = plus_times_functors(LimitCache(c));
    const Obj dims[2] = {4, 4};
    for (Obj s = 0; s < 4; ++s)
      for (Obj t = 0; t < 4; ++t) {
        const Obj pair[2] = {s, t};
        REQUIRE(pt.plus.object_map[tuple_encode(dims, pair)] == (s | t));
        REQUIRE(pt.times.object_map[tuple_encode(dims, pair)] == (s & t));
      }
  }

  SECTION("alpha on the terminal category is the lone identity") {
    PlusTimesFunctors pt = plus_times_functors(LimitCache(make_ref(gen_terminal())));
    REQUIRE(pt.alpha.size() == 1);
    NatTransformData alpha;
    alpha.source_functor = pt.plus;
    alpha.target_functor = pt.times;
    alpha.components = pt.alpha;
    REQUIRE(validate_natural_transformation(alpha).ok);
  }

  SECTION("missing witnesses abort construction") {
    REQUIRE_THROWS_AS(plus_times_functors(LimitCache(make_ref(gen_bool_matrix(2)))), LimitAbsent);
  }
}

TEST_CASE("ternary comparison functors form a natural family", "[limits]") {
  for (const char* family : {"boolean", "m3", "n5"}) {
    CorpusSpec spec;
    spec.family = family;
    spec.param = 2;
    INFO(family);
    CategoryRef c = make_ref(build_corpus_member(spec));
    LimitCache cache(c);
    DeltaFunctors df = delta_functors(cache);
    REQUIRE(validate_functor(df.lhs).ok);
    REQUIRE(validate_functor(df.rhs).ok);

    NatTransformData delta;
    delta.source_functor = df.lhs;
    delta.target_functor = df.rhs;
    delta.components = df.delta;
    REQUIRE(validate_natural_transformation(delta).ok);
  }

  CategoryRef m3 = make_ref(gen_m3());
  DeltaFunctors df = delta_functors(LimitCache(m3));
  const Obj dims[3] = {5, 5, 5};
  const Obj abc[3] = {1, 2, 3};
  REQUIRE(df.delta[tuple_encode(dims, abc)] == m3->hom(0, 1)[0]);

  REQUIRE_THROWS_AS(delta_functors(LimitCache(make_ref(gen_bool_matrix(2)))), LimitAbsent);
}
