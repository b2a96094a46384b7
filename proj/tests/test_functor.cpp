#include <catch2/catch_amalgamated.hpp>

#include "fincat/functor.hpp"
#include "fincat/generators.hpp"
#include "test_support.hpp"

using namespace fincat;

namespace {

bool has_failure(const ValidationReport& report, const std::string& law) {
  for (const auto& failure : report.failures)
    if (failure.law == law) return true;
  return false;
}

// F, G: chain(2) -> bool_matrix(2), both landing on object 1. F sends the
// step to the identity map, G to the zero map; only G then admits a
// transformation component at 1 other than zero.
std::pair<FunctorData, FunctorData> parallel_matrix_functors(const CategoryRef& chain,
                                                             const CategoryRef& mat) {
  FunctorData f;
  f.source = chain;
  f.target = mat;
  f.object_map = {1, 1};
  f.morphism_map = {mat->identity(1), mat->identity(1), mat->identity(1)};

  FunctorData g = f;
  Mor zero11 = mat->hom(1, 1)[0];
  g.morphism_map[chain->hom(0, 1)[0]] = zero11;
  return {f, g};
}

}  // namespace

TEST_CASE("identity and constant functors validate", "[core]") {
  CategoryRef m3 = make_ref(gen_m3());
  REQUIRE(validate_functor(identity_functor(m3)).ok);

  CategoryRef chain = make_ref(gen_chain(3));
  FunctorData at_top = constant_functor(m3, chain, 2);
  REQUIRE(validate_functor(at_top).ok);
  for (Mor m = 0; m < m3->morphism_count(); ++m)
    REQUIRE(at_top.on_morphism(m) == chain->identity(2));
}

TEST_CASE("functor validation pinpoints each broken law", "[core]") {
  CategoryRef chain = make_ref(gen_chain(2));
  CategoryRef target = make_ref(gen_chain(3));

  FunctorData f;
  f.source = chain;
  f.target = target;
  f.object_map = {0, 2};
  Mor leap = target->hom(0, 2)[0];
  f.morphism_map = {target->identity(0), leap, target->identity(2)};
  REQUIRE(validate_functor(f).ok);

  SECTION("image endpoints must track the object map") {
    FunctorData broken = f;
    broken.morphism_map[chain->hom(0, 1)[0]] = target->hom(1, 2)[0];
    ValidationReport report = validate_functor(broken);
    REQUIRE_FALSE(report.ok);
    REQUIRE(has_failure(report, "map-endpoints"));
  }

  SECTION("identities must map to identities") {
    CategoryRef mat = make_ref(gen_bool_matrix(1));
    FunctorData broken;
    broken.source = make_ref(gen_terminal());
    broken.target = mat;
    broken.object_map = {1};
    broken.morphism_map = {mat->hom(1, 1)[0]};  // zero map, not the identity
    ValidationReport report = validate_functor(broken);
    REQUIRE_FALSE(report.ok);
    REQUIRE(has_failure(report, "preserves-identity"));
  }

  SECTION("composition must be preserved") {
    CategoryRef mono = make_ref(testsupport::cyclic_monoid(3));
    FunctorData broken;
    broken.source = mono;
    broken.target = mono;
    broken.object_map = {0};
    broken.morphism_map = {0, 1, 1};  // collapses r² onto r, but r∘r = r²
    ValidationReport report = validate_functor(broken);
    REQUIRE_FALSE(report.ok);
    REQUIRE(has_failure(report, "preserves-composition"));
  }

  SECTION("malformed shapes throw") {
    FunctorData broken = f;
    broken.object_map = {0};
    REQUIRE_THROWS_AS(validate_functor(broken), StructuralError);
    broken = f;
    broken.morphism_map[0] = 99;
    REQUIRE_THROWS_AS(validate_functor(broken), StructuralError);
  }
}

TEST_CASE("functors compose pointwise", "[core]") {
  CategoryRef two = make_ref(gen_chain(2));
  CategoryRef three = make_ref(gen_chain(3));

  FunctorData embed;
  embed.source = two;
  embed.target = three;
  embed.object_map = {0, 2};
  embed.morphism_map = {three->identity(0), three->hom(0, 2)[0], three->identity(2)};

  FunctorData collapse;
  collapse.source = three;
  collapse.target = two;
  collapse.object_map = {0, 1, 1};
  collapse.morphism_map = {two->identity(0), two->hom(0, 1)[0], two->hom(0, 1)[0],
                           two->identity(1), two->identity(1), two->identity(1)};
  REQUIRE(validate_functor(embed).ok);
  REQUIRE(validate_functor(collapse).ok);

  FunctorData round_trip = compose_functors(collapse, embed);
  REQUIRE(validate_functor(round_trip).ok);
  REQUIRE(round_trip == identity_functor(two));
}

TEST_CASE("functor pairs act componentwise on a product", "[core]") {
  CategoryRef two = make_ref(gen_chain(2));
  CategoryRef three = make_ref(gen_chain(3));

  FunctorData embed;
  embed.source = two;
  embed.target = three;
  embed.object_map = {0, 2};
  embed.morphism_map = {three->identity(0), three->hom(0, 2)[0], three->identity(2)};

  FunctorData paired = functor_pair(embed, identity_functor(two));
  REQUIRE(validate_functor(paired).ok);
  REQUIRE(paired.source->object_count() == 4);
  REQUIRE(paired.target->object_count() == 6);

  const Obj source_dims[2] = {2, 2};
  const Obj target_dims[2] = {3, 2};
  for (Obj x = 0; x < 2; ++x)
    for (Obj y = 0; y < 2; ++y) {
      const Obj in[2] = {x, y};
      const Obj out[2] = {embed.object_map[x], y};
      REQUIRE(paired.on_object(tuple_encode(source_dims, in)) == tuple_encode(target_dims, out));
    }
}

TEST_CASE("natural transformations validate against the square condition", "[core]") {
  CategoryRef chain = make_ref(gen_chain(2));
  CategoryRef mat = make_ref(gen_bool_matrix(2));
  auto [f, g] = parallel_matrix_functors(chain, mat);
  REQUIRE(validate_functor(f).ok);
  REQUIRE(validate_functor(g).ok);

  Mor zero11 = mat->hom(1, 1)[0];

  NatTransformData eta;
  eta.source_functor = f;
  eta.target_functor = g;
  eta.components = {mat->identity(1), zero11};
  REQUIRE(validate_natural_transformation(eta).ok);

  NatTransformData skew = eta;
  skew.components = {mat->identity(1), mat->identity(1)};
  ValidationReport report = validate_natural_transformation(skew);
  REQUIRE_FALSE(report.ok);
  REQUIRE(has_failure(report, "naturality"));

  SECTION("component outside the right hom set throws") {
    NatTransformData misplaced = eta;
    misplaced.components = {mat->identity(2), zero11};
    REQUIRE_THROWS_AS(validate_natural_transformation(misplaced), StructuralError);
  }

  SECTION("wrong component count throws") {
    NatTransformData short_list = eta;
    short_list.components = {zero11};
    REQUIRE_THROWS_AS(validate_natural_transformation(short_list), StructuralError);
  }

  SECTION("functors with different endpoints throw") {
    NatTransformData crossed = eta;
    crossed.target_functor = identity_functor(chain);
    REQUIRE_THROWS_AS(validate_natural_transformation(crossed), StructuralError);
  }
}

TEST_CASE("identity transformation is natural", "[core]") {
  CategoryRef mat = make_ref(gen_bool_matrix(2));
  NatTransformData id = identity_transformation(identity_functor(mat));
  REQUIRE(validate_natural_transformation(id).ok);
  for (Obj x = 0; x < mat->object_count(); ++x) REQUIRE(id.components[x] == mat->identity(x));
}

TEST_CASE("slices of a poset keep its shape", "[core]") {
  CategoryRef chain = make_ref(gen_chain(2));
  SliceCategory over_top = slice_category(chain, 1);
  REQUIRE(identical_tables(*over_top.category, *chain));
  REQUIRE(validate_functor(over_top.projection).ok);

  CategoryRef m3 = make_ref(gen_m3());
  SliceCategory m3_over_top = slice_category(m3, 4);
  REQUIRE(identical_tables(*m3_over_top.category, *m3));

  SliceCategory m3_over_bot = slice_category(m3, 0);
  REQUIRE(m3_over_bot.category->object_count() == 1);
  REQUIRE(m3_over_bot.category->morphism_count() == 1);
}

TEST_CASE("slice projection is fully faithful over a subterminal anchor", "[core]") {
  for (const char* family : {"m3", "n5"}) {
    CorpusSpec spec;
    spec.family = family;
    CategoryRef c = make_ref(build_corpus_member(spec));
    for (Obj over = 0; over < c->object_count(); ++over) {
      SliceCategory slice = slice_category(c, over);
      REQUIRE(validate_functor(slice.projection).ok);
      const FinCategory& s = *slice.category;
      for (Obj a = 0; a < s.object_count(); ++a)
        for (Obj b = 0; b < s.object_count(); ++b) {
          Obj ua = slice.projection.object_map[a];
          Obj ub = slice.projection.object_map[b];
          REQUIRE(s.hom(a, b).size() == c->hom(ua, ub).size());
        }
    }
  }
}

TEST_CASE("slice composition follows the underlying category", "[core]") {
  CategoryRef mat = make_ref(gen_bool_matrix(2));
  SliceCategory slice = slice_category(mat, 1);
  const FinCategory& s = *slice.category;
  REQUIRE(validate_category(s).ok);

  // Underlying morphisms of slice arrows compose as in the base.
  for (Mor g = 0; g < s.morphism_count(); ++g)
    for (Mor f : s.into(s.src(g))) {
      Mor composed = s.compose(g, f);
      REQUIRE(slice.projection.morphism_map[composed] ==
              mat->compose(slice.projection.morphism_map[g], slice.projection.morphism_map[f]));
    }

  // Each slice object is an arrow into the anchor and the triangles close.
  for (Mor g = 0; g < s.morphism_count(); ++g) {
    Mor anchor_src = slice.object_of[s.src(g)];
    Mor anchor_dst = slice.object_of[s.dst(g)];
    REQUIRE(mat->compose(anchor_dst, slice.projection.morphism_map[g]) == anchor_src);
  }
}
