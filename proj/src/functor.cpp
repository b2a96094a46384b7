#include "fincat/functor.hpp"

#include <algorithm>
#include <map>

namespace fincat {

namespace {

bool same_category(const CategoryRef& a, const CategoryRef& b) {
  return a == b || (a && b && *a == *b);
}

void check_functor_shape(const FunctorData& f) {
  if (!f.source || !f.target) throw StructuralError("functor with a null category");
  if (static_cast<Obj>(f.object_map.size()) != f.source->object_count())
    throw StructuralError("functor object map has the wrong size");
  if (static_cast<Mor>(f.morphism_map.size()) != f.source->morphism_count())
    throw StructuralError("functor morphism map has the wrong size");
  for (Obj x : f.object_map)
    if (x < 0 || x >= f.target->object_count())
      throw StructuralError("functor object map entry out of range");
  for (Mor m : f.morphism_map)
    if (m < 0 || m >= f.target->morphism_count())
      throw StructuralError("functor morphism map entry out of range");
}

}  // namespace

bool FunctorData::operator==(const FunctorData& other) const {
  return object_map == other.object_map && morphism_map == other.morphism_map &&
         same_category(source, other.source) && same_category(target, other.target);
}

FunctorData identity_functor(CategoryRef c) {
  FunctorData f;
  f.source = c;
  f.target = c;
  f.object_map.resize(c->object_count());
  f.morphism_map.resize(c->morphism_count());
  for (Obj x = 0; x < c->object_count(); ++x) f.object_map[x] = x;
  for (Mor m = 0; m < c->morphism_count(); ++m) f.morphism_map[m] = m;
  return f;
}

FunctorData constant_functor(CategoryRef source, CategoryRef target, Obj at) {
  if (at < 0 || at >= target->object_count())
    throw StructuralError("constant functor at an object out of range");
  FunctorData f;
  f.source = source;
  f.target = target;
  f.object_map.assign(source->object_count(), at);
  f.morphism_map.assign(source->morphism_count(), target->identity(at));
  return f;
}

FunctorData functor_pair(const FunctorData& f, const FunctorData& g,
                         CategoryRef source_product, CategoryRef target_product) {
  check_functor_shape(f);
  check_functor_shape(g);
  if (!source_product) source_product = make_ref(product_category({f.source, g.source}));
  if (!target_product) target_product = make_ref(product_category({f.target, g.target}));

  const Obj so[2] = {f.source->object_count(), g.source->object_count()};
  const Obj sm[2] = {f.source->morphism_count(), g.source->morphism_count()};
  const Obj to[2] = {f.target->object_count(), g.target->object_count()};
  const Obj tm[2] = {f.target->morphism_count(), g.target->morphism_count()};

  FunctorData p;
  p.source = source_product;
  p.target = target_product;
  p.object_map.resize(source_product->object_count());
  p.morphism_map.resize(source_product->morphism_count());
  for (Obj x = 0; x < source_product->object_count(); ++x) {
    auto t = tuple_decode(so, x);
    Obj img[2] = {f.on_object(t[0]), g.on_object(t[1])};
    p.object_map[x] = tuple_encode(to, img);
  }
  for (Mor m = 0; m < source_product->morphism_count(); ++m) {
    auto t = tuple_decode(sm, m);
    Mor img[2] = {f.on_morphism(t[0]), g.on_morphism(t[1])};
    p.morphism_map[m] = tuple_encode(tm, img);
  }
  return p;
}

ValidationReport validate_functor(const FunctorData& f) {
  check_functor_shape(f);
  ValidationReport report;
  auto fail = [&](std::string law, std::vector<Mor> where) {
    report.failures.push_back({std::move(law), std::move(where)});
  };
  const FinCategory& a = *f.source;
  const FinCategory& b = *f.target;

  for (Mor m = 0; m < a.morphism_count(); ++m) {
    Mor fm = f.on_morphism(m);
    if (b.src(fm) != f.on_object(a.src(m)) || b.dst(fm) != f.on_object(a.dst(m)))
      fail("map-endpoints", {m});
  }
  for (Obj x = 0; x < a.object_count(); ++x)
    if (f.on_morphism(a.identity(x)) != b.identity(f.on_object(x)))
      fail("preserves-identity", {a.identity(x)});

  for (Obj y = 0; y < a.object_count(); ++y) {
    for (Mor g : a.out_of(y)) {
      for (Mor m : a.into(y)) {
        auto gm = a.composite_entry(g, m);
        if (!gm) continue;
        Mor fg = f.on_morphism(g), fm = f.on_morphism(m);
        if (!b.composable(fg, fm) || b.compose(fg, fm) != f.on_morphism(*gm))
          fail("preserves-composition", {g, m});
      }
    }
  }
  report.ok = report.failures.empty();
  return report;
}

FunctorData compose_functors(const FunctorData& outer, const FunctorData& inner) {
  check_functor_shape(outer);
  check_functor_shape(inner);
  if (!same_category(inner.target, outer.source))
    throw StructuralError("functor composition endpoint mismatch");
  FunctorData c;
  c.source = inner.source;
  c.target = outer.target;
  c.object_map.resize(inner.object_map.size());
  c.morphism_map.resize(inner.morphism_map.size());
  for (std::size_t x = 0; x < inner.object_map.size(); ++x)
    c.object_map[x] = outer.on_object(inner.object_map[x]);
  for (std::size_t m = 0; m < inner.morphism_map.size(); ++m)
    c.morphism_map[m] = outer.on_morphism(inner.morphism_map[m]);
  return c;
}

NatTransformData identity_transformation(const FunctorData& f) {
  NatTransformData t;
  t.source_functor = f;
  t.target_functor = f;
  t.components.resize(f.object_map.size());
  for (std::size_t x = 0; x < f.object_map.size(); ++x)
    t.components[x] = f.target->identity(f.object_map[x]);
  return t;
}

ValidationReport validate_natural_transformation(const NatTransformData& t) {
  const FunctorData& f = t.source_functor;
  const FunctorData& g = t.target_functor;
  check_functor_shape(f);
  check_functor_shape(g);
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target))
    throw StructuralError("transformation between functors with different endpoints");
  const FinCategory& a = *f.source;
  const FinCategory& b = *f.target;
  if (static_cast<Obj>(t.components.size()) != a.object_count())
    throw StructuralError("component list has the wrong size");
  for (Obj x = 0; x < a.object_count(); ++x) {
    Mor cx = t.components[x];
    if (cx < 0 || cx >= b.morphism_count())
      throw StructuralError("component out of range at object " + std::to_string(x));
    if (b.src(cx) != f.on_object(x) || b.dst(cx) != g.on_object(x))
      throw StructuralError("component at object " + std::to_string(x) +
                            " is not a morphism F(x) -> G(x)");
  }

  ValidationReport report;
  for (Mor m = 0; m < a.morphism_count(); ++m) {
    Obj x = a.src(m), y = a.dst(m);
    if (b.compose(g.on_morphism(m), t.components[x]) !=
        b.compose(t.components[y], f.on_morphism(m)))
      report.failures.push_back({"naturality", {m, x, y}});
  }
  report.ok = report.failures.empty();
  return report;
}

SliceCategory slice_category(CategoryRef c, Obj over) {
  if (over < 0 || over >= c->object_count())
    throw StructuralError("slice over an object out of range");

  std::span<const Mor> anchors = c->into(over);
  const Obj n = static_cast<Obj>(anchors.size());

  CategoryBuilder b;
  for (Obj s = 0; s < n; ++s) {
    std::string name;
    if (c->has_object_names() || c->has_morphism_names()) {
      const std::string& base = c->morphism_name(anchors[s]);
      name = base.empty() ? "m" + std::to_string(anchors[s]) : base;
    }
    b.add_object(std::move(name));
  }

  // Slice morphism (s, t, m): m runs src(anchor_s) -> src(anchor_t) with
  // anchor_t ∘ m = anchor_s. Enumerated by (s, t, m) ascending.
  std::vector<Mor> underlying;
  std::map<std::tuple<Obj, Obj, Mor>, Mor> index_of;
  for (Obj s = 0; s < n; ++s) {
    for (Obj t = 0; t < n; ++t) {
      for (Mor m : c->hom(c->src(anchors[s]), c->src(anchors[t]))) {
        if (c->compose(anchors[t], m) != anchors[s]) continue;
        Mor id = b.add_morphism(s, t);
        underlying.push_back(m);
        index_of[{s, t, m}] = id;
      }
    }
  }
  for (Obj s = 0; s < n; ++s)
    b.set_identity(s, index_of.at({s, s, c->identity(c->src(anchors[s]))}));

  for (const auto& [key_g, id_g] : index_of) {
    auto [t, u, mg] = key_g;
    for (const auto& [key_f, id_f] : index_of) {
      auto [s, t2, mf] = key_f;
      if (t2 != t) continue;
      b.set_composite(id_g, id_f, index_of.at({s, u, c->compose(mg, mf)}));
    }
  }

  SliceCategory result;
  result.category = make_ref(b.build());
  result.object_of.assign(anchors.begin(), anchors.end());
  result.projection.source = result.category;
  result.projection.target = c;
  result.projection.object_map.resize(n);
  for (Obj s = 0; s < n; ++s) result.projection.object_map[s] = c->src(anchors[s]);
  result.projection.morphism_map = underlying;
  return result;
}

}  // namespace fincat
