#pragma once

#include "fincat/category.hpp"

namespace fincat {

// A functor as explicit object and morphism maps. Whether the maps actually
// satisfy the functor laws is answered by validate_functor.
struct FunctorData {
  CategoryRef source, target;
  std::vector<Obj> object_map;
  std::vector<Mor> morphism_map;

  Obj on_object(Obj x) const { return object_map.at(static_cast<std::size_t>(x)); }
  Mor on_morphism(Mor f) const { return morphism_map.at(static_cast<std::size_t>(f)); }

  bool operator==(const FunctorData& other) const;
};

FunctorData identity_functor(CategoryRef c);
FunctorData constant_functor(CategoryRef source, CategoryRef target, Obj at);

// F×G : A1×A2 -> B1×B2 acting componentwise. The product categories are
// built here unless the caller supplies them (they must then match the
// row-major tuple encoding of product_category).
FunctorData functor_pair(const FunctorData& f, const FunctorData& g,
                         CategoryRef source_product = nullptr,
                         CategoryRef target_product = nullptr);

// Failure laws: map-endpoints, preserves-identity, preserves-composition.
ValidationReport validate_functor(const FunctorData& f);

// outer∘inner; requires inner.target and outer.source to be equal categories.
FunctorData compose_functors(const FunctorData& outer, const FunctorData& inner);

struct NatTransformData {
  FunctorData source_functor, target_functor;
  std::vector<Mor> components;  // one morphism F(x) -> G(x) per source object
};

NatTransformData identity_transformation(const FunctorData& f);

// Components outside hom(F x, G x) are structural errors; what gets checked
// and reported is naturality, one failure (f, x, y) per bad square.
ValidationReport validate_natural_transformation(const NatTransformData& t);

// The slice over x: objects are the morphisms of c with target x, morphisms
// from a to b are the m with b∘m = a, and the projection functor forgets the
// structure maps down to c.
struct SliceCategory {
  CategoryRef category;
  FunctorData projection;
  std::vector<Mor> object_of;  // slice object -> the morphism into x it stands for
};

SliceCategory slice_category(CategoryRef c, Obj x);

}  // namespace fincat
