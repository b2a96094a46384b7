#pragma once

#include "fincat/limits.hpp"

namespace fincat {

struct CoherenceFailure {
  std::string axiom;       // e.g. "pentagon", "triangle", "hexagon-1"
  std::vector<Mor> where;  // offending indices, meaning depends on the axiom
};

struct CoherenceReport {
  bool ok = true;
  std::vector<CoherenceFailure> failures;

  void fail(std::string axiom, std::vector<Mor> where);
};

// A monoidal structure as explicit tables: the tensor as a functor out of
// category×category, a unit object, and one chosen component per coherence
// isomorphism. Nothing here is assumed strict; whether the components satisfy
// naturality and the coherence axioms is answered by validate_monoidal and
// validate_braiding.
struct MonoidalStructure {
  CategoryRef category;
  CategoryRef square;  // category×category, the tensor's source
  FunctorData tensor;
  Obj unit = -1;
  std::vector<Mor> associator;     // flat (x*n + y)*n + z, (x⊗y)⊗z -> x⊗(y⊗z)
  std::vector<Mor> left_unitor;    // unit⊗x -> x
  std::vector<Mor> right_unitor;   // x⊗unit -> x
  std::vector<Mor> braiding;       // flat x*n + y, x⊗y -> y⊗x; empty when absent

  bool braided() const { return !braiding.empty(); }
  Obj ten(Obj x, Obj y) const;
  Mor ten_mor(Mor f, Mor g) const;
  Mor assoc(Obj x, Obj y, Obj z) const;
  Mor braid(Obj x, Obj y) const;

  bool operator==(const MonoidalStructure& other) const;
};

using MonoidalRef = std::shared_ptr<const MonoidalStructure>;

inline MonoidalRef make_monoidal_ref(MonoidalStructure&& m) {
  return std::make_shared<const MonoidalStructure>(std::move(m));
}

// Laws checked and reported, one failure per offending tuple:
//   tensor:<law>                    the tensor fails a functor law
//   associator-endpoints/-invertible/-natural
//   left-unitor-*, right-unitor-*   same pattern, per object / per morphism
//   pentagon                        object quadruple
//   triangle                        object pair
// Component indices out of range and shape mismatches are structural errors.
CoherenceReport validate_monoidal(const MonoidalStructure& m);

// Braiding endpoints, invertibility, naturality, and both hexagons. Expects
// validate_monoidal to have passed; throws when the structure has no braiding.
CoherenceReport validate_braiding(const MonoidalStructure& m);

// The monoidal structure carried by chosen binary products and the terminal
// object (respectively coproducts and the initial object). Associators,
// unitors and the braiding are mediating maps computed from the witnesses,
// never assumed to be identities. Throws LimitAbsent when coverage is short.
MonoidalRef cartesian_monoidal(const LimitCache& cache);
MonoidalRef cocartesian_monoidal(const LimitCache& cache);

// Componentwise structure on a product category, built here unless supplied.
MonoidalRef product_monoidal(const MonoidalRef& a, const MonoidalRef& b,
                             CategoryRef product = nullptr);

// A lax monoidal functor: structure maps phi_{y,z}: F y ⊗ F z -> F(y⊗z) and
// phi0: unit -> F(unit) on top of an ordinary functor between the underlying
// categories.
struct MonoidalFunctorData {
  MonoidalRef source, target;
  FunctorData functor;
  std::vector<Mor> phi;  // flat y*n + z over source objects
  Mor phi0 = -1;

  Mor phi_at(Obj y, Obj z) const;

  bool operator==(const MonoidalFunctorData& other) const;
};

enum class MonoidalStrength { lax, normal, strong };

const char* to_string(MonoidalStrength s);

// Structure maps with the wrong endpoints are structural errors. Reported
// laws: functor:<law> for the underlying functor, structure-map-natural per
// morphism pair, associativity-coherence per object triple, and
// left-/right-unit-coherence per object.
CoherenceReport validate_monoidal_functor(const MonoidalFunctorData& f);

// strong when phi0 and every phi component are invertible, normal when at
// least phi0 is, lax otherwise. Meaningful for validated functors.
MonoidalStrength classify_monoidal_functor(const MonoidalFunctorData& f);

MonoidalFunctorData identity_monoidal_functor(const MonoidalRef& m);

// outer∘inner with the composite structure maps
// outer(inner_phi) ∘ outer_phi at the image objects.
MonoidalFunctorData compose_monoidal_functors(const MonoidalFunctorData& outer,
                                              const MonoidalFunctorData& inner);

// F×G with componentwise structure maps, between product_monoidal structures
// (built here unless supplied).
MonoidalFunctorData monoidal_functor_pair(const MonoidalFunctorData& f,
                                          const MonoidalFunctorData& g,
                                          MonoidalRef source_m = nullptr,
                                          MonoidalRef target_m = nullptr);

// The tensor of a braided structure as a strong monoidal functor from the
// componentwise structure on category², with the middle-four interchange as
// its binary structure map. `pairwise` must be product_monoidal(m, m) when
// supplied.
MonoidalFunctorData tensor_strong_monoidal(const MonoidalRef& m, MonoidalRef pairwise = nullptr);

// a×− as a lax monoidal functor between the cocartesian structures on the
// category: the binary structure map (a×y)+(a×z) -> a×(y+z) is the canonical
// comparison at a, the nullary one the unique map 0 -> a×0. Needs total
// products and coproducts.
MonoidalFunctorData meet_lax_functor(const LimitCache& cache, Obj a, MonoidalRef cocart = nullptr);

// A transformation between lax monoidal functors, subject to compatibility
// with the binary and nullary structure maps on top of ordinary naturality.
struct MonoidalNatData {
  MonoidalFunctorData source, target;
  std::vector<Mor> components;  // one per source-category object
};

// Reported laws: naturality per square, monoidal-binary per object pair,
// monoidal-nullary. skip_nullary drops the nullary axiom, which some results
// never use.
CoherenceReport validate_monoidal_nat(const MonoidalNatData& t, bool skip_nullary = false);

// The two monoidal functors a strength comparison for F runs between:
// (x,y) -> F x ⊗ F y and (x,y) -> F(x⊗y), as composites of F×F and the
// tensor-as-functor with F.
std::pair<MonoidalFunctorData, MonoidalFunctorData> strength_square_functors(
    const MonoidalFunctorData& f);

// If F is a normal lax monoidal functor between braided monoidal categories
// and some monoidal natural isomorphism F x ⊗ F y ≅ F(x⊗y) exists, then F's
// own structure maps are invertible too. Hypotheses are recorded one by one;
// when they hold, the conclusion is re-derived pointwise through the unit
// instance of the compatibility square and transported along the unitors, so
// a failure anywhere is an engine defect (verdict inconsistent).
// relaxed_units drops the nullary compatibility hypothesis, which the
// derivation never uses.
TheoremReport check_strength_theorem(const MonoidalFunctorData& f, const MonoidalNatData& psi,
                                     bool relaxed_units = false);

// (x,y) -> F x + F y and (x,y) -> F(x+y) as plain functors on the square,
// for comparison searches.
std::pair<FunctorData, FunctorData> coproduct_comparison_functors(const FunctorData& f,
                                                                  const LimitCache& source_limits,
                                                                  const LimitCache& target_limits);

// If F preserves the initial object and some natural isomorphism
// F x + F y ≅ F(x+y) exists, then the canonical copairing comparisons are
// invertible, i.e. F preserves binary coproducts. The replay equips F with
// its canonical monoidal structure over the cocartesian structures, checks
// that the given isomorphism is automatically monoidal, and hands the result
// to check_strength_theorem.
TheoremReport check_coproduct_preservation(const FunctorData& f, const NatTransformData& psi,
                                           const LimitCache& source_limits,
                                           const LimitCache& target_limits);

}  // namespace fincat
