#pragma once

#include <unordered_map>

#include "fincat/functor.hpp"
#include "fincat/report.hpp"

namespace fincat {

// A required (co)limit witness is not in the cache.
class LimitAbsent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A binary product with its full mediating-map table. The table is verified
// at construction time: for every object a and every pair (f: a->left,
// g: a->right) there is exactly one u with pr1∘u = f and pr2∘u = g.
struct ProductWitness {
  Obj left = -1, right = -1;
  Obj apex = -1;
  Mor pr1 = -1, pr2 = -1;
  std::unordered_map<std::uint64_t, Mor> pairing;  // key pack(f, g)

  Mor pair(Mor f, Mor g) const;
};

// Dual data: injections into the apex and a copairing table keyed by
// cocones (f: left->a, g: right->a).
struct CoproductWitness {
  Obj left = -1, right = -1;
  Obj apex = -1;
  Mor in1 = -1, in2 = -1;
  std::unordered_map<std::uint64_t, Mor> copairing;

  Mor copair(Mor f, Mor g) const;
};

std::optional<Obj> find_terminal(const FinCategory& c);
std::optional<Obj> find_initial(const FinCategory& c);

// Deterministic choice: smallest valid apex index, then lexicographically
// smallest projection (injection) pair. Uniqueness of mediating morphisms is
// checked while the table is filled, so a returned witness is always sound.
std::optional<ProductWitness> find_binary_product(const FinCategory& c, Obj x, Obj y);
std::optional<CoproductWitness> find_binary_coproduct(const FinCategory& c, Obj x, Obj y);

// Every witness for the pair, in the same deterministic order. Mostly a tool
// for comparing independent witnesses against each other.
std::vector<ProductWitness> enumerate_binary_products(const FinCategory& c, Obj x, Obj y);

Mor pair_into_product(const FinCategory& c, const ProductWitness& w, Mor f, Mor g);
Mor copair_from_coproduct(const FinCategory& c, const CoproductWitness& w, Mor f, Mor g);

// f: x -> x', g: y -> y' acting on chosen witnesses: f×g between the product
// apexes, f+g between the coproduct apexes.
Mor product_action(const FinCategory& c, const ProductWitness& from, const ProductWitness& to,
                   Mor f, Mor g);
Mor coproduct_action(const FinCategory& c, const CoproductWitness& from,
                     const CoproductWitness& to, Mor f, Mor g);

// Initial and terminal object coincide up to isomorphism. The zero object is
// the initial index; the isomorphism is absorbed into the morphism table,
// which holds the unique map y -> zero -> z for every ordered pair.
struct ZeroStructure {
  Obj zero = -1;
  std::vector<Mor> through_zero;  // flat y * n + z

  Mor zero_morphism(Obj y, Obj z, Obj n) const { return through_zero[static_cast<std::size_t>(y) * n + z]; }
};

// Eagerly computed witnesses for one category: terminal, initial, all binary
// products and coproducts that exist, and the zero structure if there is one.
class LimitCache {
 public:
  explicit LimitCache(CategoryRef c);

  const CategoryRef& category() const { return category_; }
  std::optional<Obj> terminal() const { return terminal_; }
  std::optional<Obj> initial() const { return initial_; }
  const std::optional<ZeroStructure>& zero() const { return zero_; }

  const ProductWitness* product(Obj x, Obj y) const;
  const CoproductWitness* coproduct(Obj x, Obj y) const;
  bool products_total() const { return missing_products_.empty(); }
  bool coproducts_total() const { return missing_coproducts_.empty(); }
  const std::vector<std::array<Obj, 2>>& missing_products() const { return missing_products_; }
  const std::vector<std::array<Obj, 2>>& missing_coproducts() const { return missing_coproducts_; }

  const ProductWitness& require_product(Obj x, Obj y) const;
  const CoproductWitness& require_coproduct(Obj x, Obj y) const;

 private:
  CategoryRef category_;
  std::optional<Obj> terminal_, initial_;
  std::optional<ZeroStructure> zero_;
  std::vector<std::optional<ProductWitness>> products_;
  std::vector<std::optional<CoproductWitness>> coproducts_;
  std::vector<std::array<Obj, 2>> missing_products_, missing_coproducts_;
};

std::optional<ZeroStructure> zero_structure(const FinCategory& c);

// No morphism out of x is ever parallel to a distinct one: |hom(a, x)| <= 1
// for every a.
bool is_subterminal(const FinCategory& c, Obj x);

// The canonical comparison (x×y)+(x×z) -> x×(y+z), copaired from x×i and x×j.
Mor canonical_delta(const LimitCache& cache, Obj x, Obj y, Obj z);

// The canonical comparison y+z -> y×z copaired from (id, 0) and (0, id);
// requires the zero structure.
Mor canonical_alpha(const LimitCache& cache, Obj y, Obj z);

enum class Scope { All, Existing };

// Scope::All demands every needed witness (LimitAbsent otherwise) and fully
// decides the property. Scope::Existing checks the triples (pairs) whose
// witnesses exist and reports the skipped ones, leaving the verdict
// not_applicable when coverage is partial.
TheoremReport is_distributive(const LimitCache& cache, Scope scope);
TheoremReport is_semi_additive(const LimitCache& cache, Scope scope);

// The two sides of the ternary comparison as functors on C^3 (with the
// canonical comparison a transformation between them), and the binary pair
// (y, z) -> y+z and (y, z) -> y×z on C^2. Both require total witness
// coverage and throw LimitAbsent naming the first gap.
struct DeltaFunctors {
  CategoryRef cube;
  FunctorData lhs;  // (x,y,z) -> (x×y)+(x×z)
  FunctorData rhs;  // (x,y,z) -> x×(y+z)
  std::vector<Mor> delta;  // canonical component per cube object
};

struct PlusTimesFunctors {
  CategoryRef square;
  FunctorData plus;
  FunctorData times;
  std::vector<Mor> alpha;  // empty when there is no zero structure
};

DeltaFunctors delta_functors(const LimitCache& cache);
PlusTimesFunctors plus_times_functors(const LimitCache& cache);

}  // namespace fincat
