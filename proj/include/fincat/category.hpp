#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fincat {

// Objects and morphisms are dense indices into their category's tables.
// Equality of objects or morphisms is index equality, nothing finer.
using Obj = std::int32_t;
using Mor = std::int32_t;

// Malformed data: indices out of range, lookups of pairs that are not
// composable, tables of the wrong shape. Distinct from law violations,
// which validators report as values instead of throwing.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotComposable : public StructuralError {
 public:
  using StructuralError::StructuralError;
};

struct ValidationFailure {
  std::string law;            // e.g. "associativity", "identity-left"
  std::vector<Mor> where;     // offending indices, meaning depends on the law
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationFailure> failures;
};

class FinCategory;
class CategoryBuilder;

using CategoryRef = std::shared_ptr<const FinCategory>;

// A finite category as explicit tables: a morphism list with endpoints, an
// identity per object, and a composition table covering exactly the
// composable pairs. Instances are immutable once built; validity of the
// category laws is a separate question answered by validate_category.
class FinCategory {
 public:
  FinCategory() = default;

  Obj object_count() const { return static_cast<Obj>(identity_.size()); }
  Mor morphism_count() const { return static_cast<Mor>(src_.size()); }

  Obj src(Mor f) const { return src_[check_mor(f)]; }
  Obj dst(Mor f) const { return dst_[check_mor(f)]; }
  Mor identity(Obj x) const { return identity_[check_obj(x)]; }

  bool composable(Mor g, Mor f) const {
    return dst_[check_mor(f)] == src_[check_mor(g)];
  }

  // Composite g∘f. Throws NotComposable when dst(f) != src(g) and
  // StructuralError when the table has no entry for the pair.
  Mor compose(Mor g, Mor f) const;

  // Raw table access: the recorded composite, or nullopt when the slot for a
  // composable pair was never filled. Throws NotComposable on non-pairs.
  std::optional<Mor> composite_entry(Mor g, Mor f) const;

  std::span<const Mor> hom(Obj x, Obj y) const;
  std::span<const Mor> into(Obj x) const;    // all morphisms with dst == x
  std::span<const Mor> out_of(Obj x) const;  // all morphisms with src == x

  const std::string& object_name(Obj x) const { return object_names_[check_obj(x)]; }
  const std::string& morphism_name(Mor f) const { return morphism_names_[check_mor(f)]; }
  bool has_object_names() const;
  bool has_morphism_names() const;

  // Full structural equality, names included.
  bool operator==(const FinCategory& other) const;

 private:
  friend class CategoryBuilder;
  friend bool identical_tables(const FinCategory&, const FinCategory&);

  Mor check_mor(Mor f) const {
    if (f < 0 || f >= static_cast<Mor>(src_.size()))
      throw StructuralError("morphism index out of range: " + std::to_string(f));
    return f;
  }
  Obj check_obj(Obj x) const {
    if (x < 0 || x >= static_cast<Obj>(identity_.size()))
      throw StructuralError("object index out of range: " + std::to_string(x));
    return x;
  }

  std::vector<Obj> src_, dst_;
  std::vector<Mor> identity_;
  std::vector<std::string> object_names_, morphism_names_;

  // Morphisms grouped by target object ("into" lists) drive the packed
  // composition layout: row g holds composites g∘f for f in into(src(g)),
  // at the position f occupies in that list. -1 marks a slot never filled.
  std::vector<std::size_t> into_offsets_;  // object_count+1
  std::vector<Mor> into_ids_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Mor> out_ids_;
  std::vector<Mor> pos_in_dst_;            // per morphism
  std::vector<std::size_t> row_offset_;    // per morphism, into the packed table
  std::vector<Mor> table_;

  // hom(x, y) as one CSR over (x*n + y).
  std::vector<std::size_t> hom_offsets_;
  std::vector<Mor> hom_ids_;
};

// Equality of everything except names.
bool identical_tables(const FinCategory& a, const FinCategory& b);

// Incremental construction. build() performs the structural checks (index
// ranges, identity endpoints, composites only on composable pairs) and
// freezes the result; law checking stays with validate_category.
class CategoryBuilder {
 public:
  Obj add_object(std::string name = "");
  Mor add_morphism(Obj src, Obj dst, std::string name = "");
  void set_identity(Obj x, Mor f);
  void set_composite(Mor g, Mor f, Mor gf);

  Obj object_count() const { return static_cast<Obj>(identities_.size()); }
  Mor morphism_count() const { return static_cast<Mor>(srcs_.size()); }

  FinCategory build() const;

 private:
  std::vector<Obj> srcs_, dsts_;
  std::vector<std::optional<Mor>> identities_;
  std::vector<std::string> object_names_, morphism_names_;
  std::vector<std::array<Mor, 3>> composites_;
};

// Checks the category laws and reports every violation:
//   composition-total      a composable pair whose table slot is unset
//   composite-endpoints    src/dst of a recorded composite do not match
//   identity-left/right    id∘f != f or f∘id != f
//   associativity          h∘(g∘f) != (h∘g)∘f on some composable triple
ValidationReport validate_category(const FinCategory& c);

Mor compose(const FinCategory& c, Mor g, Mor f);

// The two-sided inverse of f if it has one.
std::optional<Mor> is_invertible(const FinCategory& c, Mor f);

// Same object and morphism indices, arrows reversed, composition transposed.
FinCategory opposite(const FinCategory& c);

// Finite product of one or more categories. Objects and morphisms are tuples
// encoded densely in row-major order (first factor most significant); the
// codec below is the public contract for that encoding. Empty factor lists
// are rejected.
FinCategory product_category(const std::vector<CategoryRef>& factors);

Obj tuple_encode(std::span<const Obj> dims, std::span<const Obj> tuple);
std::vector<Obj> tuple_decode(std::span<const Obj> dims, Obj index);

// Exactly one morphism between every ordered pair of objects (and at least
// one object).
bool is_trivial(const FinCategory& c);

inline CategoryRef make_ref(FinCategory&& c) {
  return std::make_shared<const FinCategory>(std::move(c));
}

// The object's name when it has one, its index otherwise. For messages.
std::string object_label(const FinCategory& c, Obj x);
std::string morphism_label(const FinCategory& c, Mor f);

}  // namespace fincat
