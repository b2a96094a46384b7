#include "fincat/category.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace fincat {

Mor FinCategory::compose(Mor g, Mor f) const {
  auto entry = composite_entry(g, f);
  if (!entry)
    throw StructuralError("composite undefined for pair (" + std::to_string(g) +
                          ", " + std::to_string(f) + ")");
  return *entry;
}

std::optional<Mor> FinCategory::composite_entry(Mor g, Mor f) const {
  check_mor(g);
  check_mor(f);
  if (dst_[f] != src_[g])
    throw NotComposable("pair (" + std::to_string(g) + ", " + std::to_string(f) +
                        ") is not composable: dst " + std::to_string(dst_[f]) +
                        " != src " + std::to_string(src_[g]));
  Mor entry = table_[row_offset_[g] + static_cast<std::size_t>(pos_in_dst_[f])];
  if (entry < 0) return std::nullopt;
  return entry;
}

std::span<const Mor> FinCategory::hom(Obj x, Obj y) const {
  check_obj(x);
  check_obj(y);
  std::size_t cell = static_cast<std::size_t>(x) * identity_.size() + y;
  return {hom_ids_.data() + hom_offsets_[cell],
          hom_offsets_[cell + 1] - hom_offsets_[cell]};
}

std::span<const Mor> FinCategory::into(Obj x) const {
  check_obj(x);
  return {into_ids_.data() + into_offsets_[x], into_offsets_[x + 1] - into_offsets_[x]};
}

std::span<const Mor> FinCategory::out_of(Obj x) const {
  check_obj(x);
  return {out_ids_.data() + out_offsets_[x], out_offsets_[x + 1] - out_offsets_[x]};
}

bool FinCategory::has_object_names() const {
  return std::any_of(object_names_.begin(), object_names_.end(),
                     [](const std::string& s) { return !s.empty(); });
}

bool FinCategory::has_morphism_names() const {
  return std::any_of(morphism_names_.begin(), morphism_names_.end(),
                     [](const std::string& s) { return !s.empty(); });
}

bool identical_tables(const FinCategory& a, const FinCategory& b) {
  return a.src_ == b.src_ && a.dst_ == b.dst_ && a.identity_ == b.identity_ &&
         a.row_offset_ == b.row_offset_ && a.table_ == b.table_;
}

bool FinCategory::operator==(const FinCategory& other) const {
  return identical_tables(*this, other) && object_names_ == other.object_names_ &&
         morphism_names_ == other.morphism_names_;
}

Obj CategoryBuilder::add_object(std::string name) {
  identities_.push_back(std::nullopt);
  object_names_.push_back(std::move(name));
  return static_cast<Obj>(identities_.size() - 1);
}

Mor CategoryBuilder::add_morphism(Obj src, Obj dst, std::string name) {
  if (src < 0 || src >= object_count() || dst < 0 || dst >= object_count())
    throw StructuralError("morphism endpoints out of range");
  srcs_.push_back(src);
  dsts_.push_back(dst);
  morphism_names_.push_back(std::move(name));
  return static_cast<Mor>(srcs_.size() - 1);
}

void CategoryBuilder::set_identity(Obj x, Mor f) {
  if (x < 0 || x >= object_count()) throw StructuralError("identity object out of range");
  if (f < 0 || f >= morphism_count()) throw StructuralError("identity morphism out of range");
  if (srcs_[f] != x || dsts_[f] != x)
    throw StructuralError("identity of object " + std::to_string(x) +
                          " must be an endomorphism of it");
  identities_[x] = f;
}

void CategoryBuilder::set_composite(Mor g, Mor f, Mor gf) {
  if (g < 0 || g >= morphism_count() || f < 0 || f >= morphism_count() || gf < 0 ||
      gf >= morphism_count())
    throw StructuralError("composite entry index out of range");
  if (dsts_[f] != srcs_[g])
    throw NotComposable("cannot record a composite for a non-composable pair (" +
                        std::to_string(g) + ", " + std::to_string(f) + ")");
  composites_.push_back({g, f, gf});
}

FinCategory CategoryBuilder::build() const {
  FinCategory c;
  const std::size_t n = identities_.size();
  const std::size_t m = srcs_.size();

  c.src_ = srcs_;
  c.dst_ = dsts_;
  c.object_names_ = object_names_;
  c.morphism_names_ = morphism_names_;
  c.identity_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (!identities_[x])
      throw StructuralError("object " + std::to_string(x) + " has no identity");
    c.identity_[x] = *identities_[x];
  }

  auto fill_csr = [&](const std::vector<Obj>& key, std::vector<std::size_t>& offsets,
                      std::vector<Mor>& ids) {
    offsets.assign(n + 1, 0);
    for (Obj k : key) offsets[static_cast<std::size_t>(k) + 1]++;
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    ids.resize(m);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t f = 0; f < m; ++f) ids[cursor[key[f]]++] = static_cast<Mor>(f);
  };
  fill_csr(c.dst_, c.into_offsets_, c.into_ids_);
  fill_csr(c.src_, c.out_offsets_, c.out_ids_);

  c.pos_in_dst_.resize(m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = c.into_offsets_[x]; i < c.into_offsets_[x + 1]; ++i)
      c.pos_in_dst_[c.into_ids_[i]] = static_cast<Mor>(i - c.into_offsets_[x]);

  c.hom_offsets_.assign(n * n + 1, 0);
  for (std::size_t f = 0; f < m; ++f)
    c.hom_offsets_[static_cast<std::size_t>(c.src_[f]) * n + c.dst_[f] + 1]++;
  std::partial_sum(c.hom_offsets_.begin(), c.hom_offsets_.end(), c.hom_offsets_.begin());
  c.hom_ids_.resize(m);
  {
    std::vector<std::size_t> cursor(c.hom_offsets_.begin(), c.hom_offsets_.end() - 1);
    for (std::size_t f = 0; f < m; ++f)
      c.hom_ids_[cursor[static_cast<std::size_t>(c.src_[f]) * n + c.dst_[f]]++] =
          static_cast<Mor>(f);
  }

  c.row_offset_.resize(m + 1);
  std::size_t total = 0;
  for (std::size_t g = 0; g < m; ++g) {
    c.row_offset_[g] = total;
    Obj x = c.src_[g];
    total += c.into_offsets_[x + 1] - c.into_offsets_[x];
  }
  c.row_offset_[m] = total;
  c.table_.assign(total, -1);

  for (const auto& [g, f, gf] : composites_) {
    std::size_t slot = c.row_offset_[g] + static_cast<std::size_t>(c.pos_in_dst_[f]);
    if (c.table_[slot] >= 0 && c.table_[slot] != gf)
      throw StructuralError("composite recorded twice with different values for pair (" +
                            std::to_string(g) + ", " + std::to_string(f) + ")");
    c.table_[slot] = gf;
  }
  return c;
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  auto fail = [&](std::string law, std::vector<Mor> where) {
    report.failures.push_back({std::move(law), std::move(where)});
  };

  const Mor m = c.morphism_count();
  const Obj n = c.object_count();

  for (Mor g = 0; g < m; ++g) {
    for (Mor f : c.into(c.src(g))) {
      auto entry = c.composite_entry(g, f);
      if (!entry) {
        fail("composition-total", {g, f});
        continue;
      }
      if (c.src(*entry) != c.src(f) || c.dst(*entry) != c.dst(g))
        fail("composite-endpoints", {g, f, *entry});
    }
  }

  // Identity and associativity laws. Slots that are unset or whose entries
  // have corrupt endpoints were reported above; skip them here rather than
  // tripping over them.
  auto entry = [&](Mor g, Mor f) -> std::optional<Mor> {
    if (!c.composable(g, f)) return std::nullopt;
    return c.composite_entry(g, f);
  };
  for (Mor f = 0; f < m; ++f) {
    if (auto r = entry(f, c.identity(c.src(f))); r && *r != f) fail("identity-right", {f});
    if (auto l = entry(c.identity(c.dst(f)), f); l && *l != f) fail("identity-left", {f});
  }

  for (Obj y = 0; y < n; ++y) {
    for (Mor g : c.out_of(y)) {
      for (Mor f : c.into(y)) {
        auto gf = entry(g, f);
        if (!gf) continue;
        for (Mor h : c.out_of(c.dst(g))) {
          auto hg = entry(h, g);
          if (!hg) continue;
          auto left = entry(h, *gf);
          auto right = entry(*hg, f);
          if (left && right && *left != *right) fail("associativity", {h, g, f});
        }
      }
    }
  }

  report.ok = report.failures.empty();
  return report;
}

Mor compose(const FinCategory& c, Mor g, Mor f) { return c.compose(g, f); }

std::optional<Mor> is_invertible(const FinCategory& c, Mor f) {
  Obj x = c.src(f), y = c.dst(f);
  for (Mor g : c.hom(y, x)) {
    if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) return g;
  }
  return std::nullopt;
}

FinCategory opposite(const FinCategory& c) {
  CategoryBuilder b;
  for (Obj x = 0; x < c.object_count(); ++x) b.add_object(c.object_name(x));
  for (Mor f = 0; f < c.morphism_count(); ++f)
    b.add_morphism(c.dst(f), c.src(f), c.morphism_name(f));
  for (Obj x = 0; x < c.object_count(); ++x) b.set_identity(x, c.identity(x));
  // g∘f in the opposite is f∘g in c; the pair (g, f) is composable there
  // exactly when (f, g) is composable here.
  for (Mor f = 0; f < c.morphism_count(); ++f)
    for (Mor g : c.out_of(c.dst(f)))
      if (auto gf = c.composite_entry(g, f)) b.set_composite(f, g, *gf);
  return b.build();
}

Obj tuple_encode(std::span<const Obj> dims, std::span<const Obj> tuple) {
  if (dims.size() != tuple.size()) throw StructuralError("tuple arity mismatch");
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= dims[i]) throw StructuralError("tuple component out of range");
    idx = idx * dims[i] + tuple[i];
  }
  return static_cast<Obj>(idx);
}

std::vector<Obj> tuple_decode(std::span<const Obj> dims, Obj index) {
  std::vector<Obj> tuple(dims.size());
  std::int64_t rest = index;
  for (std::size_t i = dims.size(); i-- > 0;) {
    tuple[i] = static_cast<Obj>(rest % dims[i]);
    rest /= dims[i];
  }
  if (rest != 0) throw StructuralError("tuple index out of range");
  return tuple;
}

FinCategory product_category(const std::vector<CategoryRef>& factors) {
  if (factors.empty()) throw StructuralError("product of an empty list of categories");
  const std::size_t k = factors.size();

  std::vector<Obj> odims(k), mdims(k);
  std::int64_t objects = 1, morphisms = 1, pairs = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const FinCategory& c = *factors[i];
    odims[i] = c.object_count();
    mdims[i] = c.morphism_count();
    objects *= odims[i];
    morphisms *= mdims[i];
    std::int64_t comp = 0;
    for (Obj x = 0; x < c.object_count(); ++x)
      comp += static_cast<std::int64_t>(c.into(x).size()) * c.out_of(x).size();
    pairs *= comp;
    if (objects > std::numeric_limits<Obj>::max() ||
        morphisms > std::numeric_limits<Mor>::max() || pairs > (std::int64_t{1} << 28))
      throw StructuralError("product category too large to materialize");
  }

  const bool name_objects =
      std::all_of(factors.begin(), factors.end(),
                  [](const CategoryRef& c) { return c->has_object_names(); });

  CategoryBuilder b;
  std::vector<Obj> tup(k);
  for (Obj x = 0; x < objects; ++x) {
    tup = tuple_decode(odims, x);
    std::string name;
    if (name_objects) {
      name = "(";
      for (std::size_t i = 0; i < k; ++i) {
        if (i) name += ",";
        name += factors[i]->object_name(tup[i]);
      }
      name += ")";
    }
    b.add_object(std::move(name));
  }

  std::vector<Obj> stup(k), dtup(k);
  for (Mor f = 0; f < morphisms; ++f) {
    tup = tuple_decode(mdims, f);
    for (std::size_t i = 0; i < k; ++i) {
      stup[i] = factors[i]->src(tup[i]);
      dtup[i] = factors[i]->dst(tup[i]);
    }
    b.add_morphism(tuple_encode(odims, stup), tuple_encode(odims, dtup));
  }

  std::vector<Obj> idt(k);
  for (Obj x = 0; x < objects; ++x) {
    tup = tuple_decode(odims, x);
    for (std::size_t i = 0; i < k; ++i) idt[i] = factors[i]->identity(tup[i]);
    b.set_identity(x, tuple_encode(mdims, idt));
  }

  // Composable tuples are products of composable pairs componentwise; walk
  // them with an odometer over the per-factor into-lists.
  std::vector<Obj> gt(k), ft(k), ht(k);
  std::vector<std::span<const Mor>> choices(k);
  std::vector<std::size_t> pos(k);
  for (Mor g = 0; g < morphisms; ++g) {
    gt = tuple_decode(mdims, g);
    bool empty = false;
    for (std::size_t i = 0; i < k; ++i) {
      choices[i] = factors[i]->into(factors[i]->src(gt[i]));
      if (choices[i].empty()) empty = true;
    }
    if (empty) continue;
    std::fill(pos.begin(), pos.end(), 0);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) {
        ft[i] = choices[i][pos[i]];
        ht[i] = factors[i]->compose(gt[i], ft[i]);
      }
      b.set_composite(g, tuple_encode(mdims, ft), tuple_encode(mdims, ht));
      std::size_t i = k;
      while (i-- > 0) {
        if (++pos[i] < choices[i].size()) break;
        pos[i] = 0;
        if (i == 0) goto next_g;
      }
    }
  next_g:;
  }
  return b.build();
}

std::string object_label(const FinCategory& c, Obj x) {
  const std::string& name = c.object_name(x);
  return name.empty() ? std::to_string(x) : name;
}

std::string morphism_label(const FinCategory& c, Mor f) {
  const std::string& name = c.morphism_name(f);
  if (!name.empty()) return name;
  return std::to_string(f) + ":" + object_label(c, c.src(f)) + "->" +
         object_label(c, c.dst(f));
}

bool is_trivial(const FinCategory& c) {
  if (c.object_count() < 1) return false;
  for (Obj x = 0; x < c.object_count(); ++x)
    for (Obj y = 0; y < c.object_count(); ++y)
      if (c.hom(x, y).size() != 1) return false;
  return true;
}

}  // namespace fincat
