#include "fincat/limits.hpp"

#include <algorithm>

namespace fincat {

namespace {

std::uint64_t pack(Mor f, Mor g) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(f)) << 32) |
         static_cast<std::uint32_t>(g);
}

// Candidate apexes ascending, cone pairs in lexicographic order. The size
// precondition |hom(a, p)| == |hom(a, x)| * |hom(a, y)| makes the mediating
// map u -> (p1∘u, p2∘u) a bijection as soon as it is injective, which is
// what the inner loop verifies while it fills the pairing table.
void product_search(const FinCategory& c, Obj x, Obj y, bool stop_at_first,
                    std::vector<ProductWitness>& out) {
  const Obj n = c.object_count();
  for (Obj p = 0; p < n; ++p) {
    bool counts_ok = true;
    for (Obj a = 0; a < n && counts_ok; ++a)
      counts_ok = c.hom(a, p).size() == c.hom(a, x).size() * c.hom(a, y).size();
    if (!counts_ok) continue;

    for (Mor p1 : c.hom(p, x)) {
      for (Mor p2 : c.hom(p, y)) {
        std::unordered_map<std::uint64_t, Mor> pairing;
        pairing.reserve(c.into(p).size());
        bool ok = true;
        for (Obj a = 0; a < n && ok; ++a) {
          for (Mor u : c.hom(a, p)) {
            if (!pairing.emplace(pack(c.compose(p1, u), c.compose(p2, u)), u).second) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        out.push_back({x, y, p, p1, p2, std::move(pairing)});
        if (stop_at_first) return;
      }
    }
  }
}

CoproductWitness from_opposite(const ProductWitness& w) {
  // Opposites keep all indices, so a product witness found in op(c) reads
  // directly as a coproduct witness of c.
  CoproductWitness d;
  d.left = w.left;
  d.right = w.right;
  d.apex = w.apex;
  d.in1 = w.pr1;
  d.in2 = w.pr2;
  d.copairing = w.pairing;
  return d;
}

std::string pair_label(const FinCategory& c, Obj x, Obj y) {
  return "(" + object_label(c, x) + "," + object_label(c, y) + ")";
}

std::string triple_label(const FinCategory& c, Obj x, Obj y, Obj z) {
  return "(" + object_label(c, x) + "," + object_label(c, y) + "," + object_label(c, z) + ")";
}

}  // namespace

Mor ProductWitness::pair(Mor f, Mor g) const {
  auto it = pairing.find(pack(f, g));
  if (it == pairing.end())
    throw StructuralError("product witness has no mediating entry for the cone (" +
                          std::to_string(f) + ", " + std::to_string(g) + ")");
  return it->second;
}

Mor CoproductWitness::copair(Mor f, Mor g) const {
  auto it = copairing.find(pack(f, g));
  if (it == copairing.end())
    throw StructuralError("coproduct witness has no mediating entry for the cocone (" +
                          std::to_string(f) + ", " + std::to_string(g) + ")");
  return it->second;
}

std::optional<Obj> find_terminal(const FinCategory& c) {
  for (Obj t = 0; t < c.object_count(); ++t) {
    bool ok = true;
    for (Obj a = 0; a < c.object_count() && ok; ++a) ok = c.hom(a, t).size() == 1;
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<Obj> find_initial(const FinCategory& c) {
  for (Obj i = 0; i < c.object_count(); ++i) {
    bool ok = true;
    for (Obj a = 0; a < c.object_count() && ok; ++a) ok = c.hom(i, a).size() == 1;
    if (ok) return i;
  }
  return std::nullopt;
}

std::optional<ProductWitness> find_binary_product(const FinCategory& c, Obj x, Obj y) {
  std::vector<ProductWitness> out;
  product_search(c, x, y, true, out);
  if (out.empty()) return std::nullopt;
  return std::move(out.front());
}

std::vector<ProductWitness> enumerate_binary_products(const FinCategory& c, Obj x, Obj y) {
  std::vector<ProductWitness> out;
  product_search(c, x, y, false, out);
  return out;
}

std::optional<CoproductWitness> find_binary_coproduct(const FinCategory& c, Obj x, Obj y) {
  FinCategory op = opposite(c);
  auto w = find_binary_product(op, x, y);
  if (!w) return std::nullopt;
  return from_opposite(*w);
}

Mor pair_into_product(const FinCategory& c, const ProductWitness& w, Mor f, Mor g) {
  if (c.src(f) != c.src(g))
    throw StructuralError("cone legs start at different objects");
  if (c.dst(f) != w.left || c.dst(g) != w.right)
    throw StructuralError("cone legs do not land on the witness factors");
  return w.pair(f, g);
}

Mor copair_from_coproduct(const FinCategory& c, const CoproductWitness& w, Mor f, Mor g) {
  if (c.dst(f) != c.dst(g))
    throw StructuralError("cocone legs end at different objects");
  if (c.src(f) != w.left || c.src(g) != w.right)
    throw StructuralError("cocone legs do not start at the witness summands");
  return w.copair(f, g);
}

std::optional<ZeroStructure> zero_structure(const FinCategory& c) {
  auto initial = find_initial(c);
  auto terminal = find_terminal(c);
  if (!initial || !terminal) return std::nullopt;

  // The unique map initial -> terminal must be invertible; if it is, the
  // initial index serves as the zero object.
  std::span<const Mor> connect = c.hom(*initial, *terminal);
  if (connect.size() != 1 || !is_invertible(c, connect[0])) return std::nullopt;

  ZeroStructure z;
  z.zero = *initial;
  const Obj n = c.object_count();
  z.through_zero.resize(static_cast<std::size_t>(n) * n);
  for (Obj y = 0; y < n; ++y) {
    std::span<const Mor> collapse = c.hom(y, z.zero);
    if (collapse.size() != 1)
      throw StructuralError("zero object does not absorb uniquely; category is not valid");
    for (Obj t = 0; t < n; ++t) {
      Mor grow = c.hom(z.zero, t)[0];
      z.through_zero[static_cast<std::size_t>(y) * n + t] = c.compose(grow, collapse[0]);
    }
  }
  return z;
}

bool is_subterminal(const FinCategory& c, Obj x) {
  for (Obj a = 0; a < c.object_count(); ++a)
    if (c.hom(a, x).size() > 1) return false;
  return true;
}

LimitCache::LimitCache(CategoryRef c) : category_(std::move(c)) {
  const FinCategory& cat = *category_;
  const Obj n = cat.object_count();
  terminal_ = find_terminal(cat);
  initial_ = find_initial(cat);
  zero_ = zero_structure(cat);

  products_.resize(static_cast<std::size_t>(n) * n);
  coproducts_.resize(static_cast<std::size_t>(n) * n);
  FinCategory op = opposite(cat);
  for (Obj x = 0; x < n; ++x) {
    for (Obj y = 0; y < n; ++y) {
      std::size_t cell = static_cast<std::size_t>(x) * n + y;
      products_[cell] = find_binary_product(cat, x, y);
      if (!products_[cell]) missing_products_.push_back({x, y});
      if (auto w = find_binary_product(op, x, y)) coproducts_[cell] = from_opposite(*w);
      if (!coproducts_[cell]) missing_coproducts_.push_back({x, y});
    }
  }
}

const ProductWitness* LimitCache::product(Obj x, Obj y) const {
  const auto& slot = products_[static_cast<std::size_t>(x) * category_->object_count() + y];
  return slot ? &*slot : nullptr;
}

const CoproductWitness* LimitCache::coproduct(Obj x, Obj y) const {
  const auto& slot = coproducts_[static_cast<std::size_t>(x) * category_->object_count() + y];
  return slot ? &*slot : nullptr;
}

const ProductWitness& LimitCache::require_product(Obj x, Obj y) const {
  const ProductWitness* w = product(x, y);
  if (!w) throw LimitAbsent("no product " + pair_label(*category_, x, y));
  return *w;
}

const CoproductWitness& LimitCache::require_coproduct(Obj x, Obj y) const {
  const CoproductWitness* w = coproduct(x, y);
  if (!w) throw LimitAbsent("no coproduct " + pair_label(*category_, x, y));
  return *w;
}

Mor canonical_delta(const LimitCache& cache, Obj x, Obj y, Obj z) {
  const FinCategory& c = *cache.category();
  const CoproductWitness& yz = cache.require_coproduct(y, z);
  const ProductWitness& xy = cache.require_product(x, y);
  const ProductWitness& xz = cache.require_product(x, z);
  const ProductWitness& x_yz = cache.require_product(x, yz.apex);
  const CoproductWitness& sum = cache.require_coproduct(xy.apex, xz.apex);

  Mor left = pair_into_product(c, x_yz, xy.pr1, c.compose(yz.in1, xy.pr2));
  Mor right = pair_into_product(c, x_yz, xz.pr1, c.compose(yz.in2, xz.pr2));
  return copair_from_coproduct(c, sum, left, right);
}

Mor canonical_alpha(const LimitCache& cache, Obj y, Obj z) {
  const FinCategory& c = *cache.category();
  if (!cache.zero()) throw LimitAbsent("no zero structure");
  const ZeroStructure& zero = *cache.zero();
  const Obj n = c.object_count();
  const CoproductWitness& sum = cache.require_coproduct(y, z);
  const ProductWitness& prod = cache.require_product(y, z);

  Mor from_y = pair_into_product(c, prod, c.identity(y), zero.zero_morphism(y, z, n));
  Mor from_z = pair_into_product(c, prod, zero.zero_morphism(z, y, n), c.identity(z));
  return copair_from_coproduct(c, sum, from_y, from_z);
}

TheoremReport is_distributive(const LimitCache& cache, Scope scope) {
  const FinCategory& c = *cache.category();
  const Obj n = c.object_count();
  TheoremReport report;
  report.id = "distributive";

  if (scope == Scope::All && (!cache.products_total() || !cache.coproducts_total())) {
    if (!cache.products_total()) {
      auto [x, y] = cache.missing_products().front();
      throw LimitAbsent("no product " + pair_label(c, x, y));
    }
    auto [x, y] = cache.missing_coproducts().front();
    throw LimitAbsent("no coproduct " + pair_label(c, x, y));
  }

  report.conclusion = true;
  for (Obj x = 0; x < n && report.conclusion; ++x) {
    for (Obj y = 0; y < n && report.conclusion; ++y) {
      for (Obj z = 0; z < n && report.conclusion; ++z) {
        const CoproductWitness* yz = cache.coproduct(y, z);
        const ProductWitness* xy = cache.product(x, y);
        const ProductWitness* xz = cache.product(x, z);
        const ProductWitness* x_yz = yz ? cache.product(x, yz->apex) : nullptr;
        const CoproductWitness* sum =
            (xy && xz) ? cache.coproduct(xy->apex, xz->apex) : nullptr;
        if (!yz || !xy || !xz || !x_yz || !sum) {
          report.skipped.push_back({x, y, z});
          continue;
        }
        if (!is_invertible(c, canonical_delta(cache, x, y, z))) {
          report.conclusion = false;
          report.conclusion_witness = triple_label(c, x, y, z);
        }
      }
    }
  }

  bool total = report.skipped.empty();
  report.add_hypothesis("witness coverage total", total,
                        total ? "" : std::to_string(report.skipped.size()) + " triples skipped");
  if (!total)
    report.notes.push_back("coverage partial: " + std::to_string(report.skipped.size()) +
                           " of " + std::to_string(static_cast<long long>(n) * n * n) +
                           " triples lack witnesses");
  if (!report.conclusion)
    report.notes.push_back("comparison not invertible at " + report.conclusion_witness);
  // A counterexample settles the question even under partial coverage.
  report.verdict = (total || !report.conclusion) ? Verdict::consistent : Verdict::not_applicable;
  return report;
}

TheoremReport is_semi_additive(const LimitCache& cache, Scope scope) {
  const FinCategory& c = *cache.category();
  const Obj n = c.object_count();
  TheoremReport report;
  report.id = "semi-additive";

  bool pointed = cache.zero().has_value();
  report.add_hypothesis("pointed (zero object present)", pointed);
  if (!pointed) {
    report.conclusion = false;
    report.conclusion_witness = "not pointed";
    report.notes.push_back("not pointed: no zero object, so not semi-additive");
    report.verdict = Verdict::consistent;  // fully decided, answer is no
    return report;
  }

  if (scope == Scope::All && (!cache.products_total() || !cache.coproducts_total())) {
    if (!cache.products_total()) {
      auto [x, y] = cache.missing_products().front();
      throw LimitAbsent("no product " + pair_label(c, x, y));
    }
    auto [x, y] = cache.missing_coproducts().front();
    throw LimitAbsent("no coproduct " + pair_label(c, x, y));
  }

  report.conclusion = true;
  for (Obj y = 0; y < n && report.conclusion; ++y) {
    for (Obj z = 0; z < n && report.conclusion; ++z) {
      if (!cache.coproduct(y, z) || !cache.product(y, z)) {
        report.skipped.push_back({y, z});
        continue;
      }
      if (!is_invertible(c, canonical_alpha(cache, y, z))) {
        report.conclusion = false;
        report.conclusion_witness = pair_label(c, y, z);
      }
    }
  }

  bool total = report.skipped.empty();
  report.add_hypothesis("witness coverage total", total,
                        total ? "" : std::to_string(report.skipped.size()) + " pairs skipped");
  if (!total)
    report.notes.push_back("coverage partial: " + std::to_string(report.skipped.size()) +
                           " of " + std::to_string(static_cast<long long>(n) * n) +
                           " pairs lack witnesses");
  if (!report.conclusion)
    report.notes.push_back("comparison not invertible at " + report.conclusion_witness);
  report.verdict = (total || !report.conclusion) ? Verdict::consistent : Verdict::not_applicable;
  return report;
}

Mor product_action(const FinCategory& c, const ProductWitness& from, const ProductWitness& to,
                   Mor f, Mor g) {
  return pair_into_product(c, to, c.compose(f, from.pr1), c.compose(g, from.pr2));
}

Mor coproduct_action(const FinCategory& c, const CoproductWitness& from,
                     const CoproductWitness& to, Mor f, Mor g) {
  return copair_from_coproduct(c, from, c.compose(to.in1, f), c.compose(to.in2, g));
}

namespace {

void require_total(const LimitCache& cache) {
  const FinCategory& c = *cache.category();
  if (!cache.products_total()) {
    auto [x, y] = cache.missing_products().front();
    throw LimitAbsent("no product " + pair_label(c, x, y));
  }
  if (!cache.coproducts_total()) {
    auto [x, y] = cache.missing_coproducts().front();
    throw LimitAbsent("no coproduct " + pair_label(c, x, y));
  }
}

}  // namespace

DeltaFunctors delta_functors(const LimitCache& cache) {
  require_total(cache);
  const CategoryRef& cref = cache.category();
  const FinCategory& c = *cref;
  const Obj n = c.object_count();
  const Mor m = c.morphism_count();

  DeltaFunctors result;
  result.cube = make_ref(product_category({cref, cref, cref}));
  const Obj odims[3] = {n, n, n};
  const Obj mdims[3] = {m, m, m};

  auto& lhs = result.lhs;
  auto& rhs = result.rhs;
  lhs.source = rhs.source = result.cube;
  lhs.target = rhs.target = cref;
  lhs.object_map.resize(result.cube->object_count());
  rhs.object_map.resize(result.cube->object_count());
  lhs.morphism_map.resize(result.cube->morphism_count());
  rhs.morphism_map.resize(result.cube->morphism_count());
  result.delta.resize(result.cube->object_count());

  for (Obj o = 0; o < result.cube->object_count(); ++o) {
    auto tup = tuple_decode(odims, o);
    Obj x = tup[0], y = tup[1], z = tup[2];
    const CoproductWitness& yz = cache.require_coproduct(y, z);
    const ProductWitness& xy = cache.require_product(x, y);
    const ProductWitness& xz = cache.require_product(x, z);
    lhs.object_map[o] = cache.require_coproduct(xy.apex, xz.apex).apex;
    rhs.object_map[o] = cache.require_product(x, yz.apex).apex;
    result.delta[o] = canonical_delta(cache, x, y, z);
  }

  for (Mor t = 0; t < result.cube->morphism_count(); ++t) {
    auto tup = tuple_decode(mdims, t);
    Mor f = tup[0], g = tup[1], h = tup[2];
    Obj x = c.src(f), x2 = c.dst(f);
    Obj y = c.src(g), y2 = c.dst(g);
    Obj z = c.src(h), z2 = c.dst(h);

    const ProductWitness& xy = cache.require_product(x, y);
    const ProductWitness& xz = cache.require_product(x, z);
    const ProductWitness& xy2 = cache.require_product(x2, y2);
    const ProductWitness& xz2 = cache.require_product(x2, z2);
    const CoproductWitness& sum = cache.require_coproduct(xy.apex, xz.apex);
    const CoproductWitness& sum2 = cache.require_coproduct(xy2.apex, xz2.apex);
    Mor fg = product_action(c, xy, xy2, f, g);
    Mor fh = product_action(c, xz, xz2, f, h);
    lhs.morphism_map[t] = coproduct_action(c, sum, sum2, fg, fh);

    const CoproductWitness& yz = cache.require_coproduct(y, z);
    const CoproductWitness& yz2 = cache.require_coproduct(y2, z2);
    const ProductWitness& x_yz = cache.require_product(x, yz.apex);
    const ProductWitness& x_yz2 = cache.require_product(x2, yz2.apex);
    Mor gh = coproduct_action(c, yz, yz2, g, h);
    rhs.morphism_map[t] = product_action(c, x_yz, x_yz2, f, gh);
  }
  return result;
}

PlusTimesFunctors plus_times_functors(const LimitCache& cache) {
  require_total(cache);
  const CategoryRef& cref = cache.category();
  const FinCategory& c = *cref;
  const Obj n = c.object_count();
  const Mor m = c.morphism_count();

  PlusTimesFunctors result;
  result.square = make_ref(product_category({cref, cref}));
  const Obj odims[2] = {n, n};
  const Obj mdims[2] = {m, m};

  result.plus.source = result.times.source = result.square;
  result.plus.target = result.times.target = cref;
  result.plus.object_map.resize(result.square->object_count());
  result.times.object_map.resize(result.square->object_count());
  result.plus.morphism_map.resize(result.square->morphism_count());
  result.times.morphism_map.resize(result.square->morphism_count());

  for (Obj o = 0; o < result.square->object_count(); ++o) {
    auto t = tuple_decode(odims, o);
    result.plus.object_map[o] = cache.require_coproduct(t[0], t[1]).apex;
    result.times.object_map[o] = cache.require_product(t[0], t[1]).apex;
  }
  for (Mor t = 0; t < result.square->morphism_count(); ++t) {
    auto tup = tuple_decode(mdims, t);
    Mor g = tup[0], h = tup[1];
    const CoproductWitness& from_sum = cache.require_coproduct(c.src(g), c.src(h));
    const CoproductWitness& to_sum = cache.require_coproduct(c.dst(g), c.dst(h));
    result.plus.morphism_map[t] = coproduct_action(c, from_sum, to_sum, g, h);
    const ProductWitness& from_prod = cache.require_product(c.src(g), c.src(h));
    const ProductWitness& to_prod = cache.require_product(c.dst(g), c.dst(h));
    result.times.morphism_map[t] = product_action(c, from_prod, to_prod, g, h);
  }

  if (cache.zero()) {
    result.alpha.resize(result.square->object_count());
    for (Obj o = 0; o < result.square->object_count(); ++o) {
      auto t = tuple_decode(odims, o);
      result.alpha[o] = canonical_alpha(cache, t[0], t[1]);
    }
  }
  return result;
}

}  // namespace fincat
