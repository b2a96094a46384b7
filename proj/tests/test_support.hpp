#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fincat/category.hpp"

namespace testsupport {

using fincat::CategoryBuilder;
using fincat::FinCategory;
using fincat::Mor;
using fincat::Obj;

// Copy of c with one composition-table entry replaced. The pair (g, f) must
// be composable; gf may be any morphism, including one with wrong endpoints.
inline FinCategory rebuild_with_composite(const FinCategory& c, Mor g, Mor f, Mor gf) {
  CategoryBuilder b;
  for (Obj x = 0; x < c.object_count(); ++x) b.add_object(c.object_name(x));
  for (Mor m = 0; m < c.morphism_count(); ++m)
    b.add_morphism(c.src(m), c.dst(m), c.morphism_name(m));
  for (Obj x = 0; x < c.object_count(); ++x) b.set_identity(x, c.identity(x));
  for (Mor h = 0; h < c.morphism_count(); ++h)
    for (Mor k : c.into(c.src(h)))
      b.set_composite(h, k, (h == g && k == f) ? gf : c.compose(h, k));
  return b.build();
}

// Independent check of every category law by direct scans; deliberately
// shares no code with validate_category.
inline bool laws_hold_brute_force(const FinCategory& c) {
  const Mor m = c.morphism_count();
  auto lookup = [&](Mor g, Mor f) -> std::optional<Mor> {
    if (c.dst(f) != c.src(g)) return std::nullopt;
    return c.composite_entry(g, f);
  };

  for (Mor g = 0; g < m; ++g)
    for (Mor f = 0; f < m; ++f) {
      if (c.dst(f) != c.src(g)) continue;
      auto gf = lookup(g, f);
      if (!gf) return false;
      if (c.src(*gf) != c.src(f) || c.dst(*gf) != c.dst(g)) return false;
    }

  for (Mor f = 0; f < m; ++f) {
    if (lookup(f, c.identity(c.src(f))) != f) return false;
    if (lookup(c.identity(c.dst(f)), f) != f) return false;
  }

  for (Mor h = 0; h < m; ++h)
    for (Mor g = 0; g < m; ++g) {
      if (c.dst(g) != c.src(h)) continue;
      for (Mor f = 0; f < m; ++f) {
        if (c.dst(f) != c.src(g)) continue;
        if (lookup(h, *lookup(g, f)) != lookup(*lookup(h, g), f)) return false;
      }
    }
  return true;
}

// The cyclic group of the given order as a one-object category; morphism i
// is the i-th power of the generator.
inline FinCategory cyclic_monoid(int order) {
  CategoryBuilder b;
  Obj star = b.add_object();
  std::vector<Mor> power(order);
  for (int i = 0; i < order; ++i) power[i] = b.add_morphism(star, star);
  b.set_identity(star, power[0]);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) b.set_composite(power[i], power[j], power[(i + j) % order]);
  return b.build();
}

// One object, morphisms {id, e} with e∘e = e.
inline FinCategory idempotent_monoid() {
  CategoryBuilder b;
  Obj star = b.add_object();
  Mor id = b.add_morphism(star, star);
  Mor e = b.add_morphism(star, star);
  b.set_identity(star, id);
  b.set_composite(id, id, id);
  b.set_composite(id, e, e);
  b.set_composite(e, id, e);
  b.set_composite(e, e, e);
  return b.build();
}

// Pair count of the reflexive-transitive closure of a cover relation,
// computed by per-element depth-first reachability.
inline int order_pair_count(int n, const std::vector<std::array<Obj, 2>>& covers) {
  std::vector<std::vector<int>> up(n);
  for (auto [lo, hi] : covers) up[lo].push_back(hi);
  int pairs = 0;
  for (int start = 0; start < n; ++start) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++pairs;
      for (int y : up[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return pairs;
}

}  // namespace testsupport
