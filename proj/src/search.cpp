#include "fincat/search.hpp"

#include <algorithm>
#include <numeric>

namespace fincat {

namespace {

struct Square {
  Mor f_image, g_image;  // F(m) and G(m) for the morphism m of the square
  Obj src_pos, dst_pos;  // positions of src(m), dst(m) in assignment order
};

}  // namespace

SearchResult search_natural_transformations(const FunctorData& f, const FunctorData& g,
                                            bool iso_only, std::uint64_t node_budget,
                                            std::size_t max_results) {
  // Shape and endpoint checks come along for free here.
  validate_functor(f);
  validate_functor(g);
  if (!(f.source == g.source ? true : *f.source == *g.source) ||
      !(f.target == g.target ? true : *f.target == *g.target))
    throw StructuralError("search requires functors with equal endpoints");

  const FinCategory& a = *f.source;
  const FinCategory& b = *f.target;
  const Obj n = a.object_count();

  SearchResult result;
  if (max_results == 0) return result;

  std::vector<std::vector<Mor>> candidates(n);
  for (Obj x = 0; x < n; ++x) {
    for (Mor m : b.hom(f.on_object(x), g.on_object(x)))
      if (!iso_only || is_invertible(b, m)) candidates[x].push_back(m);
  }

  std::vector<Obj> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Obj l, Obj r) {
    return candidates[l].size() != candidates[r].size()
               ? candidates[l].size() < candidates[r].size()
               : l < r;
  });
  std::vector<Obj> position(n);
  for (Obj i = 0; i < n; ++i) position[order[i]] = i;

  // For each assignment depth, the naturality squares that become fully
  // determined once that object receives its component.
  std::vector<std::vector<Square>> checks(n);
  for (Mor m = 0; m < a.morphism_count(); ++m) {
    Obj sp = position[a.src(m)], dp = position[a.dst(m)];
    checks[std::max(sp, dp)].push_back({f.on_morphism(m), g.on_morphism(m), sp, dp});
  }

  std::vector<Mor> assigned(n, -1);
  bool exhausted = false;

  auto emit = [&]() {
    NatTransformData t;
    t.source_functor = f;
    t.target_functor = g;
    t.components.resize(n);
    for (Obj x = 0; x < n; ++x) t.components[x] = assigned[position[x]];
    result.found.push_back(std::move(t));
  };

  // Depth-first over depths 0..n-1; depth == n emits a complete family.
  auto dfs = [&](auto&& self, Obj depth) -> bool {
    if (depth == n) {
      emit();
      return result.found.size() < max_results;
    }
    for (Mor m : candidates[order[depth]]) {
      if (result.nodes >= node_budget) {
        exhausted = true;
        return false;
      }
      ++result.nodes;
      assigned[depth] = m;
      bool fits = true;
      for (const Square& s : checks[depth]) {
        if (b.compose(s.g_image, assigned[s.src_pos]) !=
            b.compose(assigned[s.dst_pos], s.f_image)) {
          fits = false;
          break;
        }
      }
      if (fits && !self(self, depth + 1)) return false;
    }
    assigned[depth] = -1;
    return true;
  };
  dfs(dfs, 0);
  result.truncated = exhausted;
  return result;
}

std::optional<NatTransformData> exists_natural_iso(const FunctorData& f, const FunctorData& g,
                                                   std::uint64_t node_budget) {
  SearchResult r = search_natural_transformations(f, g, true, node_budget, 1);
  if (r.found.empty()) return std::nullopt;
  return std::move(r.found.front());
}

}  // namespace fincat
