#include "fincat/generators.hpp"

#include <stdexcept>

namespace fincat {

namespace {

// leq is a flat row-major n*n relation, already reflexive and transitive.
FinCategory poset_category(int n, const std::vector<char>& leq,
                           const std::vector<std::string>& names) {
  CategoryBuilder b;
  for (int i = 0; i < n; ++i) b.add_object(names.empty() ? "" : names[i]);

  std::vector<Mor> arrow(static_cast<std::size_t>(n) * n, -1);
  auto at = [&](int x, int y) -> Mor& { return arrow[static_cast<std::size_t>(x) * n + y]; };
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (leq[static_cast<std::size_t>(s) * n + t]) at(s, t) = b.add_morphism(s, t);

  for (int i = 0; i < n; ++i) b.set_identity(i, at(i, i));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (at(x, y) < 0) continue;
      for (int z = 0; z < n; ++z)
        if (at(y, z) >= 0) b.set_composite(at(y, z), at(x, y), at(x, z));
    }
  return b.build();
}

std::vector<char> closure_from_covers(int n, const std::vector<std::array<Obj, 2>>& covers) {
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i) * n + i] = 1;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
      throw std::invalid_argument("cover pair out of range");
    leq[static_cast<std::size_t>(lo) * n + hi] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[static_cast<std::size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<std::size_t>(k) * n + j])
            leq[static_cast<std::size_t>(i) * n + j] = 1;
  return leq;
}

}  // namespace

FinCategory gen_chain(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("gen_chain: n must be in 1..16");
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = i; j < n; ++j) leq[static_cast<std::size_t>(i) * n + j] = 1;
  }
  return poset_category(n, leq, names);
}

FinCategory gen_boolean_algebra(int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("gen_boolean_algebra: k must be in 0..4");
  const int n = 1 << k;
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::string> names(n);
  for (int s = 0; s < n; ++s) {
    std::string name = "{";
    for (int e = 0; e < k; ++e)
      if (s & (1 << e)) {
        if (name.size() > 1) name += ",";
        name += std::to_string(e + 1);
      }
    names[s] = name + "}";
    for (int t = 0; t < n; ++t)
      if ((s & t) == s) leq[static_cast<std::size_t>(s) * n + t] = 1;
  }
  return poset_category(n, leq, names);
}

FinCategory gen_divisor_lattice(int n) {
  if (n < 1) throw std::invalid_argument("gen_divisor_lattice: n must be positive");
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);

  const int count = static_cast<int>(divisors.size());
  std::vector<char> leq(static_cast<std::size_t>(count) * count, 0);
  std::vector<std::string> names(count);
  for (int i = 0; i < count; ++i) {
    names[i] = std::to_string(divisors[i]);
    for (int j = 0; j < count; ++j)
      if (divisors[j] % divisors[i] == 0) leq[static_cast<std::size_t>(i) * count + j] = 1;
  }
  return poset_category(count, leq, names);
}

FinCategory gen_m3() {
  return gen_poset_from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                               {"bot", "a", "b", "c", "top"});
}

FinCategory gen_n5() {
  return gen_poset_from_covers(5, {{0, 1}, {1, 3}, {0, 2}, {3, 4}, {2, 4}},
                               {"bot", "x", "y", "z", "top"});
}

FinCategory gen_terminal() {
  CategoryBuilder b;
  Obj star = b.add_object("*");
  Mor id = b.add_morphism(star, star);
  b.set_identity(star, id);
  b.set_composite(id, id, id);
  return b.build();
}

FinCategory gen_bool_matrix(int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("gen_bool_matrix: n must be in 0..4");

  // Composable pairs through rank r number (sum_i 2^(i*r))^2; at n = 4 that
  // is nearly 5e9 packed table entries, beyond any sensible allocation.
  if (n == 4)
    throw StructuralError("gen_bool_matrix: rank bound 4 needs a composition table too large to materialize");

  CategoryBuilder b;
  for (int i = 0; i <= n; ++i) b.add_object(std::to_string(i));

  // mor_base[i][j] is the id of the all-zeros map i -> j; masks follow.
  std::vector<std::vector<Mor>> mor_base(n + 1, std::vector<Mor>(n + 1, -1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      mor_base[i][j] = b.add_morphism(i, j);
      const int bits = i * j;
      for (int mask = 1; mask < (1 << bits); ++mask) b.add_morphism(i, j);
    }

  for (int i = 0; i <= n; ++i) {
    int identity_mask = 0;
    for (int p = 0; p < i; ++p) identity_mask |= 1 << (p * i + p);
    b.set_identity(i, mor_base[i][i] + identity_mask);
  }

  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        // g: j -> k composed with f: i -> j by OR-AND product.
        for (int gm = 0; gm < (1 << (j * k)); ++gm)
          for (int fm = 0; fm < (1 << (i * j)); ++fm) {
            int hm = 0;
            for (int p = 0; p < k; ++p)
              for (int q = 0; q < i; ++q)
                for (int r = 0; r < j; ++r)
                  if ((gm >> (p * j + r) & 1) && (fm >> (r * i + q) & 1)) {
                    hm |= 1 << (p * i + q);
                    break;
                  }
            b.set_composite(mor_base[j][k] + gm, mor_base[i][j] + fm, mor_base[i][k] + hm);
          }
      }
  return b.build();
}

FinCategory gen_poset_from_covers(int count, const std::vector<std::array<Obj, 2>>& covers,
                                  const std::vector<std::string>& names) {
  if (count < 0) throw std::invalid_argument("gen_poset_from_covers: negative element count");
  if (!names.empty() && static_cast<int>(names.size()) != count)
    throw std::invalid_argument("gen_poset_from_covers: name list does not match element count");

  std::vector<char> leq = closure_from_covers(count, covers);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (leq[static_cast<std::size_t>(i) * count + j] &&
          leq[static_cast<std::size_t>(j) * count + i])
        throw StructuralError("gen_poset_from_covers: cover relation closes into a cycle, not a poset");
  return poset_category(count, leq, names);
}

std::string CorpusSpec::label() const {
  if (family == "m3" || family == "n5" || family == "terminal") return family;
  if (family == "poset") return "poset(" + std::to_string(count) + ")";
  return family + "(" + std::to_string(param) + ")";
}

FinCategory build_corpus_member(const CorpusSpec& spec) {
  if (spec.family == "chain") return gen_chain(spec.param);
  if (spec.family == "boolean") return gen_boolean_algebra(spec.param);
  if (spec.family == "divisor") return gen_divisor_lattice(spec.param);
  if (spec.family == "m3") return gen_m3();
  if (spec.family == "n5") return gen_n5();
  if (spec.family == "terminal") return gen_terminal();
  if (spec.family == "bool_matrix") return gen_bool_matrix(spec.param);
  if (spec.family == "poset") return gen_poset_from_covers(spec.count, spec.covers);
  throw std::invalid_argument("unknown corpus family: " + spec.family);
}

std::vector<CorpusSpec> default_corpus() {
  auto member = [](const char* family, int param) {
    CorpusSpec spec;
    spec.family = family;
    spec.param = param;
    return spec;
  };
  std::vector<CorpusSpec> corpus;
  for (int n = 1; n <= 3; ++n) corpus.push_back(member("chain", n));
  for (int k = 1; k <= 2; ++k) corpus.push_back(member("boolean", k));
  corpus.push_back(member("divisor", 12));
  corpus.push_back(member("m3", 0));
  corpus.push_back(member("n5", 0));
  corpus.push_back(member("terminal", 0));
  corpus.push_back(member("bool_matrix", 2));
  return corpus;
}

}  // namespace fincat
