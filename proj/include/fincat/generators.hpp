#pragma once

#include <array>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

// Finite posets as categories: one morphism x -> y exactly when x <= y.
// Objects keep their element names; morphisms are enumerated by
// (source ascending, target ascending), so generator output is
// deterministic down to the index level.

// Linear order 0 < 1 < ... < n-1. Bounds: 1 <= n <= 16.
FinCategory gen_chain(int n);

// Subsets of {1..k} ordered by inclusion; object index = bitmask.
// Bounds: 0 <= k <= 4.
FinCategory gen_boolean_algebra(int k);

// Divisors of n ordered by divisibility, ascending. Bounds: n >= 1.
FinCategory gen_divisor_lattice(int n);

// The five-element diamond lattice: bot < a, b, c < top with a, b, c
// pairwise incomparable. The smallest non-distributive modular lattice.
FinCategory gen_m3();

// The five-element pentagon: bot < x < z < top and bot < y < top with y
// incomparable to both x and z. The smallest non-modular lattice.
FinCategory gen_n5();

// One object, one identity.
FinCategory gen_terminal();

// Objects 0..n; hom(i, j) = all j-by-i Boolean matrices, composed by the
// OR-AND matrix product. Entry (row p, col q) of a map i -> j sits at bit
// p*i + q of the encoding mask; morphisms are enumerated by (source
// ascending, target ascending, mask ascending). Object 0 is a zero object.
// Bounds: 0 <= n <= 4, but n = 4 exceeds what a materialized composition
// table can hold and is rejected with a size error.
FinCategory gen_bool_matrix(int n);

// Reflexive-transitive closure of a cover relation on `count` elements.
// Rejects relations whose closure is not antisymmetric.
FinCategory gen_poset_from_covers(int count, const std::vector<std::array<Obj, 2>>& covers,
                                  const std::vector<std::string>& names = {});

// A corpus member as data: which generator plus its parameters.
struct CorpusSpec {
  std::string family;  // chain | boolean | divisor | m3 | n5 | terminal | bool_matrix | poset
  int param = 0;       // chain length, Boolean exponent, divisor n, matrix bound
  int count = 0;       // poset element count
  std::vector<std::array<Obj, 2>> covers;  // poset cover pairs

  std::string label() const;
};

FinCategory build_corpus_member(const CorpusSpec& spec);

// chains 1-3, Boolean algebras k = 1, 2, the divisor lattice of 12, the two
// minimal non-distributive lattices, the terminal category, and Boolean
// matrices up to rank 2.
std::vector<CorpusSpec> default_corpus();

}  // namespace fincat
