#pragma once

#include "qf2/span.hpp"

namespace qf2 {

// Element of the endo-span algebra F_2[End(V)]: a formal sum of endo-spans
// of one space, stored as its sorted duplicate-free support.
struct AlgebraElement {
  QuadSpace space;
  std::vector<SpanMorphism> support;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.space == b.space && a.support == b.support;
  }
};

AlgebraElement alg_zero(const QuadSpace& v);
AlgebraElement alg_one(const QuadSpace& v);
AlgebraElement alg_from(const QuadSpace& v, std::vector<SpanMorphism> terms);
AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b);

// Function-composition order: each product term acts as (term of a) after
// (term of b). The diagonal idempotents all commute, so the product order
// never matters for the elements built below.
AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b);

// The single-term element e_A, the diagonal span of a subspace of V.
AlgebraElement diagonal_idempotent(const QuadSpace& v, const Subspace& sub);

// E_V = product of (1 + e_A) over all proper subspaces A of V. Multiplying
// by any e_A with A proper gives 0, since that factor absorbs it.
AlgebraElement top_idempotent(const QuadSpace& v, int bound = kDefaultSpanBound);

// E_alpha for the subspace inclusion alpha : A -> V, namely
// e_A * product of (1 + e_B) over proper subspaces B of A. Over all
// subspaces A of V these form a complete orthogonal family of idempotents
// summing to 1; A = V recovers top_idempotent.
AlgebraElement orthogonal_idempotent(const QuadSpace& v, const Subspace& sub,
                                     int bound = kDefaultSpanBound);

}  // namespace qf2
