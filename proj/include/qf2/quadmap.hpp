#pragma once

#include "qf2/quadspace.hpp"

namespace qf2 {

// Injective map of quadratic spaces: mat is cod.dim x dom.dim, columns are
// the images of the domain basis vectors, and the map preserves q (hence the
// polar form). Construction validates all of this.
struct QuadMap {
  QuadSpace dom;
  QuadSpace cod;
  BitMatrix mat;

  QuadMap() : mat(0, 0) {}
  QuadMap(QuadSpace d, QuadSpace c, BitMatrix m, bool validate = true);

  BitVec operator()(const BitVec& v) const { return mat * v; }
  static QuadMap id(const QuadSpace& s) {
    return QuadMap(s, s, BitMatrix::identity(s.dim), false);
  }
  friend bool operator==(const QuadMap&, const QuadMap&) = default;
};

// Validity check behind QuadMap: shape, injectivity, q on the basis and the
// polar form on basis pairs (enough, by polarization).
bool is_quad_morphism(const QuadSpace& dom, const QuadSpace& cod, const BitMatrix& mat);

QuadMap compose(const QuadMap& g, const QuadMap& f);  // g after f

// Block-diagonal sum acting between the orthogonal sums of the ends.
QuadMap map_orthogonal_sum(const QuadMap& a, const QuadMap& b);

struct InducedSubspace {
  Subspace sub;     // where it sits in the ambient space
  QuadSpace space;  // induced quadratic structure on sub's echelon basis
};

// Orthogonal complement of the image of f inside its codomain; both ends
// must be non-degenerate, which makes the complement a true direct summand.
InducedSubspace orthogonal_complement(const QuadMap& f);

// p : cod -> dom with p(f(v)) = v and p = 0 on the orthogonal complement.
BitMatrix orthogonal_projection(const QuadMap& f);

}  // namespace qf2
