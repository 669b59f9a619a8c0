#pragma once

#include "qf2/cospan.hpp"

namespace qf2 {

// Constructive section of epsilon: a cospan T with epsilon(T) == f exactly,
// for an arbitrary linear f : v -> w between non-degenerate spaces. The apex
// grows by a fixed hyperbolic pattern per symplectic pair of v and is not
// minimized; pass shrink = true to corestrict the apex afterwards (the
// result stays equivalent, epsilon and sigma images unchanged).
Cospan epsilon_lift(const BitMatrix& f, const QuadSpace& v, const QuadSpace& w,
                    bool shrink = false);

// Greedy corestriction of the apex to a non-degenerate subspace containing
// both leg images. A single backward move of the cospan equivalence.
Cospan shrink_apex(const Cospan& t);

// Data splitting the codomain of f : D -> H along the image of a totally
// degenerate D (zero polar form): partners[i] pairs with f(x_i) into a
// hyperbolic-like plane, the planes are pairwise orthogonal, and
// residual_basis spans their joint orthogonal complement, which is
// non-degenerate. All vectors in H coordinates.
struct DegenerateImageSplit {
  std::vector<BitVec> partners;
  std::vector<BitVec> residual_basis;
};
DegenerateImageSplit degenerate_image_split(const QuadMap& f);

// Constructive section of sigma: a cospan T with sigma(T) == s exactly.
// Reduces s to a normal form (shared non-degenerate part, disjoint part,
// one rank-one table case per radical line) and assembles the matching
// cospan sum, conjugated back along the chosen isometries.
Cospan sigma_lift(const SpanMorphism& s);

}  // namespace qf2
