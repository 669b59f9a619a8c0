#pragma once

#include "qf2/algebra.hpp"

namespace qf2 {

// The three basic functors evaluated pointwise:
//  - linearization: F_2[Hom_Sp(v, x)], basis all spans v -> x;
//  - kernel: the subfunctor spanned by spans of relation rank < dim v;
//  - iso: the quotient of the two, with the full-rank spans as section basis.
enum class FunctorId { linearization, kernel, iso };

struct FunctorValue {
  FunctorId id = FunctorId::linearization;
  QuadSpace v;
  QuadSpace x;
  std::vector<SpanMorphism> basis;  // sorted by relation
};

FunctorValue eval_functor(FunctorId id, const QuadSpace& v, const QuadSpace& x,
                          Exec exec = Exec::parallel, int bound = kDefaultSpanBound);

// Index of s in val.basis, or -1 when absent (for iso that means s has
// dropped into the kernel and represents 0).
int basis_index(const FunctorValue& val, const SpanMorphism& s);

// Right-module action h -> h o z of an endo-span z of v, as a matrix in row
// convention (row i holds the coordinates of the image of basis i), so the
// matrix of a composite action is the product of the factors' matrices.
BitMatrix module_action(const FunctorValue& val, const SpanMorphism& z);
BitMatrix module_action(const FunctorValue& val, const AlgebraElement& a);

// Functorial action h -> f o h of a span f : x -> y, as a matrix from the
// basis at x (rows) to the basis at y (columns), same row convention.
BitMatrix functor_action(const FunctorValue& from, const FunctorValue& to,
                         const SpanMorphism& f);

// Rank of the action of the top idempotent of v on iso_w evaluated at v.
// Equals the isometry group order of v when w is isometric to v, and 0
// otherwise; the structure tests pin both.
int hom_iso_dim(const QuadSpace& v, const QuadSpace& w,
                Exec exec = Exec::parallel, int bound = kDefaultSpanBound);

// Gram matrix of the pairing <s, t> = [transpose(t) o s == id] on the span
// basis of the linearization at x. Its radical is exactly the kernel
// subfunctor, so its rank is dim iso_v(x).
BitMatrix duality_pairing_matrix(const QuadSpace& v, const QuadSpace& x,
                                 Exec exec = Exec::parallel,
                                 int bound = kDefaultSpanBound);

}  // namespace qf2
