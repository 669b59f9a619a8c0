#pragma once

#include "qf2/homsearch.hpp"

namespace qf2 {

inline constexpr int kDefaultSpanBound = 8;

// Morphism V -> W in the span category, stored as its canonical relation:
// an echelon subspace of V (+) W (V coordinates low, W coordinates high) on
// which both coordinate projections are injective and q_V(v) = q_W(w) holds
// for every member (v, w). The middle object of a span [V <- D -> W] is rel
// itself with the induced form; either side induces the same one.
struct SpanMorphism {
  QuadSpace dom;
  QuadSpace cod;
  Subspace rel;

  SpanMorphism() = default;
  SpanMorphism(QuadSpace d, QuadSpace c, Subspace r, bool validate = true);

  static SpanMorphism id(const QuadSpace& s);

  friend bool operator==(const SpanMorphism& a, const SpanMorphism& b) {
    return a.dom == b.dom && a.cod == b.cod && a.rel == b.rel;
  }
  // Order on the relation alone; used for canonical support sets of algebra
  // elements, which always share dom and cod.
  friend bool operator<(const SpanMorphism& a, const SpanMorphism& b) {
    return a.rel < b.rel;
  }
};

bool is_span_relation(const QuadSpace& dom, const QuadSpace& cod, const Subspace& rel);

// The span with legs f : D -> V and g : D -> W, as its canonical relation
// {(f(d), g(d))}. Depends only on the span's isomorphism class.
SpanMorphism canonicalize_span(const QuadMap& f, const QuadMap& g);

// Middle object and legs recovered from the relation.
struct SpanLegs {
  QuadSpace middle;
  QuadMap left;   // middle -> dom
  QuadMap right;  // middle -> cod
};
SpanLegs span_legs(const SpanMorphism& s);

// Relation composition; equals the span composition by fibre product.
SpanMorphism compose_spans(const SpanMorphism& s1, const SpanMorphism& s2);

// Diagonal idempotent of a subspace of V: relation {(a, a) : a in sub}.
SpanMorphism e_alpha(const QuadSpace& v, const Subspace& sub);

SpanMorphism transpose_span(const SpanMorphism& s);
SpanMorphism span_orthogonal_sum(const SpanMorphism& a, const SpanMorphism& b);

// Every span V -> W: all subspaces of V (+) W filtered by the relation
// invariants. Ordered by the subspace enumeration. The (A, h) bijection
// (image subspace of the left leg, morphism A -> W) is kept in the tests as
// an independent counting oracle, not used here.
std::vector<SpanMorphism> enumerate_span_homs(const QuadSpace& v, const QuadSpace& w,
                                              Exec exec = Exec::parallel,
                                              int bound = kDefaultSpanBound);

// All idempotent endo-spans of V. Equals { e_alpha } exactly; the structure
// tests assert that.
std::vector<SpanMorphism> enumerate_idempotents(const QuadSpace& v,
                                                Exec exec = Exec::parallel,
                                                int bound = kDefaultSpanBound);

}  // namespace qf2
