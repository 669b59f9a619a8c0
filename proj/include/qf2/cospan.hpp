#pragma once

#include "qf2/span.hpp"

namespace qf2 {

inline constexpr int kDefaultApexBound = 10;

// Cospan [V -> X <- W] between non-degenerate spaces, apex included.
// Morphisms of the ambient category are represented by these; the theory's
// equivalence relation on them is only semi-decided (see equiv.hpp).
struct Cospan {
  QuadSpace dom;
  QuadSpace cod;
  QuadSpace apex;
  QuadMap left;   // dom -> apex
  QuadMap right;  // cod -> apex

  Cospan() = default;
  Cospan(QuadSpace d, QuadSpace c, QuadSpace x, QuadMap l, QuadMap r,
         bool validate = true);

  static Cospan id(const QuadSpace& s);
};

// W perp_V X for f : V -> W, g : V -> X (all non-degenerate): the sum
// V perp V' perp V'' of the shared part with the two orthogonal
// complements, together with the canonical embeddings of W and X. The two
// composites incl_w o f and incl_x o g agree by construction.
struct PseudoPushout {
  QuadSpace total;
  QuadMap incl_w;  // W -> total
  QuadMap incl_x;  // X -> total
};

PseudoPushout pseudo_pushout(const QuadMap& f, const QuadMap& g);

// [V -> X1 <- W] then [W -> X2 <- Y]: glue along W by pseudo push-out.
Cospan compose_cospans(const Cospan& t1, const Cospan& t2);

Cospan transpose_cospan(const Cospan& t);
Cospan cospan_orthogonal_sum(const Cospan& a, const Cospan& b);

// The linear map p_right o left : V -> W (projection along the orthogonal
// complement of the right leg). Invariant under the cospan equivalence.
BitMatrix epsilon(const Cospan& t);

// Fibre product of the two legs: the span {(v, w) : left v = right w}.
// Also invariant under the cospan equivalence.
SpanMorphism sigma(const Cospan& t);

}  // namespace qf2
