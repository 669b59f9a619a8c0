#pragma once

#include "qf2/cospan.hpp"

namespace qf2 {

enum class EquivVerdict { equivalent, distinct, unknown };

// Search budget. max_apex < 0 means dom.dim + cod.dim + 4; layers bounds the
// rounds of backward (apex-shrinking) moves explored on each side.
struct EquivBudget {
  int max_apex = -1;
  int layers = 3;
};

// Is there a single move from t1 to t2: a morphism of the apexes commuting
// with both legs? Decided exactly by constraint propagation (the legs force
// the map on their joint image) plus backtracking extension.
bool r_move_exists(const Cospan& t1, const Cospan& t2);

// Sound bounded semi-decision of the cospan equivalence generated by apex
// moves. `distinct` comes from the move-invariant functors (sigma and
// epsilon images); `equivalent` from an explicit chain found within the
// budget; `unknown` otherwise. Never lies.
EquivVerdict cospan_equiv(const Cospan& t1, const Cospan& t2, EquivBudget budget = {});

}  // namespace qf2
