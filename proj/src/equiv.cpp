#include "qf2/equiv.hpp"

#include <algorithm>

#include "qf2/homsearch.hpp"

namespace qf2 {
namespace {

// Joint image of both legs inside the apex.
Subspace leg_image(const Cospan& t) {
  std::vector<BitVec> cols = t.left.mat.columns();
  std::vector<BitVec> rcols = t.right.mat.columns();
  cols.insert(cols.end(), rcols.begin(), rcols.end());
  return Subspace::from_spanning(cols, t.apex.dim);
}

bool same_cospan(const Cospan& a, const Cospan& b) {
  return a.apex == b.apex && a.left.mat == b.left.mat && a.right.mat == b.right.mat;
}

// Coordinates of v in an independent family spanning a space that contains it.
BitVec coords_in(const std::vector<BitVec>& basis, const BitVec& v) {
  auto c = solve(BitMatrix::from_cols(basis, v.len), v);
  if (!c) throw std::logic_error("vector outside spanning family");
  return *c;
}

// Corestriction of t to the induced space on `basis` (which must contain both
// leg images). A single backward move: the inclusion maps the result to t.
Cospan corestrict(const Cospan& t, const std::vector<BitVec>& basis) {
  QuadSpace sub = induced_space(t.apex, basis);
  std::vector<BitVec> lcols, rcols;
  for (int j = 0; j < t.left.mat.cols; ++j)
    lcols.push_back(coords_in(basis, t.left.mat.col_vec(j)));
  for (int j = 0; j < t.right.mat.cols; ++j)
    rcols.push_back(coords_in(basis, t.right.mat.col_vec(j)));
  return Cospan(t.dom, t.cod, sub,
                QuadMap(t.dom, sub, BitMatrix::from_cols(lcols, sub.dim)),
                QuadMap(t.cod, sub, BitMatrix::from_cols(rcols, sub.dim)));
}

// Complement dimensions above this make the overspace sweep too wide; the
// search then simply explores fewer nodes (the verdict stays sound).
constexpr int kShrinkComplementCap = 6;

// All corestrictions of t to proper non-degenerate subspaces of the apex that
// contain both leg images.
std::vector<Cospan> shrink_moves(const Cospan& t) {
  std::vector<Cospan> out;
  Subspace u = leg_image(t);
  std::vector<BitVec> comp = complement_basis(u);
  int free_dim = int(comp.size());
  if (free_dim == 0 || free_dim > kShrinkComplementCap) return out;
  std::vector<BitVec> ubase = u.basis();
  for (const Subspace& q : enumerate_subspaces(free_dim, free_dim)) {
    if (q.dim() == free_dim) continue;  // the whole apex: not a proper move
    std::vector<BitVec> basis = ubase;
    for (const BitVec& mu : q.basis()) {
      BitVec lifted(0, t.apex.dim);
      for (int i = 0; i < free_dim; ++i)
        if (mu.get(i)) lifted = lifted + comp[i];
      basis.push_back(lifted);
    }
    if (!is_nondegenerate(induced_space(t.apex, basis))) continue;
    out.push_back(corestrict(t, basis));
  }
  return out;
}

}  // namespace

bool r_move_exists(const Cospan& t1, const Cospan& t2) {
  if (!(t1.dom == t2.dom) || !(t1.cod == t2.cod))
    throw std::invalid_argument("cospans with different ends");
  // alpha must satisfy alpha * [f1 | g1] = [f2 | g2] columnwise. Linear
  // relations among the source columns must hold among the targets, and on a
  // maximal independent set of source columns the images are forced.
  BitMatrix c1 = hconcat(t1.left.mat, t1.right.mat);
  BitMatrix c2 = hconcat(t2.left.mat, t2.right.mat);
  for (const BitVec& k : kernel(c1).basis())
    if ((c2 * k).bits != 0) return false;
  Subspace seen(t1.apex.dim);
  std::vector<BitVec> forced_dom, forced_img;
  for (int j = 0; j < c1.cols; ++j) {
    BitVec col = c1.col_vec(j);
    if (seen.contains(col)) continue;
    seen = sum(seen, Subspace::from_spanning({col}, t1.apex.dim));
    forced_dom.push_back(col);
    forced_img.push_back(c2.col_vec(j));
  }
  std::vector<BitVec> basis = forced_dom;
  for (const BitVec& e : complement_basis(seen)) basis.push_back(e);
  QuadSpace rebased = induced_space(t1.apex, basis);
  return extension_exists(rebased, t2.apex, forced_img);
}

EquivVerdict cospan_equiv(const Cospan& t1, const Cospan& t2, EquivBudget budget) {
  if (!(t1.dom == t2.dom) || !(t1.cod == t2.cod))
    throw std::invalid_argument("cospans with different ends");
  if (budget.max_apex < 0) budget.max_apex = t1.dom.dim + t1.cod.dim + 4;

  // Move-invariant functors separate inequivalent cospans for free.
  if (!(sigma(t1).rel == sigma(t2).rel)) return EquivVerdict::distinct;
  if (!(epsilon(t1) == epsilon(t2))) return EquivVerdict::distinct;

  if (t1.apex.dim > budget.max_apex || t2.apex.dim > budget.max_apex)
    return EquivVerdict::unknown;

  // Explore each side's backward closure (corestrictions compose, so the
  // frontier stabilizes quickly; layers is a safety cap). A chain
  // t1 <- a -> b -> t2 with a, b in the closures witnesses equivalence, as
  // does any direct move between closure members in either direction.
  std::vector<Cospan> side1{t1}, side2{t2};
  for (int round = 0; round < budget.layers; ++round) {
    bool grew = false;
    for (std::vector<Cospan>* side : {&side1, &side2}) {
      std::vector<Cospan> fresh;
      for (const Cospan& c : *side)
        for (Cospan& m : shrink_moves(c)) {
          bool known = false;
          for (const Cospan& k : *side)
            if (same_cospan(k, m)) { known = true; break; }
          for (const Cospan& k : fresh)
            if (same_cospan(k, m)) { known = true; break; }
          if (!known) fresh.push_back(std::move(m));
        }
      if (!fresh.empty()) grew = true;
      side->insert(side->end(), fresh.begin(), fresh.end());
    }
    if (!grew) break;
  }
  for (const Cospan& a : side1)
    for (const Cospan& b : side2)
      if (same_cospan(a, b) || r_move_exists(a, b) || r_move_exists(b, a))
        return EquivVerdict::equivalent;
  return EquivVerdict::unknown;
}

}  // namespace qf2
