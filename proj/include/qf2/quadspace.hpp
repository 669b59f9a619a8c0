#pragma once

#include "qf2/subspace.hpp"

namespace qf2 {

// Quadratic space over F_2: q(v) = sum_i v_i diag_i + sum_{i<j} v_i v_j gram_ij.
// gram is the polar form's matrix: symmetric, zero diagonal (the polar form of
// a quadratic form in characteristic 2 is alternating), gram_ij = B(e_i, e_j).
struct QuadSpace {
  int dim = 0;
  BitMatrix gram;
  BitVec diag;

  QuadSpace() : gram(0, 0), diag(0, 0) {}
  QuadSpace(BitMatrix g, BitVec d);

  bool eval_q(const BitVec& v) const;
  bool eval_b(const BitVec& u, const BitVec& v) const;

  friend bool operator==(const QuadSpace&, const QuadSpace&) = default;
};

// Isometry-class invariant. Fields are normalized so that plain equality is
// class equality: rad_type is 0 when rad_dim == 0, and nondeg_class is 0
// whenever a q=1 radical makes the non-degenerate part's class non-unique.
struct IsoClass {
  int dim = 0;
  int rad_dim = 0;
  int rad_type = 0;      // 0: q vanishes on the radical; 1: q is 1 somewhere on it
  int nondeg_class = 0;  // Arf invariant of the non-degenerate part

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
  std::string str() const;  // canonical block descriptor, e.g. "H1+H0+x1"
};

// Basis data for V = (non-degenerate part) perp (radical), all vectors in
// V's coordinates. nondeg is a symplectic basis flattened as a1,b1,a2,b2,...
// When rad_type = 1 every radical basis vector has q = 1 and the
// non-degenerate part is normalized to Arf 0.
struct Decomposition {
  std::vector<BitVec> nondeg;
  std::vector<BitVec> rad;
  int rad_type = 0;
};

QuadSpace standard_h0();
QuadSpace standard_h1();
QuadSpace standard_point(bool q_value);  // one-dimensional space (x, q_value)

QuadSpace orthogonal_sum(const QuadSpace& a, const QuadSpace& b);

Subspace radical(const QuadSpace& s);
bool is_nondegenerate(const QuadSpace& s);

// Quadratic structure induced on an ordered independent family of vectors.
QuadSpace induced_space(const QuadSpace& s, const std::vector<BitVec>& basis);

// Symplectic basis (a1,b1,...,am,bm) with B(ai,bi)=1 and all other pairings 0.
// Throws on degenerate input (odd dimension is always degenerate).
std::vector<std::pair<BitVec, BitVec>> symplectic_basis(const QuadSpace& s);

// Arf invariant sum q(ai) q(bi); input must be non-degenerate.
bool arf(const QuadSpace& s);

Decomposition decompose(const QuadSpace& s);
IsoClass iso_class(const QuadSpace& s);
bool is_isometric(const QuadSpace& a, const QuadSpace& b);

// Standard model of a class: H1 (if Arf 1) then H0 blocks, then radical
// points. Throws on inconsistent field combinations.
QuadSpace from_class(const IsoClass& c);

}  // namespace qf2
