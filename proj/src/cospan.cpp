#include "qf2/cospan.hpp"

namespace qf2 {

Cospan::Cospan(QuadSpace d, QuadSpace c, QuadSpace x, QuadMap l, QuadMap r, bool validate)
    : dom(std::move(d)), cod(std::move(c)), apex(std::move(x)), left(std::move(l)),
      right(std::move(r)) {
  if (validate) {
    if (!is_nondegenerate(dom) || !is_nondegenerate(cod) || !is_nondegenerate(apex))
      throw std::invalid_argument("cospan objects must be non-degenerate");
    if (left.dom != dom || left.cod != apex || right.dom != cod || right.cod != apex)
      throw std::invalid_argument("cospan legs do not match the objects");
    if (!is_quad_morphism(dom, apex, left.mat) || !is_quad_morphism(cod, apex, right.mat))
      throw std::invalid_argument("cospan legs are not morphisms");
  }
}

Cospan Cospan::id(const QuadSpace& s) {
  return Cospan(s, s, s, QuadMap::id(s), QuadMap::id(s), false);
}

PseudoPushout pseudo_pushout(const QuadMap& f, const QuadMap& g) {
  if (f.dom != g.dom) throw std::invalid_argument("pseudo push-out needs a shared domain");
  if (!is_nondegenerate(f.dom))
    throw std::invalid_argument("pseudo push-out needs non-degenerate spaces");
  InducedSubspace fperp = orthogonal_complement(f);  // V' inside W
  InducedSubspace gperp = orthogonal_complement(g);  // V'' inside X
  const QuadSpace& v = f.dom;
  QuadSpace total = orthogonal_sum(orthogonal_sum(v, fperp.space), gperp.space);

  // W = f(V) perp V', so [f columns | V' basis] is a change of basis of W;
  // its inverse reads a vector's (V, V') coordinates, which embed into the
  // first two blocks of the total.
  auto embed = [&](const QuadMap& leg, const InducedSubspace& perp, int block_off) {
    std::vector<BitVec> cols = leg.mat.columns();
    for (const BitVec& c : perp.sub.basis()) cols.push_back(c);
    BitMatrix t = BitMatrix::from_cols(cols, leg.cod.dim);
    auto tinv = inverse(t);
    if (!tinv) throw std::logic_error("image and complement do not span");
    BitMatrix m(total.dim, leg.cod.dim);
    for (int i = 0; i < v.dim; ++i) m.row[i] = tinv->row[i];
    for (int i = 0; i < perp.sub.dim(); ++i)
      m.row[block_off + i] = tinv->row[v.dim + i];
    return QuadMap(leg.cod, total, m, false);
  };
  PseudoPushout out;
  out.incl_w = embed(f, fperp, v.dim);
  out.incl_x = embed(g, gperp, v.dim + fperp.sub.dim());
  out.total = std::move(total);
  return out;
}

Cospan compose_cospans(const Cospan& t1, const Cospan& t2) {
  if (t1.cod != t2.dom) throw std::invalid_argument("composition mismatch");
  PseudoPushout pp = pseudo_pushout(t1.right, t2.left);
  return Cospan(t1.dom, t2.cod, pp.total, compose(pp.incl_w, t1.left),
                compose(pp.incl_x, t2.right), false);
}

Cospan transpose_cospan(const Cospan& t) {
  return Cospan(t.cod, t.dom, t.apex, t.right, t.left, false);
}

Cospan cospan_orthogonal_sum(const Cospan& a, const Cospan& b) {
  return Cospan(orthogonal_sum(a.dom, b.dom), orthogonal_sum(a.cod, b.cod),
                orthogonal_sum(a.apex, b.apex), map_orthogonal_sum(a.left, b.left),
                map_orthogonal_sum(a.right, b.right), false);
}

BitMatrix epsilon(const Cospan& t) {
  return orthogonal_projection(t.right) * t.left.mat;
}

SpanMorphism sigma(const Cospan& t) {
  // left v = right w, in characteristic 2: (v, w) in the kernel of [l | r].
  Subspace rel = kernel(hconcat(t.left.mat, t.right.mat));
  return SpanMorphism(t.dom, t.cod, rel, false);
}

}  // namespace qf2
