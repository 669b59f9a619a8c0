#include "qf2/quadmap.hpp"

namespace qf2 {

bool is_quad_morphism(const QuadSpace& dom, const QuadSpace& cod, const BitMatrix& mat) {
  if (mat.rows != cod.dim || mat.cols != dom.dim) return false;
  if (rank(mat) != dom.dim) return false;
  auto cols = mat.columns();
  for (int i = 0; i < dom.dim; ++i) {
    if (cod.eval_q(cols[i]) != dom.diag.get(i)) return false;
    for (int j = i + 1; j < dom.dim; ++j)
      if (cod.eval_b(cols[i], cols[j]) != dom.gram.get(i, j)) return false;
  }
  return true;
}

QuadMap::QuadMap(QuadSpace d, QuadSpace c, BitMatrix m, bool validate)
    : dom(std::move(d)), cod(std::move(c)), mat(std::move(m)) {
  if (validate && !is_quad_morphism(dom, cod, mat))
    throw std::invalid_argument("not a morphism of quadratic spaces");
}

QuadMap compose(const QuadMap& g, const QuadMap& f) {
  if (f.cod != g.dom) throw std::invalid_argument("composition mismatch");
  return QuadMap(f.dom, g.cod, g.mat * f.mat, false);
}

QuadMap map_orthogonal_sum(const QuadMap& a, const QuadMap& b) {
  QuadSpace dom = orthogonal_sum(a.dom, b.dom);
  QuadSpace cod = orthogonal_sum(a.cod, b.cod);
  BitMatrix m(cod.dim, dom.dim);
  for (int i = 0; i < a.cod.dim; ++i) m.row[i] = a.mat.row[i];
  for (int i = 0; i < b.cod.dim; ++i) m.row[a.cod.dim + i] = b.mat.row[i] << a.dom.dim;
  return QuadMap(dom, cod, m, false);
}

InducedSubspace orthogonal_complement(const QuadMap& f) {
  if (!is_nondegenerate(f.dom) || !is_nondegenerate(f.cod))
    throw std::invalid_argument("orthogonal complement needs non-degenerate ends");
  // w is in the complement iff B(w, f(e_i)) = 0 for all i; row i of the
  // constraint matrix is gram_cod * f(e_i) read as a functional.
  BitMatrix constraints(f.dom.dim, f.cod.dim);
  auto cols = f.mat.columns();
  for (int i = 0; i < f.dom.dim; ++i)
    constraints.row[i] = (f.cod.gram * cols[i]).bits;
  InducedSubspace out;
  out.sub = kernel(constraints);
  out.space = induced_space(f.cod, out.sub.basis());
  return out;
}

BitMatrix orthogonal_projection(const QuadMap& f) {
  InducedSubspace comp = orthogonal_complement(f);
  // cod = f(dom) perp complement, so [f columns | complement basis] is an
  // invertible change of basis; the projection reads off the f-part.
  std::vector<BitVec> basis = f.mat.columns();
  for (const BitVec& c : comp.sub.basis()) basis.push_back(c);
  BitMatrix t = BitMatrix::from_cols(basis, f.cod.dim);
  auto tinv = inverse(t);
  if (!tinv) throw std::logic_error("image and complement do not span the codomain");
  return tinv->row_slice(0, f.dom.dim);
}

}  // namespace qf2
