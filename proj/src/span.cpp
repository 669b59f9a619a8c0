#include "qf2/span.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qf2 {

bool is_span_relation(const QuadSpace& dom, const QuadSpace& cod, const Subspace& rel) {
  if (rel.ambient != dom.dim + cod.dim) return false;
  auto basis = rel.basis();
  int k = rel.dim();
  std::vector<BitVec> vs, ws;
  for (const BitVec& r : basis) {
    vs.push_back(r.slice(0, dom.dim));
    ws.push_back(r.slice(dom.dim, cod.dim));
  }
  if (int(Subspace::from_spanning(vs, dom.dim).dim()) != k) return false;
  if (int(Subspace::from_spanning(ws, cod.dim).dim()) != k) return false;
  // q-compatibility on every member: basis values plus polarized pairs.
  for (int i = 0; i < k; ++i) {
    if (dom.eval_q(vs[i]) != cod.eval_q(ws[i])) return false;
    for (int j = i + 1; j < k; ++j)
      if (dom.eval_b(vs[i], vs[j]) != cod.eval_b(ws[i], ws[j])) return false;
  }
  return true;
}

SpanMorphism::SpanMorphism(QuadSpace d, QuadSpace c, Subspace r, bool validate)
    : dom(std::move(d)), cod(std::move(c)), rel(std::move(r)) {
  if (validate && !is_span_relation(dom, cod, rel))
    throw std::invalid_argument("not a span relation");
}

SpanMorphism SpanMorphism::id(const QuadSpace& s) {
  return e_alpha(s, Subspace::full(s.dim));
}

SpanMorphism canonicalize_span(const QuadMap& f, const QuadMap& g) {
  if (f.dom != g.dom) throw std::invalid_argument("span legs must share their domain");
  std::vector<BitVec> rows;
  for (int i = 0; i < f.dom.dim; ++i) {
    BitVec e(std::uint64_t(1) << i, f.dom.dim);
    rows.push_back(concat(f(e), g(e)));
  }
  return SpanMorphism(f.cod, g.cod,
                      Subspace::from_spanning(rows, f.cod.dim + g.cod.dim));
}

SpanLegs span_legs(const SpanMorphism& s) {
  SpanLegs out;
  auto basis = s.rel.basis();
  std::vector<BitVec> vs, ws;
  for (const BitVec& r : basis) {
    vs.push_back(r.slice(0, s.dom.dim));
    ws.push_back(r.slice(s.dom.dim, s.cod.dim));
  }
  // Induced form through the dom side; the relation invariant makes the cod
  // side induce the same space.
  out.middle = induced_space(s.dom, vs);
  out.left = QuadMap(out.middle, s.dom, BitMatrix::from_cols(vs, s.dom.dim), false);
  out.right = QuadMap(out.middle, s.cod, BitMatrix::from_cols(ws, s.cod.dim), false);
  return out;
}

SpanMorphism compose_spans(const SpanMorphism& s1, const SpanMorphism& s2) {
  if (s1.cod != s2.dom) throw std::invalid_argument("composition mismatch");
  int v = s1.dom.dim, w = s1.cod.dim, y = s2.cod.dim;
  check_dim(v + w + y);
  // Triples (x, m, z) with (x, m) in rel1 and (m, z) in rel2, then the
  // middle dropped. Projection to (x, z) is injective on the triple space,
  // so the composite inherits the relation invariants.
  std::vector<BitVec> a_rows;
  for (const BitVec& r : s1.rel.basis()) a_rows.push_back(concat(r, BitVec(0, y)));
  for (int j = 0; j < y; ++j)
    a_rows.emplace_back(std::uint64_t(1) << (v + w + j), v + w + y);
  std::vector<BitVec> b_rows;
  for (int j = 0; j < v; ++j) b_rows.emplace_back(std::uint64_t(1) << j, v + w + y);
  for (const BitVec& r : s2.rel.basis()) b_rows.push_back(concat(BitVec(0, v), r));
  Subspace tri = intersect(Subspace::from_spanning(a_rows, v + w + y),
                           Subspace::from_spanning(b_rows, v + w + y));
  std::vector<BitVec> proj;
  for (const BitVec& t : tri.basis())
    proj.push_back(concat(t.slice(0, v), t.slice(v + w, y)));
  return SpanMorphism(s1.dom, s2.cod, Subspace::from_spanning(proj, v + y), false);
}

SpanMorphism e_alpha(const QuadSpace& v, const Subspace& sub) {
  if (sub.ambient != v.dim) throw std::invalid_argument("subspace ambient mismatch");
  std::vector<BitVec> rows;
  for (const BitVec& a : sub.basis()) rows.push_back(concat(a, a));
  return SpanMorphism(v, v, Subspace::from_spanning(rows, 2 * v.dim), false);
}

SpanMorphism transpose_span(const SpanMorphism& s) {
  std::vector<BitVec> rows;
  for (const BitVec& r : s.rel.basis())
    rows.push_back(concat(r.slice(s.dom.dim, s.cod.dim), r.slice(0, s.dom.dim)));
  return SpanMorphism(s.cod, s.dom,
                      Subspace::from_spanning(rows, s.cod.dim + s.dom.dim), false);
}

SpanMorphism span_orthogonal_sum(const SpanMorphism& a, const SpanMorphism& b) {
  QuadSpace dom = orthogonal_sum(a.dom, b.dom);
  QuadSpace cod = orthogonal_sum(a.cod, b.cod);
  std::vector<BitVec> rows;
  for (const BitVec& r : a.rel.basis())
    rows.push_back(concat(concat(r.slice(0, a.dom.dim), BitVec(0, b.dom.dim)),
                          concat(r.slice(a.dom.dim, a.cod.dim), BitVec(0, b.cod.dim))));
  for (const BitVec& r : b.rel.basis())
    rows.push_back(concat(concat(BitVec(0, a.dom.dim), r.slice(0, b.dom.dim)),
                          concat(BitVec(0, a.cod.dim), r.slice(b.dom.dim, b.cod.dim))));
  return SpanMorphism(dom, cod, Subspace::from_spanning(rows, dom.dim + cod.dim), false);
}

std::vector<SpanMorphism> enumerate_span_homs(const QuadSpace& v, const QuadSpace& w,
                                              Exec exec, int bound) {
  if (v.dim + w.dim > bound) throw BoundError("span enumeration bound exceeded");
  std::vector<Subspace> all = enumerate_subspaces(v.dim + w.dim, bound);
  std::vector<SpanMorphism> out;
  if (exec == Exec::serial) {
    for (const Subspace& r : all)
      if (is_span_relation(v, w, r)) out.emplace_back(v, w, r, false);
    return out;
  }
  std::vector<char> keep(all.size(), 0);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < std::int64_t(all.size()); ++i)
    keep[i] = is_span_relation(v, w, all[i]) ? 1 : 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.emplace_back(v, w, all[i], false);
  return out;
}

std::vector<SpanMorphism> enumerate_idempotents(const QuadSpace& v, Exec exec, int bound) {
  std::vector<SpanMorphism> out;
  for (const SpanMorphism& s : enumerate_span_homs(v, v, exec, bound))
    if (compose_spans(s, s) == s) out.push_back(s);
  return out;
}

}  // namespace qf2
