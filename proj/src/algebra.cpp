#include "qf2/algebra.hpp"

#include <algorithm>

namespace qf2 {
namespace {

// Sort and cancel duplicate terms mod 2.
std::vector<SpanMorphism> normalize(std::vector<SpanMorphism> terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<SpanMorphism> out;
  std::size_t i = 0;
  while (i < terms.size()) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  return out;
}

void check_space(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.space == b.space)) throw std::invalid_argument("algebra space mismatch");
}

}  // namespace

AlgebraElement alg_zero(const QuadSpace& v) { return {v, {}}; }

AlgebraElement alg_one(const QuadSpace& v) { return {v, {SpanMorphism::id(v)}}; }

AlgebraElement alg_from(const QuadSpace& v, std::vector<SpanMorphism> terms) {
  for (const SpanMorphism& s : terms)
    if (!(s.dom == v) || !(s.cod == v))
      throw std::invalid_argument("term is not an endo-span of the space");
  return {v, normalize(std::move(terms))};
}

AlgebraElement alg_add(const AlgebraElement& a, const AlgebraElement& b) {
  check_space(a, b);
  std::vector<SpanMorphism> terms = a.support;
  terms.insert(terms.end(), b.support.begin(), b.support.end());
  return {a.space, normalize(std::move(terms))};
}

AlgebraElement alg_mul(const AlgebraElement& a, const AlgebraElement& b) {
  check_space(a, b);
  std::vector<SpanMorphism> terms;
  terms.reserve(a.support.size() * b.support.size());
  for (const SpanMorphism& s : a.support)
    for (const SpanMorphism& t : b.support)
      terms.push_back(compose_spans(t, s));  // s after t
  return {a.space, normalize(std::move(terms))};
}

AlgebraElement diagonal_idempotent(const QuadSpace& v, const Subspace& sub) {
  return {v, {e_alpha(v, sub)}};
}

AlgebraElement top_idempotent(const QuadSpace& v, int bound) {
  AlgebraElement acc = alg_one(v);
  for (const Subspace& a : enumerate_subspaces(v.dim, bound)) {
    if (a.dim() == v.dim) continue;
    acc = alg_mul(acc, alg_add(alg_one(v), diagonal_idempotent(v, a)));
  }
  return acc;
}

AlgebraElement orthogonal_idempotent(const QuadSpace& v, const Subspace& sub,
                                     int bound) {
  if (sub.ambient != v.dim) throw std::invalid_argument("subspace ambient mismatch");
  AlgebraElement acc = diagonal_idempotent(v, sub);
  for (const Subspace& b : enumerate_subspaces(v.dim, bound)) {
    if (!(sub.contains(b)) || b == sub) continue;
    acc = alg_mul(acc, alg_add(alg_one(v), diagonal_idempotent(v, b)));
  }
  return acc;
}

}  // namespace qf2
