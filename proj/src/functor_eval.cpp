#include "qf2/functor_eval.hpp"

#include <algorithm>

namespace qf2 {

FunctorValue eval_functor(FunctorId id, const QuadSpace& v, const QuadSpace& x,
                          Exec exec, int bound) {
  FunctorValue val{id, v, x, {}};
  for (SpanMorphism& s : enumerate_span_homs(v, x, exec, bound)) {
    bool full = s.rel.dim() == v.dim;
    if (id == FunctorId::kernel ? full : (id == FunctorId::iso && !full)) continue;
    val.basis.push_back(std::move(s));
  }
  return val;
}

int basis_index(const FunctorValue& val, const SpanMorphism& s) {
  auto it = std::lower_bound(val.basis.begin(), val.basis.end(), s);
  if (it == val.basis.end() || !(*it == s)) return -1;
  return int(it - val.basis.begin());
}

namespace {

// Shared core: row i is the composite of basis i with `post` (on the right
// for module actions, on the left for functor actions).
BitMatrix action_matrix(const FunctorValue& from, const FunctorValue& to,
                        const SpanMorphism& f, bool precompose) {
  int n = int(from.basis.size());
  BitMatrix m(n, int(to.basis.size()));
  for (int i = 0; i < n; ++i) {
    SpanMorphism c = precompose ? compose_spans(f, from.basis[i])
                                : compose_spans(from.basis[i], f);
    int j = basis_index(to, c);
    if (j < 0) {
      if (to.id != FunctorId::iso)
        throw std::logic_error("composite escaped the basis");
      continue;  // dropped relation rank: zero in the quotient
    }
    m.set(i, j, true);
  }
  return m;
}

}  // namespace

BitMatrix module_action(const FunctorValue& val, const SpanMorphism& z) {
  if (!(z.dom == val.v) || !(z.cod == val.v))
    throw std::invalid_argument("module action needs an endo-span of v");
  return action_matrix(val, val, z, /*precompose=*/true);
}

BitMatrix module_action(const FunctorValue& val, const AlgebraElement& a) {
  if (!(a.space == val.v))
    throw std::invalid_argument("algebra element over the wrong space");
  int n = int(val.basis.size());
  BitMatrix acc(n, n);
  for (const SpanMorphism& z : a.support) acc = acc + module_action(val, z);
  return acc;
}

BitMatrix functor_action(const FunctorValue& from, const FunctorValue& to,
                         const SpanMorphism& f) {
  if (from.id != to.id || !(from.v == to.v))
    throw std::invalid_argument("functor action between different functors");
  if (!(f.dom == from.x) || !(f.cod == to.x))
    throw std::invalid_argument("span does not match the arguments");
  return action_matrix(from, to, f, /*precompose=*/false);
}

int hom_iso_dim(const QuadSpace& v, const QuadSpace& w, Exec exec, int bound) {
  FunctorValue val = eval_functor(FunctorId::iso, w, v, exec, bound);
  int n = int(val.basis.size());
  BitMatrix acc(n, n);
  for (const SpanMorphism& z : top_idempotent(v, bound).support)
    acc = acc + functor_action(val, val, z);
  return rank(acc);
}

BitMatrix duality_pairing_matrix(const QuadSpace& v, const QuadSpace& x,
                                 Exec exec, int bound) {
  FunctorValue val = eval_functor(FunctorId::linearization, v, x, exec, bound);
  SpanMorphism one = SpanMorphism::id(v);
  int n = int(val.basis.size());
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SpanMorphism c = compose_spans(val.basis[i], transpose_span(val.basis[j]));
      m.set(i, j, c == one);
    }
  return m;
}

}  // namespace qf2
