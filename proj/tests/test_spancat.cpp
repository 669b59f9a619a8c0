#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "qf2/span.hpp"

using namespace qf2;

namespace {

SpanMorphism pick(const std::vector<SpanMorphism>& xs, std::mt19937_64& rng) {
  return xs[rng() % xs.size()];
}

}  // namespace

TEST_CASE("relation invariants are enforced") {
  QuadSpace h0 = standard_h0(), h1 = standard_h1();
  // projection to the domain not injective: (0, w) with w nonzero
  Subspace bad1 = Subspace::from_spanning({BitVec(0b0100, 4)}, 4);
  CHECK_FALSE(is_span_relation(h0, h0, bad1));
  CHECK_THROWS_AS(SpanMorphism(h0, h0, bad1), std::invalid_argument);
  // q mismatch across the pair: (a in H0, a in H1)
  Subspace bad2 = Subspace::from_spanning({BitVec(0b0101, 4)}, 4);
  CHECK(is_span_relation(h0, h0, bad2));
  CHECK_FALSE(is_span_relation(h1, h0, bad2));  // q = 1 left, q = 0 right
  // ambient must be dom + cod
  CHECK_FALSE(is_span_relation(h0, h0, Subspace::full(3)));
  CHECK(is_span_relation(h0, h0, SpanMorphism::id(h0).rel));
}

TEST_CASE("canonicalization round-trips through the legs") {
  std::mt19937_64 rng(61);
  QuadSpace h0 = standard_h0(), h1 = standard_h1();
  QuadSpace big = orthogonal_sum(h1, h0);
  std::vector<std::pair<QuadSpace, std::pair<QuadSpace, QuadSpace>>> shapes = {
      {h0, {big, big}}, {h1, {big, orthogonal_sum(h0, h0)}},
      {standard_point(true), {h1, big}}, {QuadSpace(), {h0, h1}}};
  for (const auto& [d, ends] : shapes)
    for (int t = 0; t < 25; ++t) {
      QuadMap f = random_hom(d, ends.first, rng).value();
      QuadMap g = random_hom(d, ends.second, rng).value();
      SpanMorphism s = canonicalize_span(f, g);
      CHECK(s.rel.dim() == d.dim);
      // the relation is exactly the set of leg-image pairs
      for (const BitVec& x : Subspace::full(d.dim).elements())
        CHECK(s.rel.contains(concat(f(x), g(x))));
      SpanLegs legs = span_legs(s);
      CHECK(legs.middle.dim == d.dim);
      CHECK(legs.left.cod == ends.first);
      CHECK(legs.right.cod == ends.second);
      CHECK(canonicalize_span(legs.left, legs.right) == s);
      // precomposing with an isomorphism of the middle changes nothing
      auto iso = random_hom(legs.middle, legs.middle, rng);
      if (iso)
        CHECK(canonicalize_span(compose(legs.left, *iso),
                                compose(legs.right, *iso)) == s);
    }
}

TEST_CASE("composition is associative with identity units") {
  std::mt19937_64 rng(67);
  QuadSpace x1 = standard_point(true), h1 = standard_h1(), h0 = standard_h0();
  auto ab = enumerate_span_homs(x1, h0);
  auto bc = enumerate_span_homs(h0, h1);
  auto cd = enumerate_span_homs(h1, x1);
  REQUIRE_FALSE(ab.empty());
  for (int t = 0; t < 200; ++t) {
    SpanMorphism s = pick(ab, rng), u = pick(bc, rng), w = pick(cd, rng);
    CHECK(compose_spans(compose_spans(s, u), w) ==
          compose_spans(s, compose_spans(u, w)));
    CHECK(compose_spans(SpanMorphism::id(x1), s) == s);
    CHECK(compose_spans(s, SpanMorphism::id(h0)) == s);
    // the middle of a composite never grows
    CHECK(compose_spans(s, u).rel.dim() <= std::min(s.rel.dim(), u.rel.dim()));
  }
  CHECK_THROWS_AS(compose_spans(pick(ab, rng), pick(cd, rng)),
                  std::invalid_argument);
}

TEST_CASE("hom set size matches the image-plus-morphism count") {
  // a span V -> W is the same data as a subspace A of V together with a
  // morphism from A's induced space to W
  std::vector<QuadSpace> spaces = {standard_point(false), standard_point(true),
                                   standard_h0(), standard_h1()};
  for (const QuadSpace& v : spaces)
    for (const QuadSpace& w : spaces) {
      std::size_t expect = 0;
      for (const Subspace& a : enumerate_subspaces(v.dim))
        expect += enumerate_homs(induced_space(v, a.basis()), w).size();
      CHECK(enumerate_span_homs(v, w).size() == expect);
    }
  CHECK(enumerate_span_homs(standard_h0(), standard_h0()).size() == 8);
  CHECK(enumerate_span_homs(standard_h1(), standard_h1()).size() == 16);
  CHECK_THROWS_AS(enumerate_span_homs(orthogonal_sum(standard_h0(), standard_h0()),
                                      orthogonal_sum(standard_h0(), standard_h1()),
                                      Exec::parallel, 7),
                  BoundError);
}

TEST_CASE("diagonal spans multiply by intersection") {
  for (const QuadSpace& v : {standard_h0(), standard_h1()}) {
    auto subs = enumerate_subspaces(v.dim);
    for (const Subspace& a : subs)
      for (const Subspace& b : subs) {
        SpanMorphism ea = e_alpha(v, a), eb = e_alpha(v, b);
        CHECK(compose_spans(ea, eb) == e_alpha(v, intersect(a, b)));
      }
    CHECK(e_alpha(v, Subspace::full(v.dim)) == SpanMorphism::id(v));
    for (const Subspace& a : subs) {
      SpanMorphism ea = e_alpha(v, a);
      CHECK(compose_spans(ea, ea) == ea);
      CHECK(transpose_span(ea) == ea);
    }
  }
}

TEST_CASE("transpose is a contravariant involution") {
  std::mt19937_64 rng(71);
  auto ab = enumerate_span_homs(standard_h1(), standard_h0());
  auto bc = enumerate_span_homs(standard_h0(), standard_point(true));
  for (int t = 0; t < 200; ++t) {
    SpanMorphism s = pick(ab, rng), u = pick(bc, rng);
    CHECK(transpose_span(transpose_span(s)) == s);
    CHECK(transpose_span(s).dom == s.cod);
    CHECK(transpose_span(s).cod == s.dom);
    CHECK(transpose_span(compose_spans(s, u)) ==
          compose_spans(transpose_span(u), transpose_span(s)));
  }
  CHECK(transpose_span(SpanMorphism::id(standard_h0())) ==
        SpanMorphism::id(standard_h0()));
}

TEST_CASE("idempotent endo-spans are exactly the diagonals") {
  for (const QuadSpace& v :
       {QuadSpace(), standard_point(false), standard_point(true), standard_h0(),
        standard_h1()}) {
    std::vector<SpanMorphism> expect;
    for (const Subspace& a : enumerate_subspaces(v.dim))
      expect.push_back(e_alpha(v, a));
    std::sort(expect.begin(), expect.end());
    auto found = enumerate_idempotents(v);
    REQUIRE(found.size() == expect.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i] == expect[i]);
  }
}

TEST_CASE("block sums compose blockwise") {
  std::mt19937_64 rng(73);
  QuadSpace x1 = standard_point(true), h0 = standard_h0(), h1 = standard_h1();
  CHECK(span_orthogonal_sum(SpanMorphism::id(h0), SpanMorphism::id(h1)) ==
        SpanMorphism::id(orthogonal_sum(h0, h1)));
  auto ab = enumerate_span_homs(x1, x1);
  auto bc = enumerate_span_homs(x1, h0);
  auto pq = enumerate_span_homs(h0, h1);
  auto qr = enumerate_span_homs(h1, h1);
  for (int t = 0; t < 100; ++t) {
    SpanMorphism s1 = pick(ab, rng), s2 = pick(bc, rng);
    SpanMorphism u1 = pick(pq, rng), u2 = pick(qr, rng);
    CHECK(compose_spans(span_orthogonal_sum(s1, u1), span_orthogonal_sum(s2, u2)) ==
          span_orthogonal_sum(compose_spans(s1, s2), compose_spans(u1, u2)));
  }
}
