#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qf2/quadspace.hpp"

using namespace qf2;

namespace {

QuadSpace random_space(std::mt19937_64& rng, int dim) {
  BitMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      bool v = rng() & 1;
      g.set(i, j, v);
      g.set(j, i, v);
    }
  return QuadSpace(g, BitVec(rng(), dim));
}

QuadSpace sum_of(std::initializer_list<QuadSpace> blocks) {
  QuadSpace s;
  for (const QuadSpace& b : blocks) s = orthogonal_sum(s, b);
  return s;
}

}  // namespace

TEST_CASE("construction validates the polar form") {
  BitMatrix bad(2, 2);
  bad.set(0, 1, true);  // not symmetric
  CHECK_THROWS_AS(QuadSpace(bad, BitVec(0, 2)), std::invalid_argument);
  BitMatrix diag(2, 2);
  diag.set(0, 0, true);  // nonzero diagonal
  diag.set(0, 1, true);
  diag.set(1, 0, true);
  CHECK_THROWS_AS(QuadSpace(diag, BitVec(0, 2)), std::invalid_argument);
}

TEST_CASE("the polar form is the polarization of q") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    int dim = 1 + int(rng() % 6);
    QuadSpace s = random_space(rng, dim);
    BitVec u(rng(), dim), v(rng(), dim);
    CHECK(s.eval_b(u, v) == (s.eval_q(u + v) != (s.eval_q(u) != s.eval_q(v))));
    CHECK_FALSE(s.eval_b(u, u));  // alternating
  }
}

TEST_CASE("standard blocks have the advertised values") {
  QuadSpace h = standard_h0();
  CHECK(h.dim == 2);
  CHECK_FALSE(h.eval_q(BitVec(0b01, 2)));
  CHECK_FALSE(h.eval_q(BitVec(0b10, 2)));
  CHECK(h.eval_q(BitVec(0b11, 2)));  // q(a+b) = q(a)+q(b)+B(a,b)
  CHECK(h.eval_b(BitVec(0b01, 2), BitVec(0b10, 2)));
  QuadSpace k = standard_h1();
  CHECK(k.eval_q(BitVec(0b01, 2)));
  CHECK(k.eval_q(BitVec(0b10, 2)));
  CHECK(k.eval_q(BitVec(0b11, 2)));
  CHECK(standard_point(false).dim == 1);
  CHECK_FALSE(standard_point(false).eval_q(BitVec(1, 1)));
  CHECK(standard_point(true).eval_q(BitVec(1, 1)));
}

TEST_CASE("orthogonal sums keep blocks orthogonal") {
  QuadSpace s = sum_of({standard_h0(), standard_h1()});
  CHECK(s.dim == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j)
      CHECK_FALSE(s.gram.get(i, j));
  CHECK(s.eval_q(BitVec(0b0001, 4)) == false);  // H0 block
  CHECK(s.eval_q(BitVec(0b0100, 4)) == true);   // H1 block
}

TEST_CASE("radical and non-degeneracy") {
  CHECK(is_nondegenerate(standard_h0()));
  CHECK(is_nondegenerate(QuadSpace()));
  CHECK_FALSE(is_nondegenerate(standard_point(false)));
  QuadSpace s = sum_of({standard_h0(), standard_point(true)});
  Subspace r = radical(s);
  CHECK(r.dim() == 1);
  CHECK(r.contains(BitVec(0b100, 3)));
}

TEST_CASE("symplectic bases pair correctly") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    // random change of basis of a non-degenerate model keeps it non-degenerate
    int pairs = 1 + int(rng() % 3);
    QuadSpace s;
    for (int i = 0; i < pairs; ++i)
      s = orthogonal_sum(s, (rng() & 1) ? standard_h1() : standard_h0());
    BitMatrix m(s.dim, s.dim);
    do {
      for (int i = 0; i < s.dim; ++i) m.row[i] = rng() & low_mask(s.dim);
    } while (!is_invertible(m));
    std::vector<BitVec> rows;
    for (int i = 0; i < s.dim; ++i) rows.push_back(m.row_vec(i));
    QuadSpace mixed = induced_space(s, rows);
    auto basis = symplectic_basis(mixed);
    CHECK(int(basis.size()) == pairs);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        CHECK(mixed.eval_b(basis[i].first, basis[j].first) == false);
        CHECK(mixed.eval_b(basis[i].second, basis[j].second) == false);
        CHECK(mixed.eval_b(basis[i].first, basis[j].second) == (i == j));
      }
  }
  CHECK_THROWS_AS(symplectic_basis(standard_point(false)), std::invalid_argument);
}

TEST_CASE("arf values and additivity") {
  CHECK_FALSE(arf(QuadSpace()));
  CHECK_FALSE(arf(standard_h0()));
  CHECK(arf(standard_h1()));
  CHECK_FALSE(arf(sum_of({standard_h1(), standard_h1()})));
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    QuadSpace a = (rng() & 1) ? standard_h1() : standard_h0();
    QuadSpace b = (rng() & 1) ? standard_h1() : standard_h0();
    CHECK(arf(orthogonal_sum(a, b)) == (arf(a) != arf(b)));
  }
}

TEST_CASE("decomposition reassembles the space") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    int dim = int(rng() % 6);
    QuadSpace s = random_space(rng, dim);
    Decomposition d = decompose(s);
    CHECK(int(d.nondeg.size() + d.rad.size()) == dim);
    // symplectic block pairings
    for (std::size_t i = 0; i + 1 < d.nondeg.size(); i += 2)
      CHECK(s.eval_b(d.nondeg[i], d.nondeg[i + 1]));
    // radical vectors pair with nothing
    for (const BitVec& r : d.rad)
      for (const BitVec& v : d.nondeg) CHECK_FALSE(s.eval_b(r, v));
    // radical type matches q on the radical basis
    bool has_one = false;
    for (const BitVec& r : d.rad) has_one = has_one || s.eval_q(r);
    CHECK((d.rad_type == 1) == has_one);
    if (d.rad_type == 1) {
      // type-one radicals come with every basis vector at q = 1 and an
      // Arf-zero non-degenerate part
      for (const BitVec& r : d.rad) CHECK(s.eval_q(r));
      bool arf_bit = false;
      for (std::size_t i = 0; i + 1 < d.nondeg.size(); i += 2)
        arf_bit = arf_bit !=
                  (s.eval_q(d.nondeg[i]) && s.eval_q(d.nondeg[i + 1]));
      CHECK_FALSE(arf_bit);
    }
    // the full basis really spans
    std::vector<BitVec> all = d.nondeg;
    all.insert(all.end(), d.rad.begin(), d.rad.end());
    CHECK(Subspace::from_spanning(all, dim).dim() == dim);
  }
}

TEST_CASE("classification invariants of the standard models") {
  IsoClass h0 = iso_class(standard_h0());
  CHECK(h0.dim == 2);
  CHECK(h0.rad_dim == 0);
  CHECK(h0.nondeg_class == 0);
  CHECK(iso_class(standard_h1()).nondeg_class == 1);
  CHECK(iso_class(standard_h0()).str() == "H0");
  CHECK(iso_class(standard_h1()).str() == "H1");
  CHECK(iso_class(standard_point(false)).str() == "x0");
  CHECK(iso_class(QuadSpace()).str() == "0");
  // the two padding rules
  QuadSpace a = sum_of({standard_h0(), standard_point(true)});
  QuadSpace b = sum_of({standard_h1(), standard_point(true)});
  CHECK(iso_class(a) == iso_class(b));
  QuadSpace c = sum_of({standard_h0(), standard_point(false)});
  QuadSpace d = sum_of({standard_h1(), standard_point(false)});
  CHECK_FALSE(iso_class(c) == iso_class(d));
  // fully degenerate mixed radicals merge
  QuadSpace e = sum_of({standard_point(true), standard_point(true)});
  QuadSpace f = sum_of({standard_point(false), standard_point(true)});
  CHECK(iso_class(e) == iso_class(f));
}

TEST_CASE("class models round-trip") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 300; ++t) {
    QuadSpace s = random_space(rng, int(rng() % 6));
    IsoClass c = iso_class(s);
    QuadSpace model = from_class(c);
    CHECK(model.dim == s.dim);
    CHECK(iso_class(model) == c);
    CHECK(is_isometric(s, model));
  }
  IsoClass bad;
  bad.dim = 3;
  bad.rad_dim = 1;
  bad.rad_type = 1;
  bad.nondeg_class = 1;  // impossible: q=1 radical forces the class to 0
  CHECK_THROWS_AS(from_class(bad), std::invalid_argument);
  IsoClass bad2;
  bad2.dim = 3;
  bad2.rad_dim = 0;  // odd non-degenerate dimension is impossible
  CHECK_THROWS_AS(from_class(bad2), std::invalid_argument);
}

TEST_CASE("isometry respects and refines dimension") {
  CHECK(is_isometric(QuadSpace(), QuadSpace()));
  CHECK_FALSE(is_isometric(standard_h0(), standard_h1()));
  CHECK_FALSE(is_isometric(standard_h0(), QuadSpace()));
  CHECK(is_isometric(sum_of({standard_h0(), standard_h0()}),
                     sum_of({standard_h1(), standard_h1()})));
}
