#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "qf2/subspace.hpp"

using namespace qf2;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  BitMatrix m(r, c);
  for (int i = 0; i < r; ++i) m.row[i] = rng() & low_mask(c);
  return m;
}

BitMatrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    BitMatrix m = random_matrix(rng, n, n);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

TEST_CASE("bit vector arithmetic") {
  BitVec a(0b1011, 4), b(0b0110, 4);
  CHECK((a + b).bits == 0b1101);
  CHECK(a.get(0));
  CHECK_FALSE(a.get(2));
  CHECK(concat(a, b).bits == 0b01101011);
  CHECK(concat(a, b).len == 8);
  CHECK(BitVec(0b01101011, 8).slice(4, 4).bits == 0b0110);
  CHECK(a.str() == "1101");
  CHECK_THROWS_AS(BitVec(0, 65), std::invalid_argument);
  // construction masks stray high bits
  CHECK(BitVec(0xff, 4).bits == 0xf);
}

TEST_CASE("matrix products match the evaluation convention") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + int(rng() % 6), m = 1 + int(rng() % 6), k = 1 + int(rng() % 6);
    BitMatrix a = random_matrix(rng, n, m), b = random_matrix(rng, m, k);
    BitVec v(rng(), k);
    // (a*b)*v computed two ways
    CHECK((a * b) * v == a * (b * v));
    CHECK((a * b).transposed() == b.transposed() * a.transposed());
  }
  CHECK(BitMatrix::identity(4) * BitVec(0b1010, 4) == BitVec(0b1010, 4));
}

TEST_CASE("rank, inverse and solve") {
  std::mt19937_64 rng(11);
  CHECK(rank(BitMatrix(0, 0)) == 0);
  CHECK(is_invertible(BitMatrix(0, 0)));
  for (int t = 0; t < 50; ++t) {
    int n = 1 + int(rng() % 6);
    BitMatrix a = random_invertible(rng, n);
    CHECK(rank(a) == n);
    BitMatrix ai = *inverse(a);
    CHECK(a * ai == BitMatrix::identity(n));
    CHECK(ai * a == BitMatrix::identity(n));
    // a random target is always solvable for invertible a, uniquely
    BitVec b(rng(), n);
    CHECK(a * *solve(a, b) == b);
  }
  // singular: the two equal rows force consistency conditions
  BitMatrix s = BitMatrix::from_rows({BitVec(0b11, 2), BitVec(0b11, 2)}, 2);
  CHECK(rank(s) == 1);
  CHECK_FALSE(is_invertible(s));
  CHECK_FALSE(inverse(s).has_value());
  CHECK_FALSE(solve(s, BitVec(0b01, 2)).has_value());
  CHECK(solve(s, BitVec(0b11, 2)).has_value());
}

TEST_CASE("solve picks the zero-free-coordinate solution") {
  // one pivot, one free column: the returned solution must zero the free one
  BitMatrix m = BitMatrix::from_rows({BitVec(0b11, 2)}, 2);
  BitVec x = *solve(m, BitVec(1, 1));
  CHECK((m * x) == BitVec(1, 1));
  CHECK(popcount64(x.bits) == 1);
}

TEST_CASE("kernel is the exact null space") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    int r = 1 + int(rng() % 5), c = 1 + int(rng() % 6);
    BitMatrix m = random_matrix(rng, r, c);
    Subspace k = kernel(m);
    CHECK(k.dim() == c - rank(m));
    for (const BitVec& v : k.elements()) CHECK((m * v).bits == 0);
  }
}

TEST_CASE("echelon form is a canonical representative") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + int(rng() % 6);
    std::vector<BitVec> basis;
    for (int i = 0; i < 1 + int(rng() % n); ++i) basis.emplace_back(rng(), n);
    Subspace s = Subspace::from_spanning(basis, n);
    // any respanning family (random member sums) produces the same rows
    std::vector<BitVec> mixed;
    for (int i = 0; i < 6; ++i) {
      BitVec v(0, n);
      for (const BitVec& b : basis)
        if (rng() & 1) v = v + b;
      mixed.push_back(v);
    }
    for (const BitVec& b : basis) mixed.push_back(b);  // keep the span equal
    CHECK(Subspace::from_spanning(mixed, n) == s);
    for (const BitVec& v : s.elements()) CHECK(s.contains(v));
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + int(rng() % 6);
    Subspace a = Subspace::from_spanning({BitVec(rng(), n), BitVec(rng(), n)}, n);
    Subspace b = Subspace::from_spanning({BitVec(rng(), n), BitVec(rng(), n)}, n);
    Subspace s = sum(a, b), i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("complement basis completes to the full space") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + int(rng() % 6);
    Subspace s = Subspace::from_spanning({BitVec(rng(), n), BitVec(rng(), n)}, n);
    std::vector<BitVec> comp = complement_basis(s);
    CHECK(int(comp.size()) == n - s.dim());
    std::vector<BitVec> all = s.basis();
    all.insert(all.end(), comp.begin(), comp.end());
    CHECK(Subspace::from_spanning(all, n) == Subspace::full(n));
  }
}

// Independent counting oracle: the number of subspaces of F_2^n satisfies
// g(0) = 1, g(1) = 2, g(n+1) = 2 g(n) + (2^n - 1) g(n-1).
TEST_CASE("subspace enumeration count matches the recurrence") {
  const long long frozen[] = {1, 2, 5, 16, 67, 374, 2825, 29212, 417199};
  std::vector<long long> g = {1, 2};
  for (int n = 1; n <= 7; ++n)
    g.push_back(2 * g[n] + ((1LL << n) - 1) * g[n - 1]);
  for (int n = 0; n <= 8; ++n) CHECK(g[n] == frozen[n]);
  for (int n = 0; n <= 7; ++n) {
    std::vector<Subspace> subs = enumerate_subspaces(n, 7);
    CHECK(static_cast<long long>(subs.size()) == frozen[n]);
    // enumeration is duplicate-free and dimension-major
    for (std::size_t i = 1; i < subs.size(); ++i) {
      CHECK(subs[i - 1] < subs[i]);
      CHECK(subs[i - 1].dim() <= subs[i].dim());
    }
  }
  CHECK_THROWS_AS(enumerate_subspaces(8, 7), BoundError);
}

// Second independent oracle at tiny size: generate every additively closed
// subset containing zero by brute force over subsets of F_2^n.
TEST_CASE("subspace enumeration matches subset closure for n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    std::set<std::set<std::uint64_t>> closed;
    int total = 1 << n;
    for (std::uint64_t mask = 0; mask < (1ULL << total); ++mask) {
      if (!(mask & 1)) continue;  // must contain zero
      std::set<std::uint64_t> members;
      for (int v = 0; v < total; ++v)
        if ((mask >> v) & 1) members.insert(v);
      bool ok = true;
      for (std::uint64_t a : members)
        for (std::uint64_t b : members)
          if (!members.count(a ^ b)) { ok = false; break; }
      if (ok) closed.insert(members);
    }
    std::set<std::set<std::uint64_t>> enumerated;
    for (const Subspace& s : enumerate_subspaces(n, 3)) {
      std::set<std::uint64_t> members;
      for (const BitVec& v : s.elements()) members.insert(v.bits);
      enumerated.insert(members);
    }
    CHECK(closed == enumerated);
  }
}
