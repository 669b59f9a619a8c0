#pragma once

#include "qf2/f2.hpp"

namespace qf2 {

inline constexpr int kDefaultSubspaceBound = 8;

// Subspace of F_2^n in reduced row-echelon form: basis rows have strictly
// increasing pivot (lowest set bit), and each pivot coordinate is zero in
// every other row. The representation is unique per subspace, so equality
// of subspaces is equality of the packed rows.
struct Subspace {
  int ambient = 0;
  std::vector<std::uint64_t> rows;

  Subspace() = default;
  explicit Subspace(int n) : ambient(n) { check_dim(n); }

  int dim() const { return int(rows.size()); }

  static Subspace from_spanning(const std::vector<BitVec>& vs, int ambient);
  static Subspace full(int n);

  // Residual of v after reduction by the basis; zero iff v is a member.
  std::uint64_t reduce(std::uint64_t v) const {
    for (std::uint64_t r : rows) {
      std::uint64_t p = r & (~r + 1);  // lowest set bit of the row
      if (v & p) v ^= r;
    }
    return v;
  }
  bool contains(const BitVec& v) const {
    if (v.len != ambient) throw std::invalid_argument("ambient mismatch");
    return reduce(v.bits) == 0;
  }
  bool contains(const Subspace& other) const {
    if (other.ambient != ambient) throw std::invalid_argument("ambient mismatch");
    for (std::uint64_t r : other.rows)
      if (reduce(r) != 0) return false;
    return true;
  }

  std::vector<BitVec> basis() const {
    std::vector<BitVec> b;
    b.reserve(rows.size());
    for (std::uint64_t r : rows) b.emplace_back(r, ambient);
    return b;
  }
  BitMatrix basis_matrix() const {  // dim() x ambient, one basis vector per row
    return BitMatrix::from_rows(basis(), ambient);
  }

  // All 2^dim member vectors, in Gray-free deterministic order (coefficient
  // masks 0..2^dim-1 applied to the basis rows).
  std::vector<BitVec> elements() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    if (a.rows.size() != b.rows.size()) return a.rows.size() < b.rows.size();
    return a.rows < b.rows;
  }
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Null space of m as a canonical subspace of F_2^cols.
Subspace kernel(const BitMatrix& m);

// Deterministic completion: unit vectors e_j, scanned in increasing j, that
// are independent of sub (and of each other). Returns exactly
// ambient - dim(sub) vectors.
std::vector<BitVec> complement_basis(const Subspace& sub);

// All subspaces of F_2^n, dimension-major, then lexicographic on the packed
// echelon rows. Throws BoundError when n exceeds the bound.
std::vector<Subspace> enumerate_subspaces(int n, int bound = kDefaultSubspaceBound);

}  // namespace qf2
