#include "qf2/quadspace.hpp"

#include <algorithm>

namespace qf2 {

QuadSpace::QuadSpace(BitMatrix g, BitVec d) : dim(d.len), gram(std::move(g)), diag(d) {
  if (gram.rows != dim || gram.cols != dim)
    throw std::invalid_argument("gram must be dim x dim");
  for (int i = 0; i < dim; ++i) {
    if (gram.get(i, i)) throw std::invalid_argument("gram diagonal must vanish");
    for (int j = i + 1; j < dim; ++j)
      if (gram.get(i, j) != gram.get(j, i))
        throw std::invalid_argument("gram must be symmetric");
  }
}

bool QuadSpace::eval_q(const BitVec& v) const {
  if (v.len != dim) throw std::invalid_argument("vector dimension mismatch");
  int acc = popcount64(diag.bits & v.bits);
  std::uint64_t sel = v.bits;
  while (sel) {
    int i = lowest_bit(sel);
    sel &= sel - 1;
    // strictly-upper part of row i against the remaining coordinates
    acc ^= popcount64(gram.row[i] & v.bits & ~low_mask(i + 1));
  }
  return acc & 1;
}

bool QuadSpace::eval_b(const BitVec& u, const BitVec& v) const {
  if (u.len != dim || v.len != dim) throw std::invalid_argument("vector dimension mismatch");
  int acc = 0;
  std::uint64_t sel = u.bits;
  while (sel) {
    int i = lowest_bit(sel);
    sel &= sel - 1;
    acc ^= parity64(gram.row[i] & v.bits);
  }
  return acc & 1;
}

QuadSpace standard_h0() {
  BitMatrix g(2, 2);
  g.set(0, 1, true);
  g.set(1, 0, true);
  return QuadSpace(g, BitVec(0, 2));
}

QuadSpace standard_h1() {
  BitMatrix g(2, 2);
  g.set(0, 1, true);
  g.set(1, 0, true);
  return QuadSpace(g, BitVec(3, 2));
}

QuadSpace standard_point(bool q_value) {
  return QuadSpace(BitMatrix(1, 1), BitVec(q_value ? 1 : 0, 1));
}

QuadSpace orthogonal_sum(const QuadSpace& a, const QuadSpace& b) {
  check_dim(a.dim + b.dim);
  BitMatrix g(a.dim + b.dim, a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i) g.row[i] = a.gram.row[i];
  for (int i = 0; i < b.dim; ++i) g.row[a.dim + i] = b.gram.row[i] << a.dim;
  return QuadSpace(g, concat(a.diag, b.diag));
}

Subspace radical(const QuadSpace& s) { return kernel(s.gram); }

bool is_nondegenerate(const QuadSpace& s) { return radical(s).dim() == 0; }

QuadSpace induced_space(const QuadSpace& s, const std::vector<BitVec>& basis) {
  int k = int(basis.size());
  BitMatrix g(k, k);
  BitVec d(0, k);
  for (int i = 0; i < k; ++i) {
    d.set(i, s.eval_q(basis[i]));
    for (int j = i + 1; j < k; ++j) {
      bool b = s.eval_b(basis[i], basis[j]);
      g.set(i, j, b);
      g.set(j, i, b);
    }
  }
  return QuadSpace(g, d);
}

namespace {

// Symplectic pairing algorithm on an explicit spanning family: repeatedly
// take the first nonzero vector, find a partner with pairing 1, then project
// the rest onto the orthogonal complement of the pair.
std::vector<std::pair<BitVec, BitVec>> symplectic_pairs(const QuadSpace& s,
                                                        std::vector<BitVec> vecs) {
  std::vector<std::pair<BitVec, BitVec>> pairs;
  while (!vecs.empty()) {
    // drop zero vectors
    while (!vecs.empty() && vecs.front().is_zero()) vecs.erase(vecs.begin());
    if (vecs.empty()) break;
    BitVec a = vecs.front();
    vecs.erase(vecs.begin());
    int partner = -1;
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (s.eval_b(a, vecs[i])) {
        partner = int(i);
        break;
      }
    if (partner < 0) throw std::invalid_argument("degenerate space has no symplectic basis");
    BitVec b = vecs[partner];
    vecs.erase(vecs.begin() + partner);
    for (BitVec& u : vecs) {
      if (s.eval_b(u, b)) u = u + a;
      if (s.eval_b(u, a)) u = u + b;
    }
    pairs.emplace_back(a, b);
  }
  return pairs;
}

}  // namespace

std::vector<std::pair<BitVec, BitVec>> symplectic_basis(const QuadSpace& s) {
  if (!is_nondegenerate(s)) throw std::invalid_argument("degenerate space has no symplectic basis");
  std::vector<BitVec> vecs;
  for (int i = 0; i < s.dim; ++i) vecs.emplace_back(std::uint64_t(1) << i, s.dim);
  return symplectic_pairs(s, vecs);
}

bool arf(const QuadSpace& s) {
  auto pairs = symplectic_basis(s);
  int acc = 0;
  for (const auto& [a, b] : pairs) acc ^= int(s.eval_q(a)) & int(s.eval_q(b));
  return acc & 1;
}

Decomposition decompose(const QuadSpace& s) {
  Decomposition d;
  Subspace rad = radical(s);
  // Any complement of the radical works: the radical pairs to zero with
  // everything, so the two parts are automatically orthogonal.
  auto comp = complement_basis(rad);
  auto pairs = symplectic_pairs(s, comp);
  for (const auto& [a, b] : pairs) {
    d.nondeg.push_back(a);
    d.nondeg.push_back(b);
  }
  d.rad = rad.basis();
  d.rad_type = 0;
  for (const BitVec& r : d.rad)
    if (s.eval_q(r)) d.rad_type = 1;
  if (d.rad_type == 1) {
    // Rebase the radical so every basis vector has q = 1.
    int one = -1;
    for (std::size_t i = 0; i < d.rad.size(); ++i)
      if (s.eval_q(d.rad[i])) {
        one = int(i);
        break;
      }
    for (std::size_t i = 0; i < d.rad.size(); ++i)
      if (!s.eval_q(d.rad[i])) d.rad[i] = d.rad[i] + d.rad[one];
    // With a q=1 radical vector available, the non-degenerate part's class
    // is not unique; normalize it to Arf 0 by shifting one symplectic pair
    // with q(a)=q(b)=1 into the Arf 0 shape. Shifting by a radical vector
    // keeps all pairings and keeps the span a complement of the radical.
    int acc = 0;
    for (std::size_t i = 0; i + 1 < d.nondeg.size(); i += 2)
      acc ^= int(s.eval_q(d.nondeg[i])) & int(s.eval_q(d.nondeg[i + 1]));
    if (acc & 1) {
      for (std::size_t i = 0; i + 1 < d.nondeg.size(); i += 2)
        if (s.eval_q(d.nondeg[i]) && s.eval_q(d.nondeg[i + 1])) {
          d.nondeg[i] = d.nondeg[i] + d.rad[one];
          d.nondeg[i + 1] = d.nondeg[i + 1] + d.rad[one];
          break;
        }
    }
  }
  return d;
}

IsoClass iso_class(const QuadSpace& s) {
  Decomposition d = decompose(s);
  IsoClass c;
  c.dim = s.dim;
  c.rad_dim = int(d.rad.size());
  c.rad_type = d.rad_type;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < d.nondeg.size(); i += 2)
    acc ^= int(s.eval_q(d.nondeg[i])) & int(s.eval_q(d.nondeg[i + 1]));
  c.nondeg_class = acc & 1;
  if (c.rad_dim > 0 && c.rad_type == 1) c.nondeg_class = 0;  // normalized away
  return c;
}

bool is_isometric(const QuadSpace& a, const QuadSpace& b) {
  return iso_class(a) == iso_class(b);
}

std::string IsoClass::str() const {
  if (dim == 0) return "0";
  std::vector<std::string> blocks;
  int m = (dim - rad_dim) / 2;
  for (int i = 0; i < m; ++i)
    blocks.push_back(i == 0 && nondeg_class ? "H1" : "H0");
  for (int i = 0; i < rad_dim; ++i) blocks.push_back(rad_type ? "x1" : "x0");
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "+";
    out += blocks[i];
  }
  return out;
}

QuadSpace from_class(const IsoClass& c) {
  if (c.dim < 0 || c.rad_dim < 0 || c.rad_dim > c.dim || ((c.dim - c.rad_dim) & 1))
    throw std::invalid_argument("malformed class");
  if (c.rad_type != 0 && c.rad_type != 1) throw std::invalid_argument("malformed class");
  if (c.nondeg_class != 0 && c.nondeg_class != 1) throw std::invalid_argument("malformed class");
  if (c.rad_dim == 0 && c.rad_type != 0) throw std::invalid_argument("malformed class");
  if (c.rad_dim > 0 && c.rad_type == 1 && c.nondeg_class != 0)
    throw std::invalid_argument("malformed class");
  if (c.dim - c.rad_dim == 0 && c.nondeg_class != 0)
    throw std::invalid_argument("malformed class");
  QuadSpace out;
  int m = (c.dim - c.rad_dim) / 2;
  for (int i = 0; i < m; ++i)
    out = orthogonal_sum(out, i == 0 && c.nondeg_class ? standard_h1() : standard_h0());
  for (int i = 0; i < c.rad_dim; ++i)
    out = orthogonal_sum(out, standard_point(c.rad_type));
  return out;
}

}  // namespace qf2
