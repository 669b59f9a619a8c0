#include "qf2/subspace.hpp"

#include <algorithm>

namespace qf2 {

Subspace Subspace::from_spanning(const std::vector<BitVec>& vs, int ambient) {
  Subspace s(ambient);
  for (const BitVec& v : vs) {
    if (v.len != ambient) throw std::invalid_argument("ambient mismatch");
    std::uint64_t r = s.reduce(v.bits);
    if (r == 0) continue;
    std::uint64_t p = r & (~r + 1);
    for (std::uint64_t& old : s.rows)
      if (old & p) old ^= r;
    s.rows.push_back(r);
  }
  std::sort(s.rows.begin(), s.rows.end(),
            [](std::uint64_t a, std::uint64_t b) { return lowest_bit(a) < lowest_bit(b); });
  return s;
}

Subspace Subspace::full(int n) {
  Subspace s(n);
  for (int i = 0; i < n; ++i) s.rows.push_back(std::uint64_t(1) << i);
  return s;
}

std::vector<BitVec> Subspace::elements() const {
  std::vector<BitVec> out;
  out.reserve(std::size_t(1) << dim());
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << dim()); ++mask) {
    std::uint64_t v = 0;
    std::uint64_t m = mask;
    while (m) {
      int i = lowest_bit(m);
      m &= m - 1;
      v ^= rows[i];
    }
    out.emplace_back(v, ambient);
  }
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
  auto vs = a.basis();
  auto bb = b.basis();
  vs.insert(vs.end(), bb.begin(), bb.end());
  return Subspace::from_spanning(vs, a.ambient);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("ambient mismatch");
  // Combinations sum c_i a_i lying in b: c in the null space of the matrix
  // whose columns are the b-residuals of the a-basis.
  std::vector<BitVec> resid;
  resid.reserve(a.rows.size());
  for (std::uint64_t r : a.rows) resid.emplace_back(b.reduce(r), a.ambient);
  BitMatrix m = BitMatrix::from_cols(resid, a.ambient);
  Subspace coeffs = kernel(m);
  std::vector<BitVec> gens;
  for (const BitVec& c : coeffs.basis()) {
    std::uint64_t v = 0;
    for (int i = 0; i < c.len; ++i)
      if (c.get(i)) v ^= a.rows[i];
    gens.emplace_back(v, a.ambient);
  }
  return Subspace::from_spanning(gens, a.ambient);
}

Subspace kernel(const BitMatrix& m) {
  BitMatrix r = m;
  // Forward elimination, tracking the pivot column of each reduced row.
  std::vector<int> pivot_col;
  int next_row = 0;
  for (int c = 0; c < r.cols && next_row < r.rows; ++c) {
    int p = -1;
    for (int i = next_row; i < r.rows; ++i)
      if (r.get(i, c)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(r.row[p], r.row[next_row]);
    for (int i = 0; i < r.rows; ++i)
      if (i != next_row && r.get(i, c)) r.row[i] ^= r.row[next_row];
    pivot_col.push_back(c);
    ++next_row;
  }
  std::vector<bool> is_pivot(r.cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<BitVec> gens;
  for (int fc = 0; fc < r.cols; ++fc) {
    if (is_pivot[fc]) continue;
    BitVec v(0, r.cols);
    v.set(fc, true);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (r.get(int(i), fc)) v.set(pivot_col[i], true);
    gens.push_back(v);
  }
  return Subspace::from_spanning(gens, r.cols);
}

std::vector<BitVec> complement_basis(const Subspace& sub) {
  std::vector<BitVec> out;
  Subspace acc = sub;
  for (int j = 0; j < sub.ambient; ++j) {
    BitVec e(std::uint64_t(1) << j, sub.ambient);
    if (acc.reduce(e.bits) != 0) {
      out.push_back(e);
      auto vs = acc.basis();
      vs.push_back(e);
      acc = Subspace::from_spanning(vs, sub.ambient);
    }
  }
  return out;
}

namespace {

// Echelon bases with pivot set `pivots` (increasing): free positions are the
// non-pivot columns to the right of each row's pivot. Emits every filling.
void emit_pivot_family(int n, const std::vector<int>& pivots,
                       std::vector<Subspace>& out) {
  int k = int(pivots.size());
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::pair<int, int>> free_pos;  // (row, col)
  for (int i = 0; i < k; ++i)
    for (int c = pivots[i] + 1; c < n; ++c)
      if (!is_pivot[c]) free_pos.emplace_back(i, c);
  std::uint64_t total = std::uint64_t(1) << free_pos.size();
  for (std::uint64_t fill = 0; fill < total; ++fill) {
    Subspace s(n);
    s.rows.assign(k, 0);
    for (int i = 0; i < k; ++i) s.rows[i] = std::uint64_t(1) << pivots[i];
    for (std::size_t b = 0; b < free_pos.size(); ++b)
      if ((fill >> b) & 1)
        s.rows[free_pos[b].first] |= std::uint64_t(1) << free_pos[b].second;
    out.push_back(std::move(s));
  }
}

void pivot_sets(int n, int k, int start, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = start; c < n; ++c) {
    cur.push_back(c);
    pivot_sets(n, k, c + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(int n, int bound) {
  check_dim(n);
  if (n > bound) throw BoundError("subspace enumeration bound exceeded");
  std::vector<Subspace> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<int>> families;
    std::vector<int> cur;
    pivot_sets(n, k, 0, cur, families);
    std::vector<Subspace> layer;
    for (const auto& pv : families) emit_pivot_family(n, pv, layer);
    std::sort(layer.begin(), layer.end(),
              [](const Subspace& a, const Subspace& b) { return a.rows < b.rows; });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace qf2
