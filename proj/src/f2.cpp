#include "qf2/f2.hpp"

namespace qf2 {

namespace {

// In-place row reduction; returns pivot (row, col) pairs in elimination order.
// Columns are scanned in increasing index, so the result is the reduced
// echelon form with pivot columns cleared everywhere else.
std::vector<std::pair<int, int>> reduce(BitMatrix& m) {
  std::vector<std::pair<int, int>> pivots;
  int next_row = 0;
  for (int c = 0; c < m.cols && next_row < m.rows; ++c) {
    int p = -1;
    for (int r = next_row; r < m.rows; ++r)
      if (m.get(r, c)) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m.row[p], m.row[next_row]);
    for (int r = 0; r < m.rows; ++r)
      if (r != next_row && m.get(r, c)) m.row[r] ^= m.row[next_row];
    pivots.emplace_back(next_row, c);
    ++next_row;
  }
  return pivots;
}

}  // namespace

int rank(BitMatrix m) { return int(reduce(m).size()); }

bool is_invertible(const BitMatrix& m) { return m.rows == m.cols && rank(m) == m.rows; }

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  BitMatrix aug = hconcat(m, BitMatrix::identity(m.rows));
  // Gauss-Jordan restricted to the left block's columns.
  int next_row = 0;
  for (int c = 0; c < m.cols; ++c) {
    int p = -1;
    for (int r = next_row; r < aug.rows; ++r)
      if (aug.get(r, c)) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(aug.row[p], aug.row[next_row]);
    for (int r = 0; r < aug.rows; ++r)
      if (r != next_row && aug.get(r, c)) aug.row[r] ^= aug.row[next_row];
    ++next_row;
  }
  return aug.col_slice(m.cols, m.cols);
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
  if (m.rows != b.len) throw std::invalid_argument("solve: shape mismatch");
  BitMatrix aug = hconcat(m, BitMatrix::from_cols({b}, m.rows));
  auto pivots = reduce(aug);
  BitVec x(0, m.cols);
  for (auto [r, c] : pivots) {
    if (c == m.cols) return std::nullopt;  // inconsistent row 0 = 1
    x.set(c, aug.get(r, m.cols));
  }
  return x;
}

}  // namespace qf2
