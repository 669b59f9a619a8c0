#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact linear algebra over GF(2). Vectors are packed into a single 64-bit
// word (bit j = coordinate j), matrices into one word per row, so every
// dimension in this library is capped at 64. All algorithms are exact.

namespace qf2 {

inline constexpr int kMaxDim = 64;

// Thrown when an enumeration would exceed its configured dimension bound.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int popcount64(std::uint64_t w) { return __builtin_popcountll(w); }
inline int parity64(std::uint64_t w) { return popcount64(w) & 1; }
// Index of the lowest set bit; undefined on zero.
inline int lowest_bit(std::uint64_t w) { return __builtin_ctzll(w); }

inline std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
}

inline void check_dim(int n) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
}

struct BitVec {
  std::uint64_t bits = 0;
  int len = 0;

  BitVec() = default;
  BitVec(std::uint64_t b, int n) : bits(b & low_mask(n)), len(n) { check_dim(n); }

  bool get(int i) const { return (bits >> i) & 1; }
  void set(int i, bool v) {
    bits = v ? (bits | (std::uint64_t(1) << i)) : (bits & ~(std::uint64_t(1) << i));
  }
  bool is_zero() const { return bits == 0; }

  friend BitVec operator+(BitVec a, BitVec b) {
    if (a.len != b.len) throw std::invalid_argument("BitVec length mismatch");
    return BitVec(a.bits ^ b.bits, a.len);
  }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  // Concatenation: a in the low coordinates, b shifted above it.
  friend BitVec concat(BitVec a, BitVec b) {
    check_dim(a.len + b.len);
    return BitVec(a.bits | (b.bits << a.len), a.len + b.len);
  }
  // Coordinates [from, from+n) as a fresh vector.
  BitVec slice(int from, int n) const { return BitVec(bits >> from, n); }

  std::string str() const {
    std::string s(len, '0');
    for (int i = 0; i < len; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }
};

// Row-major packed matrix: row r is a bitmask over the cols coordinates.
// Row/column conventions: (m*v)_r = <row r, v>, and columns of the matrix of
// a linear map are the images of the domain basis vectors.
struct BitMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> row;

  BitMatrix() = default;
  BitMatrix(int r, int c) : rows(r), cols(c), row(r, 0) {
    if (r < 0) throw std::invalid_argument("negative row count");
    check_dim(c);
  }

  static BitMatrix identity(int n) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.row[i] = std::uint64_t(1) << i;
    return m;
  }
  static BitMatrix from_rows(const std::vector<BitVec>& rs, int c) {
    BitMatrix m(int(rs.size()), c);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (rs[i].len != c) throw std::invalid_argument("row length mismatch");
      m.row[i] = rs[i].bits;
    }
    return m;
  }
  static BitMatrix from_cols(const std::vector<BitVec>& cs, int r) {
    BitMatrix m(r, int(cs.size()));
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j].len != r) throw std::invalid_argument("column length mismatch");
      for (int i = 0; i < r; ++i)
        if (cs[j].get(i)) m.row[i] |= std::uint64_t(1) << j;
    }
    return m;
  }

  bool get(int r, int c) const { return (row[r] >> c) & 1; }
  void set(int r, int c, bool v) {
    row[r] = v ? (row[r] | (std::uint64_t(1) << c)) : (row[r] & ~(std::uint64_t(1) << c));
  }
  BitVec row_vec(int r) const { return BitVec(row[r], cols); }
  BitVec col_vec(int c) const {
    BitVec v(0, rows);
    for (int i = 0; i < rows; ++i)
      if (get(i, c)) v.set(i, true);
    return v;
  }
  std::vector<BitVec> columns() const {
    std::vector<BitVec> cs;
    cs.reserve(cols);
    for (int j = 0; j < cols; ++j) cs.push_back(col_vec(j));
    return cs;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  friend BitVec operator*(const BitMatrix& m, const BitVec& v) {
    if (m.cols != v.len) throw std::invalid_argument("matrix/vector shape mismatch");
    BitVec out(0, m.rows);
    for (int i = 0; i < m.rows; ++i)
      if (parity64(m.row[i] & v.bits)) out.set(i, true);
    return out;
  }
  // (a*b).row[i] = xor of b-rows selected by a.row[i].
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    BitMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
      std::uint64_t acc = 0, sel = a.row[i];
      while (sel) {
        int j = lowest_bit(sel);
        sel &= sel - 1;
        acc ^= b.row[j];
      }
      c.row[i] = acc;
    }
    return c;
  }
  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
      throw std::invalid_argument("matrix shape mismatch");
    BitMatrix c(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) c.row[i] = a.row[i] ^ b.row[i];
    return c;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  // Columns [from, from+n) as a submatrix.
  BitMatrix col_slice(int from, int n) const {
    BitMatrix s(rows, n);
    for (int i = 0; i < rows; ++i) s.row[i] = (row[i] >> from) & low_mask(n);
    return s;
  }
  BitMatrix row_slice(int from, int n) const {
    BitMatrix s(n, cols);
    for (int i = 0; i < n; ++i) s.row[i] = row[from + i];
    return s;
  }
  friend BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows != b.rows) throw std::invalid_argument("row count mismatch");
    check_dim(a.cols + b.cols);
    BitMatrix c(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) c.row[i] = a.row[i] | (b.row[i] << a.cols);
    return c;
  }
  friend BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("column count mismatch");
    BitMatrix c(a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) c.row[i] = a.row[i];
    for (int i = 0; i < b.rows; ++i) c.row[a.rows + i] = b.row[i];
    return c;
  }
};

int rank(BitMatrix m);
bool is_invertible(const BitMatrix& m);
std::optional<BitMatrix> inverse(const BitMatrix& m);
// One solution of m*x = b, if any (free coordinates set to zero).
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b);

}  // namespace qf2
