#include "qf2/isometry.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qf2 {

namespace {

BitMatrix decode(std::uint64_t code, int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.row[i] = (code >> (i * n)) & low_mask(n);
  return m;
}

bool preserves_form(const QuadSpace& a, const QuadSpace& b, const BitMatrix& m) {
  auto cols = m.columns();
  for (int i = 0; i < a.dim; ++i) {
    if (b.eval_q(cols[i]) != a.diag.get(i)) return false;
    for (int j = i + 1; j < a.dim; ++j)
      if (b.eval_b(cols[i], cols[j]) != a.gram.get(i, j)) return false;
  }
  return true;
}

void check_bound(const QuadSpace& a, int bound) {
  if (a.dim > bound) throw BoundError("isometry scan bound exceeded");
}

}  // namespace

std::optional<BitMatrix> find_isometry(const QuadSpace& a, const QuadSpace& b, Exec exec,
                                       int bound) {
  check_bound(a, bound);
  if (a.dim != b.dim) return std::nullopt;
  int n = a.dim;
  std::uint64_t total = n * n >= 64 ? 0 : (std::uint64_t(1) << (n * n));
  if (n * n >= 64) throw BoundError("isometry scan bound exceeded");
  if (exec == Exec::serial) {
    for (std::uint64_t code = 0; code < total; ++code) {
      BitMatrix m = decode(code, n);
      if (is_invertible(m) && preserves_form(a, b, m)) return m;
    }
    return std::nullopt;
  }
  // Parallel: find the smallest matching code so the witness matches serial.
  std::uint64_t best = total;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t code = 0; code < std::int64_t(total); ++code) {
    if (std::uint64_t(code) >= best) continue;
    BitMatrix m = decode(std::uint64_t(code), n);
    if (is_invertible(m) && preserves_form(a, b, m)) best = std::uint64_t(code);
  }
  if (best == total) return std::nullopt;
  return decode(best, n);
}

bool is_isometric_bruteforce(const QuadSpace& a, const QuadSpace& b, Exec exec, int bound) {
  if (a.dim != b.dim) {
    check_bound(a, bound);
    return false;
  }
  return find_isometry(a, b, exec, bound).has_value();
}

std::vector<BitMatrix> all_isometries(const QuadSpace& a, const QuadSpace& b, Exec exec,
                                      int bound) {
  check_bound(a, bound);
  std::vector<BitMatrix> out;
  if (a.dim != b.dim) return out;
  int n = a.dim;
  if (n * n >= 64) throw BoundError("isometry scan bound exceeded");
  std::uint64_t total = std::uint64_t(1) << (n * n);
  if (exec == Exec::serial) {
    for (std::uint64_t code = 0; code < total; ++code) {
      BitMatrix m = decode(code, n);
      if (is_invertible(m) && preserves_form(a, b, m)) out.push_back(std::move(m));
    }
    return out;
  }
  // Chunked scan; chunks are concatenated in order, matching serial output.
  const std::uint64_t chunk = 1 << 12;
  std::uint64_t nchunks = (total + chunk - 1) / chunk;
  std::vector<std::vector<BitMatrix>> buckets(nchunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < std::int64_t(nchunks); ++c) {
    std::uint64_t lo = std::uint64_t(c) * chunk;
    std::uint64_t hi = std::min(total, lo + chunk);
    for (std::uint64_t code = lo; code < hi; ++code) {
      BitMatrix m = decode(code, n);
      if (is_invertible(m) && preserves_form(a, b, m)) buckets[c].push_back(std::move(m));
    }
  }
  for (auto& bk : buckets)
    out.insert(out.end(), std::make_move_iterator(bk.begin()),
               std::make_move_iterator(bk.end()));
  return out;
}

}  // namespace qf2
