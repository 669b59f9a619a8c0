#include "qf2/homsearch.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qf2 {

namespace {

struct SearchState {
  std::vector<std::uint64_t> img;  // chosen images of e_0..e_{level-1}
  std::vector<std::uint64_t> red;  // echelon reducers of the images
};

// Candidate w as image of e_level: value, pairings against earlier images,
// independence. Appends the new reducer on success.
bool admit(const QuadSpace& dom, const QuadSpace& cod, SearchState& st, int level,
           std::uint64_t w) {
  BitVec wv(w, cod.dim);
  if (cod.eval_q(wv) != dom.diag.get(level)) return false;
  for (int j = 0; j < level; ++j)
    if (cod.eval_b(BitVec(st.img[j], cod.dim), wv) != dom.gram.get(j, level)) return false;
  std::uint64_t r = w;
  for (std::uint64_t rj : st.red) {
    std::uint64_t p = rj & (~rj + 1);
    if (r & p) r ^= rj;
  }
  if (r == 0) return false;
  st.img.push_back(w);
  st.red.push_back(r);
  return true;
}

void retract(SearchState& st) {
  st.img.pop_back();
  st.red.pop_back();
}

// Depth-first over images in increasing numeric order. Emit returns false to
// stop the whole search (existence queries).
template <class Emit>
bool search(const QuadSpace& dom, const QuadSpace& cod, SearchState& st, int level,
            Emit&& emit) {
  if (level == dom.dim) return emit(st.img);
  std::uint64_t space = std::uint64_t(1) << cod.dim;
  for (std::uint64_t w = 0; w < space; ++w) {
    if (!admit(dom, cod, st, level, w)) continue;
    bool keep = search(dom, cod, st, level + 1, emit);
    retract(st);
    if (!keep) return false;
  }
  return true;
}

QuadMap make_map(const QuadSpace& dom, const QuadSpace& cod,
                 const std::vector<std::uint64_t>& img) {
  BitMatrix m(cod.dim, dom.dim);
  for (int j = 0; j < dom.dim; ++j)
    for (int i = 0; i < cod.dim; ++i)
      if ((img[j] >> i) & 1) m.set(i, j, true);
  return QuadMap(dom, cod, m, false);
}

std::vector<QuadMap> enumerate_serial(const QuadSpace& dom, const QuadSpace& cod) {
  std::vector<QuadMap> out;
  SearchState st;
  search(dom, cod, st, 0, [&](const std::vector<std::uint64_t>& img) {
    out.push_back(make_map(dom, cod, img));
    return true;
  });
  return out;
}

std::vector<QuadMap> enumerate_parallel(const QuadSpace& dom, const QuadSpace& cod) {
  if (dom.dim == 0) return enumerate_serial(dom, cod);
  // Split on the image of e_0; each first-level candidate owns an ordered
  // bucket, so concatenation reproduces the serial order.
  std::uint64_t space = std::uint64_t(1) << cod.dim;
  std::vector<std::vector<QuadMap>> buckets(space);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t w0 = 0; w0 < std::int64_t(space); ++w0) {
    SearchState st;
    if (!admit(dom, cod, st, 0, std::uint64_t(w0))) continue;
    search(dom, cod, st, 1, [&](const std::vector<std::uint64_t>& img) {
      buckets[w0].push_back(make_map(dom, cod, img));
      return true;
    });
  }
  std::vector<QuadMap> out;
  for (auto& b : buckets) {
    out.insert(out.end(), std::make_move_iterator(b.begin()),
               std::make_move_iterator(b.end()));
  }
  return out;
}

}  // namespace

std::vector<QuadMap> enumerate_homs(const QuadSpace& dom, const QuadSpace& cod, Exec exec,
                                    int bound) {
  if (dom.dim > bound || cod.dim > bound)
    throw BoundError("hom enumeration bound exceeded");
  return exec == Exec::serial ? enumerate_serial(dom, cod) : enumerate_parallel(dom, cod);
}

std::vector<QuadMap> orthogonal_group(const QuadSpace& s, Exec exec, int bound) {
  // Every morphism s -> s is bijective (injective endomap), so Hom(s, s) is
  // already the isometry group.
  return enumerate_homs(s, s, exec, bound);
}

bool extension_exists(const QuadSpace& dom, const QuadSpace& cod,
                      const std::vector<BitVec>& prefix) {
  if (int(prefix.size()) > dom.dim) throw std::invalid_argument("prefix too long");
  SearchState st;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (prefix[k].len != cod.dim) throw std::invalid_argument("prefix vector dimension");
    if (!admit(dom, cod, st, int(k), prefix[k].bits)) return false;
  }
  bool found = false;
  search(dom, cod, st, int(prefix.size()), [&](const std::vector<std::uint64_t>&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<QuadMap> random_hom(const QuadSpace& dom, const QuadSpace& cod,
                                  std::mt19937_64& rng) {
  std::uint64_t space = std::uint64_t(1) << cod.dim;
  std::vector<std::uint64_t> order(space);
  std::iota(order.begin(), order.end(), 0);
  // One shared shuffled candidate order is enough randomness per draw.
  std::shuffle(order.begin(), order.end(), rng);
  SearchState st;
  std::optional<QuadMap> out;
  auto rec = [&](auto&& self, int level) -> bool {
    if (level == dom.dim) {
      out = make_map(dom, cod, st.img);
      return false;
    }
    for (std::uint64_t w : order) {
      if (!admit(dom, cod, st, level, w)) continue;
      bool keep = self(self, level + 1);
      retract(st);
      if (!keep) return false;
    }
    return true;
  };
  rec(rec, 0);
  return out;
}

}  // namespace qf2
