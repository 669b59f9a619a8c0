#include "qf2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "qf2/isometry.hpp"

namespace qf2 {
namespace {

CaseResult make_case(std::string name, std::string expected, std::string actual) {
  bool ok = expected == actual;
  return {std::move(name), std::move(expected), std::move(actual), ok};
}

std::string count_str(long long bad, long long total) {
  return std::to_string(bad) + " failures of " + std::to_string(total);
}
std::string zero_str(long long total) { return count_str(0, total); }

// ---------------------------------------------------------------- models

QuadSpace h0() { return standard_h0(); }
QuadSpace h1() { return standard_h1(); }
QuadSpace x0() { return standard_point(false); }
QuadSpace x1() { return standard_point(true); }

QuadSpace sum_of(std::initializer_list<QuadSpace> blocks) {
  QuadSpace s;
  for (const QuadSpace& b : blocks) s = orthogonal_sum(s, b);
  return s;
}

// One model per isometry class of dimension <= maxdim (maxdim <= 3 here).
std::vector<QuadSpace> model_classes(int maxdim) {
  std::vector<QuadSpace> all = {
      sum_of({}),
      x0(), x1(),
      h0(), h1(), sum_of({x0(), x0()}), sum_of({x0(), x1()}),
      sum_of({h0(), x0()}), sum_of({h1(), x0()}), sum_of({h0(), x1()}),
      sum_of({x0(), x0(), x0()}), sum_of({x0(), x0(), x1()}),
  };
  std::vector<QuadSpace> out;
  for (QuadSpace& s : all)
    if (s.dim <= maxdim) out.push_back(std::move(s));
  return out;
}

// ------------------------------------------------------------ randomness

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

BitMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  BitMatrix m(r, c);
  for (int i = 0; i < r; ++i) m.row[i] = rng() & low_mask(c);
  return m;
}

BitMatrix random_invertible(std::mt19937_64& rng, int dim) {
  for (;;) {
    BitMatrix m = random_matrix(rng, dim, dim);
    if (is_invertible(m)) return m;
  }
}

// Non-degenerate space of the requested dimension with a random Arf class.
QuadSpace random_nondeg(std::mt19937_64& rng, int dim) {
  QuadSpace s;
  for (int d = 0; d < dim; d += 2)
    s = orthogonal_sum(s, (rng() & 1) ? h1() : h0());
  return s;
}

// ---------------------------------------------------------- suites 1..3

std::vector<CaseResult> suite_classification(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 1000);
  const int trials = 200;
  long long bad = 0;
  for (int t = 0; t < trials; ++t) {
    int dim = int(rng() % 5);
    QuadSpace a = random_space(rng, dim);
    QuadSpace b;
    if (rng() & 1) {
      // change of basis: guaranteed isometric, exercises the equal branch
      BitMatrix r = random_invertible(rng, dim);
      std::vector<BitVec> rows;
      for (int i = 0; i < dim; ++i) rows.push_back(r.row_vec(i));
      b = induced_space(a, rows);
    } else {
      b = random_space(rng, dim);
    }
    bool by_class = iso_class(a) == iso_class(b);
    bool by_search = is_isometric_bruteforce(a, b, opt.exec);
    if (by_class != by_search) ++bad;
  }
  return {make_case("classifier-agrees-with-matrix-search", zero_str(trials),
                    count_str(bad, trials))};
}

std::vector<CaseResult> suite_arf(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  for (int m = 1; m <= 3; ++m) {
    QuadSpace plus;
    for (int i = 0; i < m; ++i) plus = orthogonal_sum(plus, h0());
    QuadSpace minus = h1();
    for (int i = 1; i < m; ++i) minus = orthogonal_sum(minus, h0());
    cases.push_back(make_case("arf-h0-sum-" + std::to_string(m), "0",
                              std::to_string(int(arf(plus)))));
    cases.push_back(make_case("arf-h1-block-" + std::to_string(m), "1",
                              std::to_string(int(arf(minus)))));
  }
  QuadSpace a00 = sum_of({h0(), h0()}), a11 = sum_of({h1(), h1()});
  cases.push_back(make_case("h0h0-isometric-h1h1", "true",
                            is_isometric_bruteforce(a00, a11, opt.exec) ? "true" : "false"));
  cases.push_back(make_case("h0-not-isometric-h1", "false",
                            is_isometric_bruteforce(h0(), h1(), opt.exec) ? "true" : "false"));
  cases.push_back(make_case("classifier-separates-planes", "true",
                            iso_class(h0()) == iso_class(h1()) ? "false" : "true"));
  return cases;
}

std::vector<CaseResult> suite_radical(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  for (int r = 1; r <= 2; ++r) {
    QuadSpace pad0, pad1;
    for (int i = 0; i < r; ++i) {
      pad0 = orthogonal_sum(pad0, x0());
      pad1 = orthogonal_sum(pad1, x1());
    }
    QuadSpace a = orthogonal_sum(h0(), pad0), b = orthogonal_sum(h1(), pad0);
    QuadSpace c = orthogonal_sum(h0(), pad1), d = orthogonal_sum(h1(), pad1);
    std::string tag = std::to_string(r);
    cases.push_back(make_case("q0-radical-separates-" + tag, "distinct",
                              iso_class(a) == iso_class(b) ? "merged" : "distinct"));
    cases.push_back(make_case("q0-radical-search-" + tag, "false",
                              is_isometric_bruteforce(a, b, opt.exec) ? "true" : "false"));
    cases.push_back(make_case("q1-radical-merges-" + tag, "merged",
                              iso_class(c) == iso_class(d) ? "merged" : "distinct"));
    cases.push_back(make_case("q1-radical-search-" + tag, "true",
                              is_isometric_bruteforce(c, d, opt.exec) ? "true" : "false"));
  }
  return cases;
}

// --------------------------------------------------------------- suite 4

std::vector<CaseResult> suite_pushout(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 4000);
  const int trials = 50;

  // v plus fresh blocks, dimension capped at 4: Hom(v, result) is nonempty.
  auto grow = [&](const QuadSpace& v) {
    QuadSpace w = v;
    while (w.dim < 4 && (rng() & 1)) w = orthogonal_sum(w, (rng() & 1) ? h1() : h0());
    return w;
  };

  long long unit_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadSpace v = random_nondeg(rng, 2 * int(rng() % 3));
    QuadSpace w = grow(v);
    QuadMap f = *random_hom(v, w, rng);
    if (!(iso_class(pseudo_pushout(f, QuadMap::id(v)).total) == iso_class(w)))
      ++unit_bad;
  }

  long long sym_bad = 0, square_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadSpace v = random_nondeg(rng, 2 * int(rng() % 3));
    QuadMap f = *random_hom(v, grow(v), rng);
    QuadMap g = *random_hom(v, grow(v), rng);
    PseudoPushout ab = pseudo_pushout(f, g);
    PseudoPushout ba = pseudo_pushout(g, f);
    if (!(iso_class(ab.total) == iso_class(ba.total))) ++sym_bad;
    if (!(compose(ab.incl_w, f) == compose(ab.incl_x, g))) ++square_bad;
  }

  long long assoc_bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadSpace v = random_nondeg(rng, 2 * int(rng() % 3));
    QuadMap f = *random_hom(v, grow(v), rng);
    QuadMap g = *random_hom(v, grow(v), rng);
    QuadMap h = *random_hom(v, grow(v), rng);
    PseudoPushout fg = pseudo_pushout(f, g);
    PseudoPushout gh = pseudo_pushout(g, h);
    QuadSpace left = pseudo_pushout(compose(fg.incl_w, f), h).total;
    QuadSpace right = pseudo_pushout(f, compose(gh.incl_w, g)).total;
    if (!(iso_class(left) == iso_class(right))) ++assoc_bad;
  }

  return {
      make_case("unit-law", zero_str(trials), count_str(unit_bad, trials)),
      make_case("symmetry-law", zero_str(trials), count_str(sym_bad, trials)),
      make_case("commuting-square", zero_str(trials), count_str(square_bad, trials)),
      make_case("associativity-law", zero_str(trials), count_str(assoc_bad, trials)),
  };
}

// --------------------------------------------------------------- suite 5

std::vector<CaseResult> suite_retraction(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed + 5000);
  std::vector<QuadSpace> objs = {sum_of({}), h0(), h1(), sum_of({h0(), h0()}),
                                 sum_of({h1(), h0()})};
  std::vector<CaseResult> cases;
  const int per_pair = 8;
  for (const QuadSpace& v : objs)
    for (const QuadSpace& w : objs) {
      if (!random_hom(v, w, rng)) continue;  // empty hom set: nothing to retract
      int good = 0;
      for (int t = 0; t < per_pair; ++t) {
        QuadMap f = *random_hom(v, w, rng);
        Cospan tf(v, w, w, f, QuadMap::id(w));
        Cospan round = compose_cospans(tf, transpose_cospan(tf));
        if (cospan_equiv(round, Cospan::id(v)) == EquivVerdict::equivalent) ++good;
      }
      cases.push_back(make_case(
          "retract-" + iso_class(v).str() + "-via-" + iso_class(w).str(),
          "equivalent x" + std::to_string(per_pair),
          "equivalent x" + std::to_string(good)));
    }
  return cases;
}

// --------------------------------------------------------------- suite 6

std::vector<CaseResult> suite_epsilon(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  for (const QuadSpace& w : {h0(), h1()}) {
    long long bad = 0, total = 0;
    for (std::uint64_t code = 0; code < 16; ++code) {
      BitMatrix f(2, 2);
      f.row[0] = code & 3;
      f.row[1] = (code >> 2) & 3;
      ++total;
      if (!(epsilon(epsilon_lift(f, h0(), w)) == f)) ++bad;
    }
    cases.push_back(make_case("all-linear-maps-h0-to-" + iso_class(w).str(),
                              zero_str(total), count_str(bad, total)));
  }
  std::mt19937_64 rng(opt.seed + 6000);
  const int trials = 200;
  long long bad = 0;
  for (int t = 0; t < trials; ++t) {
    QuadSpace v = random_nondeg(rng, 4), w = random_nondeg(rng, 4);
    BitMatrix f = random_matrix(rng, 4, 4);
    if (!(epsilon(epsilon_lift(f, v, w)) == f)) ++bad;
  }
  cases.push_back(
      make_case("random-linear-maps-dim-4", zero_str(trials), count_str(bad, trials)));
  return cases;
}

// --------------------------------------------------------------- suite 7

std::vector<CaseResult> suite_sigma(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  std::vector<QuadSpace> ends = {h0(), h1()};
  std::vector<QuadSpace> apexes = {h0(), h1(), sum_of({h0(), h0()}),
                                   sum_of({h1(), h0()})};
  const int ne = 2, nx = int(apexes.size());

  // homs[e][x]: every morphism ends[e] -> apexes[x]
  std::vector<std::vector<std::vector<QuadMap>>> homs(ne);
  for (int e = 0; e < ne; ++e)
    for (int x = 0; x < nx; ++x)
      homs[e].push_back(enumerate_homs(ends[e], apexes[x], opt.exec));

  // span ids per end pair, and the composition table between them
  std::vector<std::vector<std::vector<SpanMorphism>>> spans(ne);
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b)
      spans[a].push_back(enumerate_span_homs(ends[a], ends[b], opt.exec));
  auto span_id = [&](int a, int b, const Subspace& rel) {
    const auto& list = spans[a][b];
    for (int i = 0; i < int(list.size()); ++i)
      if (list[i].rel == rel) return i;
    throw std::logic_error("fibre product is not a span");
  };

  // sig[a][b][x][fi * |homs[b][x]| + gi]: span id of the fibre product of
  // the cospan with legs homs[a][x][fi], homs[b][x][gi]
  std::vector<int> sig[2][2][4];
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b)
      for (int x = 0; x < nx; ++x) {
        auto& table = sig[a][b][x];
        for (const QuadMap& f : homs[a][x])
          for (const QuadMap& g : homs[b][x])
            table.push_back(span_id(a, b, kernel(hconcat(f.mat, g.mat))));
      }

  // composition table comp[a][b][c][i * stride + j] =
  //   (spans[a][b][i] then spans[b][c][j]).rel
  std::vector<Subspace> comp[2][2][2];
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b)
      for (int c = 0; c < ne; ++c) {
        auto& table = comp[a][b][c];
        table.reserve(spans[a][b].size() * spans[b][c].size());
        for (const SpanMorphism& s1 : spans[a][b])
          for (const SpanMorphism& s2 : spans[b][c])
            table.push_back(compose_spans(s1, s2).rel);
      }

  // Exhaustive composition law. The composite's sigma only needs the glued
  // legs, so the pseudo push-out is hoisted out over (g1, f2); the values
  // match what compose_cospans followed by sigma produces bit for bit, and
  // a random sample below re-checks that through the plain interface.
  long long total = 0, bad = 0;
  for (int wi = 0; wi < ne; ++wi)
    for (int X1 = 0; X1 < nx; ++X1)
      for (int ig1 = 0; ig1 < int(homs[wi][X1].size()); ++ig1)
        for (int X2 = 0; X2 < nx; ++X2)
          for (int if2 = 0; if2 < int(homs[wi][X2].size()); ++if2) {
            PseudoPushout pp =
                pseudo_pushout(homs[wi][X1][ig1], homs[wi][X2][if2]);
            // right halves of the composite legs, shared across (vi, if1)
            std::vector<std::vector<BitMatrix>> rms(ne);
            for (int yi = 0; yi < ne; ++yi)
              for (const QuadMap& g2 : homs[yi][X2])
                rms[yi].push_back(pp.incl_x.mat * g2.mat);
            for (int vi = 0; vi < ne; ++vi)
              for (int if1 = 0; if1 < int(homs[vi][X1].size()); ++if1) {
                BitMatrix lm = pp.incl_w.mat * homs[vi][X1][if1].mat;
                int id1 = sig[vi][wi][X1][if1 * int(homs[wi][X1].size()) + ig1];
                for (int yi = 0; yi < ne; ++yi) {
                  const auto& table = comp[vi][wi][yi];
                  const int stride = int(spans[wi][yi].size());
                  const int g2n = int(homs[yi][X2].size());
                  for (int ig2 = 0; ig2 < g2n; ++ig2) {
                    Subspace got = kernel(hconcat(lm, rms[yi][ig2]));
                    int id2 = sig[wi][yi][X2][if2 * g2n + ig2];
                    ++total;
                    if (!(got == table[id1 * stride + id2])) ++bad;
                  }
                }
              }
          }
  cases.push_back(make_case("composition-law-exhaustive", zero_str(total),
                            count_str(bad, total)));

  // Random re-check of the same law through compose_cospans itself.
  std::mt19937_64 rng(opt.seed + 7000);
  const int sample = 2000;
  long long api_bad = 0;
  for (int t = 0; t < sample; ++t) {
    int vi = int(rng() % ne), wi = int(rng() % ne), yi = int(rng() % ne);
    int X1 = int(rng() % nx), X2 = int(rng() % nx);
    const auto& f1s = homs[vi][X1];
    const auto& g1s = homs[wi][X1];
    const auto& f2s = homs[wi][X2];
    const auto& g2s = homs[yi][X2];
    if (f1s.empty() || g1s.empty() || f2s.empty() || g2s.empty()) continue;
    Cospan t1(ends[vi], ends[wi], apexes[X1], f1s[rng() % f1s.size()],
              g1s[rng() % g1s.size()], false);
    Cospan t2(ends[wi], ends[yi], apexes[X2], f2s[rng() % f2s.size()],
              g2s[rng() % g2s.size()], false);
    SpanMorphism lhs = sigma(compose_cospans(t1, t2));
    SpanMorphism rhs = compose_spans(sigma(t1), sigma(t2));
    if (!(lhs == rhs)) ++api_bad;
  }
  cases.push_back(make_case("composition-law-direct-interface",
                            zero_str(sample), count_str(api_bad, sample)));

  // Exhaustive lift round-trip: sigma o sigma_lift is the identity on spans.
  for (int a = 0; a < ne; ++a)
    for (int b = 0; b < ne; ++b) {
      long long lift_bad = 0, lift_total = 0;
      for (const SpanMorphism& s : spans[a][b]) {
        ++lift_total;
        if (!(sigma(sigma_lift(s)) == s)) ++lift_bad;
      }
      cases.push_back(make_case(
          "lift-round-trip-" + iso_class(ends[a]).str() + "-" + iso_class(ends[b]).str(),
          zero_str(lift_total), count_str(lift_bad, lift_total)));
    }
  return cases;
}

// --------------------------------------------------------------- suite 8

std::vector<CaseResult> suite_idempotents(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  for (const QuadSpace& v : {x0(), x1(), h0(), h1()}) {
    std::vector<SpanMorphism> found = enumerate_idempotents(v, opt.exec, opt.span_bound);
    std::vector<SpanMorphism> expected_list;
    std::vector<Subspace> subs = enumerate_subspaces(v.dim, opt.span_bound);
    for (const Subspace& a : subs) expected_list.push_back(e_alpha(v, a));
    std::sort(found.begin(), found.end());
    std::sort(expected_list.begin(), expected_list.end());
    std::string tag = iso_class(v).str();
    cases.push_back(make_case("idempotents-are-diagonals-" + tag,
                              std::to_string(expected_list.size()) + " and equal",
                              std::to_string(found.size()) +
                                  (found == expected_list ? " and equal" : " and different")));
    long long bad = 0, total = 0;
    for (const Subspace& a : subs)
      for (const Subspace& b : subs) {
        SpanMorphism ab = compose_spans(e_alpha(v, a), e_alpha(v, b));
        SpanMorphism ba = compose_spans(e_alpha(v, b), e_alpha(v, a));
        SpanMorphism meet = e_alpha(v, intersect(a, b));
        ++total;
        if (!(ab == meet) || !(ba == meet)) ++bad;
      }
    cases.push_back(make_case("diagonal-products-meet-" + tag, zero_str(total),
                              count_str(bad, total)));
  }
  return cases;
}

// --------------------------------------------------------------- suite 9

std::vector<CaseResult> suite_decomposition(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  std::vector<QuadSpace> vs = model_classes(2);
  std::vector<QuadSpace> xs = model_classes(3);
  for (const QuadSpace& v : vs) {
    std::string tag = iso_class(v).str();
    AlgebraElement ev = top_idempotent(v, opt.span_bound);
    cases.push_back(make_case("top-idempotent-squares-" + tag, "idempotent",
                              alg_mul(ev, ev) == ev ? "idempotent" : "not idempotent"));

    std::vector<Subspace> subs = enumerate_subspaces(v.dim, opt.span_bound);
    AlgebraElement total_sum = alg_zero(v);
    for (const Subspace& a : subs)
      total_sum = alg_add(total_sum, orthogonal_idempotent(v, a, opt.span_bound));
    cases.push_back(make_case("orthogonal-family-sums-to-one-" + tag, "one",
                              total_sum == alg_one(v) ? "one" : "other"));

    AlgebraElement ev_complement = alg_add(alg_one(v), ev);
    long long rank_bad = 0, count_bad = 0, summand_bad = 0, grid = 0;
    for (const QuadSpace& x : xs) {
      ++grid;
      FunctorValue q = eval_functor(FunctorId::linearization, v, x, opt.exec,
                                    opt.span_bound);
      int full = 0;
      for (const SpanMorphism& s : q.basis)
        if (s.rel.dim() == v.dim) ++full;
      int small = int(q.basis.size()) - full;
      if (rank(module_action(q, ev)) != full) ++rank_bad;
      if (rank(module_action(q, ev_complement)) != small) ++rank_bad;

      int total_dim = 0;
      for (const Subspace& a : subs) {
        QuadSpace a_ind = induced_space(v, a.basis());
        int iso_dim = int(
            eval_functor(FunctorId::iso, a_ind, x, opt.exec, opt.span_bound)
                .basis.size());
        total_dim += iso_dim;
        if (rank(module_action(q, orthogonal_idempotent(v, a, opt.span_bound))) !=
            iso_dim)
          ++summand_bad;
      }
      if (total_dim != int(q.basis.size())) ++count_bad;
    }
    cases.push_back(make_case("quotient-and-kernel-ranks-" + tag, zero_str(2 * grid),
                              count_str(rank_bad, 2 * grid)));
    cases.push_back(make_case("summand-ranks-" + tag, zero_str(grid * int(subs.size())),
                              count_str(summand_bad, grid * int(subs.size()))));
    cases.push_back(make_case("dimension-count-" + tag, zero_str(grid),
                              count_str(count_bad, grid)));
  }
  return cases;
}

// -------------------------------------------------------------- suite 10

std::vector<CaseResult> suite_hom_iso(const VerifyOptions& opt) {
  std::vector<QuadSpace> objs = {sum_of({}), x0(), x1(), h0(), h1()};
  const int frozen[5] = {1, 1, 1, 2, 6};
  std::vector<CaseResult> cases;
  for (int i = 0; i < 5; ++i) {
    int group = int(orthogonal_group(objs[i], opt.exec).size());
    int diag = hom_iso_dim(objs[i], objs[i], opt.exec, opt.span_bound);
    std::string tag = iso_class(objs[i]).str();
    cases.push_back(make_case("diagonal-" + tag,
                              std::to_string(frozen[i]) + " = group order",
                              std::to_string(diag) +
                                  (diag == group ? " = group order" : " != group order")));
  }
  long long off_bad = 0, off_total = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      ++off_total;
      if (hom_iso_dim(objs[i], objs[j], opt.exec, opt.span_bound) != 0) ++off_bad;
    }
  cases.push_back(
      make_case("off-diagonal-zero", zero_str(off_total), count_str(off_bad, off_total)));
  return cases;
}

// -------------------------------------------------------------- suite 11

std::vector<CaseResult> suite_duality(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  for (const QuadSpace& v : {x0(), x1(), h0(), h1()}) {
    std::string tag = iso_class(v).str();
    BitMatrix m = duality_pairing_matrix(v, v, opt.exec, opt.span_bound);
    int iso_dim = int(
        eval_functor(FunctorId::iso, v, v, opt.exec, opt.span_bound).basis.size());
    cases.push_back(make_case("pairing-symmetric-" + tag, "symmetric",
                              m == m.transposed() ? "symmetric" : "asymmetric"));
    cases.push_back(make_case("pairing-rank-" + tag, std::to_string(iso_dim),
                              std::to_string(rank(m))));
  }
  return cases;
}

// -------------------------------------------------------------- suite 12

std::vector<CaseResult> suite_exactness(const VerifyOptions& opt) {
  std::vector<CaseResult> cases;
  for (const QuadSpace& v : model_classes(2)) {
    long long bad = 0, total = 0;
    for (const QuadSpace& x : model_classes(3)) {
      FunctorValue q = eval_functor(FunctorId::linearization, v, x, opt.exec,
                                    opt.span_bound);
      int full = 0;
      for (const SpanMorphism& s : q.basis)
        if (s.rel.dim() == v.dim) ++full;
      ++total;
      // the pairing's radical must be exactly the kernel subfunctor
      if (rank(duality_pairing_matrix(v, x, opt.exec, opt.span_bound)) != full) ++bad;
    }
    cases.push_back(make_case("pairing-radical-is-kernel-" + iso_class(v).str(),
                              zero_str(total), count_str(bad, total)));
  }
  return cases;
}

// ------------------------------------------------------------- registry

using SuiteFn = std::vector<CaseResult> (*)(const VerifyOptions&);
struct SuiteEntry {
  const char* name;
  SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"classification-oracle", suite_classification},
    {"arf-classification", suite_arf},
    {"radical-classification", suite_radical},
    {"pseudo-pushout-laws", suite_pushout},
    {"retraction-law", suite_retraction},
    {"epsilon-fullness", suite_epsilon},
    {"sigma-functor", suite_sigma},
    {"span-idempotents", suite_idempotents},
    {"projective-decomposition", suite_decomposition},
    {"hom-iso-matrix", suite_hom_iso},
    {"duality-pairing", suite_duality},
    {"iso-exactness", suite_exactness},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& e : kSuites) out.push_back(e.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  for (const SuiteEntry& e : kSuites) {
    if (name != e.name) continue;
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    r.suite = name;
    r.cases = e.fn(opt);
    r.passed = !r.cases.empty();
    for (const CaseResult& c : r.cases) r.passed = r.passed && c.passed;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all(const VerifyOptions& opt) {
  const auto& names = suite_names();
  const int n = int(names.size());
  std::vector<SuiteResult> out(n);
  // heaviest suite first so the pool stays busy; output order is fixed
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(),
                        [&](int i) { return names[i] == "sigma-functor"; });
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n; ++k) out[order[k]] = run_suite(names[order[k]], opt);
  return out;
}

}  // namespace qf2
