#include "qf2/lifts.hpp"

#include <algorithm>

namespace qf2 {

namespace {

BitVec unit(int i, int n) { return BitVec(std::uint64_t(1) << i, n); }

// Coordinates of v in the given ordered independent family.
BitVec coords_in(const std::vector<BitVec>& basis, const BitVec& v) {
  auto c = solve(BitMatrix::from_cols(basis, v.len), v);
  if (!c) throw std::logic_error("vector outside the spanning family");
  return *c;
}

}  // namespace

Cospan epsilon_lift(const BitMatrix& f, const QuadSpace& v, const QuadSpace& w,
                    bool shrink) {
  if (f.rows != w.dim || f.cols != v.dim) throw std::invalid_argument("matrix shape mismatch");
  if (!is_nondegenerate(v) || !is_nondegenerate(w))
    throw std::invalid_argument("epsilon lift needs non-degenerate ends");
  if (v.dim == 0) {
    Cospan t(v, w, w, QuadMap(v, w, BitMatrix(w.dim, 0), false), QuadMap::id(w), false);
    return shrink ? shrink_apex(t) : t;
  }

  auto pairs = symplectic_basis(v);
  int m = int(pairs.size());
  // Images of the symplectic basis split as (w-part, y-part); the y-part
  // lives in a growing auxiliary space Y.
  struct Img {
    BitVec wpart;
    BitVec ypart;
  };
  std::vector<Img> img;
  QuadSpace y;

  auto fa = [&](int i) { return f * pairs[i].first; };
  auto fb = [&](int i) { return f * pairs[i].second; };
  auto qdefect = [&](const BitVec& src, const BitVec& dst) {
    return int(v.eval_q(src)) ^ int(w.eval_q(dst));
  };

  // Base pattern for the first pair: Y = H1 perp H0 with basis
  // (A1, B1, C0, D0); the H1 vector absorbs the q defect, the H0 vector
  // makes the images independent and fixes the pairing.
  y = orthogonal_sum(standard_h1(), standard_h0());
  {
    BitVec ya(0, 4), yb(0, 4);
    if (qdefect(pairs[0].first, fa(0))) ya.set(0, true);
    ya.set(2, true);  // C0
    if (qdefect(pairs[0].second, fb(0))) yb.set(0, true);
    if (!w.eval_b(fa(0), fb(0))) yb.set(3, true);  // D0 unless the pairing already holds
    img.push_back({fa(0), ya});
    img.push_back({fb(0), yb});
  }

  for (int n = 1; n < m; ++n) {
    // Y grows by H0^n perp H0^n perp H1 perp H0; earlier images get one
    // marker each, the new pair gets the base pattern plus correction
    // markers recording its pairings against all earlier images.
    int old_dim = y.dim;
    QuadSpace grown = y;
    for (int i = 0; i < 2 * n; ++i) grown = orthogonal_sum(grown, standard_h0());
    grown = orthogonal_sum(grown, standard_h1());
    grown = orthogonal_sum(grown, standard_h0());
    int off1 = old_dim;            // (a0^i, b0^i)
    int off2 = old_dim + 2 * n;    // (A0^i, B0^i)
    int off3 = old_dim + 4 * n;    // (A1, B1)
    int off4 = off3 + 2;           // (C0, D0)
    y = grown;
    for (int i = 0; i < n; ++i) {
      img[2 * i].ypart = concat(img[2 * i].ypart, BitVec(0, y.dim - old_dim));
      img[2 * i].ypart.set(off1 + 2 * i, true);  // a0^i
      img[2 * i + 1].ypart = concat(img[2 * i + 1].ypart, BitVec(0, y.dim - old_dim));
      img[2 * i + 1].ypart.set(off2 + 2 * i, true);  // A0^i
    }
    BitVec ya(0, y.dim), yb(0, y.dim);
    if (qdefect(pairs[n].first, fa(n))) ya.set(off3, true);
    ya.set(off4, true);
    if (qdefect(pairs[n].second, fb(n))) yb.set(off3, true);
    if (!w.eval_b(fa(n), fb(n))) yb.set(off4 + 1, true);
    for (int i = 0; i < n; ++i) {
      if (w.eval_b(fa(i), fa(n))) ya.set(off1 + 2 * i + 1, true);  // b0^i
      if (w.eval_b(fb(i), fa(n))) ya.set(off2 + 2 * i + 1, true);  // B0^i
      if (w.eval_b(fa(i), fb(n))) yb.set(off1 + 2 * i + 1, true);
      if (w.eval_b(fb(i), fb(n))) yb.set(off2 + 2 * i + 1, true);
    }
    img.push_back({fa(n), ya});
    img.push_back({fb(n), yb});
  }

  QuadSpace apex = orthogonal_sum(w, y);
  std::vector<BitVec> g_cols, s_cols;
  for (int n = 0; n < m; ++n) {
    s_cols.push_back(pairs[n].first);
    s_cols.push_back(pairs[n].second);
  }
  for (const Img& im : img) g_cols.push_back(concat(im.wpart, BitVec(0, y.dim) + im.ypart));
  BitMatrix g_sym = BitMatrix::from_cols(g_cols, apex.dim);
  auto sinv = inverse(BitMatrix::from_cols(s_cols, v.dim));
  if (!sinv) throw std::logic_error("symplectic basis is not a basis");
  QuadMap left(v, apex, g_sym * *sinv);  // validated: injective and q-preserving
  BitMatrix incl(apex.dim, w.dim);
  for (int i = 0; i < w.dim; ++i) incl.set(i, i, true);
  Cospan t(v, w, apex, left, QuadMap(w, apex, incl, false), false);
  return shrink ? shrink_apex(t) : t;
}

Cospan shrink_apex(const Cospan& t) {
  // Smallest non-degenerate overspace of the joint leg image reachable by
  // greedy pairing-partner completion.
  std::vector<BitVec> gens = t.left.mat.columns();
  for (const BitVec& c : t.right.mat.columns()) gens.push_back(c);
  Subspace s = Subspace::from_spanning(gens, t.apex.dim);
  for (;;) {
    QuadSpace ind = induced_space(t.apex, s.basis());
    Subspace rad = radical(ind);
    if (rad.dim() == 0) break;
    // Lift a radical vector of the induced form back to the apex and pair it
    // with something outside; non-degeneracy of the apex provides a partner.
    BitVec r(0, t.apex.dim);
    {
      BitVec c = rad.basis()[0];
      auto basis = s.basis();
      for (int i = 0; i < c.len; ++i)
        if (c.get(i)) r = r + basis[i];
    }
    auto partner = solve(BitMatrix::from_rows({BitVec((t.apex.gram * r).bits, t.apex.dim)},
                                              t.apex.dim),
                         BitVec(1, 1));
    if (!partner) throw std::logic_error("non-degenerate apex lacks a pairing partner");
    auto vs = s.basis();
    vs.push_back(*partner);
    s = Subspace::from_spanning(vs, t.apex.dim);
  }
  if (s.dim() == t.apex.dim) return t;
  auto basis = s.basis();
  QuadSpace apex = induced_space(t.apex, basis);
  auto corestrict = [&](const QuadMap& leg) {
    std::vector<BitVec> cols;
    for (const BitVec& c : leg.mat.columns()) cols.push_back(coords_in(basis, c));
    return QuadMap(leg.dom, apex, BitMatrix::from_cols(cols, apex.dim), false);
  };
  return Cospan(t.dom, t.cod, apex, corestrict(t.left), corestrict(t.right), false);
}

DegenerateImageSplit degenerate_image_split(const QuadMap& f) {
  for (int i = 0; i < f.dom.dim; ++i)
    if (f.dom.gram.row[i] != 0)
      throw std::invalid_argument("domain must have zero polar form");
  if (!is_nondegenerate(f.cod)) throw std::invalid_argument("codomain must be non-degenerate");
  const QuadSpace& h = f.cod;
  DegenerateImageSplit out;
  std::vector<BitVec> images = f.mat.columns();
  std::vector<BitVec> residual;  // basis of the current residual space
  for (int i = 0; i < h.dim; ++i) residual.push_back(unit(i, h.dim));

  for (int n = 0; n < f.dom.dim; ++n) {
    // Expand f(x_n) over the processed planes and the residual; the plane
    // partner coefficients vanish because the domain pairings are zero.
    std::vector<BitVec> frame;
    for (int i = 0; i < n; ++i) {
      frame.push_back(images[i]);
      frame.push_back(out.partners[i]);
    }
    std::size_t frame_planes = frame.size();
    for (const BitVec& r : residual) frame.push_back(r);
    BitVec c = coords_in(frame, images[n]);
    BitVec resid_part(0, h.dim);
    for (std::size_t j = frame_planes; j < frame.size(); ++j)
      if (c.get(int(j))) resid_part = resid_part + frame[j];
    if (resid_part.is_zero()) throw std::logic_error("image escapes the residual");
    for (int i = 0; i < n; ++i)
      if (c.get(2 * i + 1)) throw std::logic_error("partner coefficient must vanish");

    // Partner for the residual part, searched inside the residual space:
    // first coefficient vector (in numeric order) with pairing 1.
    BitMatrix pairing_row(1, int(residual.size()));
    for (std::size_t j = 0; j < residual.size(); ++j)
      pairing_row.set(0, int(j), h.eval_b(resid_part, residual[j]));
    auto pc = solve(pairing_row, BitVec(1, 1));
    if (!pc) throw std::logic_error("residual space became degenerate");
    BitVec partner(0, h.dim);
    for (std::size_t j = 0; j < residual.size(); ++j)
      if (pc->get(int(j))) partner = partner + residual[j];

    // Correct the earlier partners whose plane absorbed part of f(x_n).
    for (int i = 0; i < n; ++i)
      if (c.get(2 * i)) out.partners[i] = out.partners[i] + partner;
    out.partners.push_back(partner);

    // New residual: orthogonal complement of (resid_part, partner) inside
    // the old residual span.
    BitMatrix constraints(2, int(residual.size()));
    for (std::size_t j = 0; j < residual.size(); ++j) {
      constraints.set(0, int(j), h.eval_b(resid_part, residual[j]));
      constraints.set(1, int(j), h.eval_b(partner, residual[j]));
    }
    std::vector<BitVec> next;
    for (const BitVec& cc : kernel(constraints).basis()) {
      BitVec vsum(0, h.dim);
      for (std::size_t j = 0; j < residual.size(); ++j)
        if (cc.get(int(j))) vsum = vsum + residual[j];
      next.push_back(vsum);
    }
    residual = std::move(next);
  }
  out.residual_basis = std::move(residual);
  return out;
}

namespace {

// Line data for one radical generator of the middle object.
struct Line {
  BitVec v_image, v_partner;  // plane basis inside V
  BitVec w_image, w_partner;  // plane basis inside W
  int v_class = 0, w_class = 0;
  bool eps = false;
};

// Isometry of a 2-dim plane (basis: image, partner) onto its model space
// (H0 or H1) sending the image to the model's prescribed vector, which the
// case data forces; only the partner's q value is free. Returns the images
// (model coordinates) of the plane basis.
std::pair<BitVec, BitVec> plane_normalizer(const QuadSpace& ambient,
                                           const BitVec& partner, bool eps, int cls) {
  QuadSpace model = cls ? standard_h1() : standard_h0();
  BitVec target = eps ? (cls ? BitVec(1, 2) : BitVec(3, 2)) : BitVec(1, 2);
  bool pq = ambient.eval_q(partner);
  for (std::uint64_t yy = 0; yy < 4; ++yy) {
    BitVec y(yy, 2);
    if (model.eval_b(target, y) && model.eval_q(y) == pq)
      return {target, y};
  }
  throw std::logic_error("plane has no normalizing isometry");
}

// Apex data of one table case: apex space, left leg from the V model, right
// leg from the W model. The five cases, normal forms of a rank-one span.
struct TableCase {
  QuadSpace apex;
  BitMatrix left, right;
};

TableCase table_case(bool eps, int v_class, int w_class) {
  auto cols = [](std::uint64_t c0, std::uint64_t c1) {
    return BitMatrix::from_cols({BitVec(c0, 4), BitVec(c1, 4)}, 4);
  };
  TableCase tc;
  if (!eps) {
    // [H0 <- (x,0) -> H0], image a0 on both sides
    tc.apex = orthogonal_sum(standard_h0(), standard_h0());
    tc.left = cols(0b0001, 0b0110);   // a0 -> a0, b0 -> b0 + a0'
    tc.right = cols(0b0001, 0b1010);  // a0 -> a0, b0 -> b0 + b0'
  } else if (v_class == 0 && w_class == 0) {
    // [H0 <- (x,1) -> H0], image a0+b0 (the only q=1 vector)
    tc.apex = orthogonal_sum(standard_h0(), standard_h0());
    tc.left = cols(0b0101, 0b0110);
    tc.right = cols(0b1001, 0b1010);
  } else if (v_class == 1 && w_class == 1) {
    // [H1 <- (x,1) -> H1], image a1 on both sides
    tc.apex = orthogonal_sum(standard_h1(), standard_h0());
    tc.left = cols(0b0001, 0b1010);
    tc.right = cols(0b0001, 0b0110);
  } else if (v_class == 0 && w_class == 1) {
    // [H0 <- (x,1) -> H1], images a0+b0 and a1
    tc.apex = orthogonal_sum(standard_h1(), standard_h0());
    tc.left = cols(0b1111, 0b1110);
    tc.right = cols(0b0001, 0b0010);
  } else {
    TableCase sw = table_case(eps, w_class, v_class);
    tc.apex = sw.apex;
    tc.left = sw.right;
    tc.right = sw.left;
  }
  return tc;
}

}  // namespace

Cospan sigma_lift(const SpanMorphism& s) {
  if (!is_nondegenerate(s.dom) || !is_nondegenerate(s.cod))
    throw std::invalid_argument("sigma lift needs non-degenerate ends");
  const QuadSpace& v = s.dom;
  const QuadSpace& w = s.cod;
  SpanLegs legs = span_legs(s);
  Decomposition dec = decompose(legs.middle);
  int two_m = int(dec.nondeg.size());
  int r = int(dec.rad.size());
  bool eps = dec.rad_type == 1;

  // Images of the middle's split basis under each leg.
  std::vector<BitVec> fh, gh, frad, grad;
  for (const BitVec& hk : dec.nondeg) {
    fh.push_back(legs.left(hk));
    gh.push_back(legs.right(hk));
  }
  for (const BitVec& xk : dec.rad) {
    frad.push_back(legs.left(xk));
    grad.push_back(legs.right(xk));
  }

  // One side's block data: plane partners for the radical images inside the
  // orthogonal complement of the shared part, plus the leftover block.
  struct Side {
    std::vector<BitVec> partners;  // ambient coordinates
    std::vector<BitVec> leftover;  // ambient coordinates
  };
  auto split_side = [&](const QuadSpace& amb, const std::vector<BitVec>& h_imgs,
                        const std::vector<BitVec>& rad_imgs) {
    // Complement of the span of the h-images.
    BitMatrix constraints(two_m, amb.dim);
    for (int i = 0; i < two_m; ++i) constraints.row[i] = (amb.gram * h_imgs[i]).bits;
    Subspace perp = kernel(constraints);
    auto pbasis = perp.basis();
    QuadSpace psp = induced_space(amb, pbasis);
    std::vector<BitVec> rad_coords;
    for (const BitVec& ri : rad_imgs) rad_coords.push_back(coords_in(pbasis, ri));
    QuadSpace dsp = induced_space(legs.middle, dec.rad);
    QuadMap fr(dsp, psp, BitMatrix::from_cols(rad_coords, psp.dim));
    DegenerateImageSplit sp = degenerate_image_split(fr);
    auto lift = [&](const BitVec& c) {
      BitVec out(0, amb.dim);
      for (int i = 0; i < c.len; ++i)
        if (c.get(i)) out = out + pbasis[i];
      return out;
    };
    Side side;
    for (const BitVec& k : sp.partners) side.partners.push_back(lift(k));
    for (const BitVec& res : sp.residual_basis) side.leftover.push_back(lift(res));
    return side;
  };
  Side vs = split_side(v, fh, frad);
  Side ws = split_side(w, gh, grad);

  std::vector<Line> lines(r);
  for (int i = 0; i < r; ++i) {
    Line& ln = lines[i];
    ln.eps = eps;
    ln.v_image = frad[i];
    ln.v_partner = vs.partners[i];
    ln.w_image = grad[i];
    ln.w_partner = ws.partners[i];
    ln.v_class = int(v.eval_q(ln.v_image)) & int(v.eval_q(ln.v_partner));
    ln.w_class = int(w.eval_q(ln.w_image)) & int(w.eval_q(ln.w_partner));
  }
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return std::pair(a.v_class, a.w_class) < std::pair(b.v_class, b.w_class);
  });

  // Shared part: both legs induce the same form on the symplectic basis of
  // the middle's non-degenerate part.
  QuadSpace h_blk = induced_space(v, fh);
  QuadSpace vleft_blk = induced_space(v, vs.leftover);
  QuadSpace wleft_blk = induced_space(w, ws.leftover);

  // Assemble T_std = identity on the shared part, disjoint part, one table
  // case per line, and the change-of-basis isometries into the block form.
  Cospan t_std(h_blk, h_blk, h_blk, QuadMap::id(h_blk), QuadMap::id(h_blk), false);
  {
    QuadSpace disj_apex = orthogonal_sum(vleft_blk, wleft_blk);
    BitMatrix li(disj_apex.dim, vleft_blk.dim), ri(disj_apex.dim, wleft_blk.dim);
    for (int i = 0; i < vleft_blk.dim; ++i) li.set(i, i, true);
    for (int i = 0; i < wleft_blk.dim; ++i) ri.set(vleft_blk.dim + i, i, true);
    Cospan disj(vleft_blk, wleft_blk, disj_apex, QuadMap(vleft_blk, disj_apex, li, false),
                QuadMap(wleft_blk, disj_apex, ri, false), false);
    t_std = cospan_orthogonal_sum(t_std, disj);
  }
  std::vector<std::pair<BitVec, BitVec>> v_norms, w_norms;
  for (const Line& ln : lines) {
    TableCase tc = table_case(ln.eps, ln.v_class, ln.w_class);
    QuadSpace mv = ln.v_class ? standard_h1() : standard_h0();
    QuadSpace mw = ln.w_class ? standard_h1() : standard_h0();
    Cospan piece(mv, mw, tc.apex, QuadMap(mv, tc.apex, tc.left, false),
                 QuadMap(mw, tc.apex, tc.right, false), false);
    t_std = cospan_orthogonal_sum(t_std, piece);
    v_norms.push_back(plane_normalizer(v, ln.v_partner, ln.eps, ln.v_class));
    w_norms.push_back(plane_normalizer(w, ln.w_partner, ln.eps, ln.w_class));
  }

  // phi maps each end onto its block coordinates: full basis in block order,
  // inverted, then the per-line normalizers applied inside their block.
  auto build_phi = [&](const QuadSpace& amb, const std::vector<BitVec>& h_imgs,
                       const std::vector<BitVec>& leftover, bool v_side) {
    std::vector<BitVec> basis = h_imgs;
    for (const BitVec& c : leftover) basis.push_back(c);
    for (const Line& ln : lines) {
      basis.push_back(v_side ? ln.v_image : ln.w_image);
      basis.push_back(v_side ? ln.v_partner : ln.w_partner);
    }
    auto binv = inverse(BitMatrix::from_cols(basis, amb.dim));
    if (!binv) throw std::logic_error("block basis is not a basis");
    BitMatrix norm = BitMatrix::identity(amb.dim);
    int off = two_m + int(leftover.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& [ti, tp] = v_side ? v_norms[i] : w_norms[i];
      norm.set(off, off, ti.get(0));
      norm.set(off + 1, off, ti.get(1));
      norm.set(off, off + 1, tp.get(0));
      norm.set(off + 1, off + 1, tp.get(1));
      off += 2;
    }
    return norm * *binv;
  };
  BitMatrix phi_v = build_phi(v, fh, vs.leftover, true);
  BitMatrix phi_w = build_phi(w, gh, ws.leftover, false);

  QuadMap left(v, t_std.apex, t_std.left.mat * phi_v);
  QuadMap right(w, t_std.apex, t_std.right.mat * phi_w);
  return Cospan(v, w, t_std.apex, left, right, false);
}

}  // namespace qf2
