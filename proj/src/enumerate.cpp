#include "enumerate.hpp"

#include <algorithm>

namespace ww::enumerate {

using exact::IMat;
using exact::QMat;

namespace {

struct Ldl {
  QMat l;     // unit lower triangular
  QVec d;     // positive diagonal
  bool ok = false;
};

Ldl ldl_decompose(const QMat& h) {
  size_t n = h.rows;
  Ldl r;
  r.l = exact::qmat_identity(n);
  r.d.assign(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    Rat di = h(i, i);
    for (size_t t = 0; t < i; ++t) di -= r.l(i, t) * r.l(i, t) * r.d[t];
    if (di <= 0) return r;  // not positive definite
    r.d[i] = di;
    for (size_t j = i + 1; j < n; ++j) {
      Rat v = h(j, i);
      for (size_t t = 0; t < i; ++t) v -= r.l(j, t) * r.l(i, t) * r.d[t];
      r.l(j, i) = v / di;
    }
  }
  r.ok = true;
  return r;
}

// integer range of u with d (u + o)^2 <= rem;  o rational, d > 0, rem >= 0
void level_range(const Rat& o, const Rat& d, const Rat& rem, Int& u_lo, Int& u_hi) {
  // (u + a/b)^2 <= rem/d  <=>  z = b u + a,  z^2 <= rem b^2 / d
  const Int& a = o.get_num();
  const Int& b = o.get_den();
  Rat bound = rem / d * Rat(b * b);
  Int m = isqrt(rat_floor(bound));
  u_lo = rat_ceil(Rat(-m - a, b));
  u_hi = rat_floor(Rat(m - a, b));
}

}  // namespace

void enum_core(const QMat& h, const QVec& c, const Rat& lo, const Rat& hi,
               const std::function<void(const IVec&)>& sink) {
  size_t n = h.rows;
  if (n == 0) {
    if (lo <= 0 && 0 <= hi) sink(IVec{});
    return;
  }
  if (hi < 0) return;
  Ldl f = ldl_decompose(h);
  require(f.ok, "enum_core: form not positive definite");

  // off[i][j] = sum_{t>i} L(t,j) * y_t, maintained per level for j <= i
  std::vector<QVec> off(n + 1, QVec(n, Rat(0)));
  IVec u(n, Int(0));
  QVec y(n, Rat(0));
  QVec rem(n + 1, Rat(0));  // rem[i] = hi - contribution of levels > i
  rem[n - 1] = hi;

  // iterative depth-first descent, level i from n-1 down to 0
  struct Frame {
    Int cur, last;
    bool active = false;
  };
  std::vector<Frame> fr(n);

  size_t i = n - 1;
  // off[n-1] is all zeros already
  auto enter_level = [&](size_t lvl) {
    Rat o = c[lvl] + off[lvl][lvl];
    Int a, b;
    level_range(o, f.d[lvl], rem[lvl], a, b);
    fr[lvl].cur = a;
    fr[lvl].last = b;
    fr[lvl].active = true;
  };
  enter_level(i);

  for (;;) {
    if (!fr[i].active || fr[i].cur > fr[i].last) {
      fr[i].active = false;
      if (i == n - 1) break;
      ++i;
      ++fr[i].cur;
      continue;
    }
    u[i] = fr[i].cur;
    y[i] = Rat(u[i]) + c[i];
    Rat v = y[i] + off[i][i];
    Rat used = f.d[i] * v * v;
    if (i == 0) {
      Rat total = hi - rem[0] + used;
      if (lo <= total && total <= hi) sink(u);
      ++fr[i].cur;
      continue;
    }
    // descend
    rem[i - 1] = rem[i] - used;
    for (size_t j = 0; j < i; ++j) off[i - 1][j] = off[i][j] + f.l(i, j) * y[i];
    --i;
    enter_level(i);
  }
}

AffineSliceEnum::AffineSliceEnum(QMat gram, std::vector<QVec> anchors)
    : gram_(std::move(gram)), anchors_(std::move(anchors)) {
  size_t n = gram_.rows;
  size_t m = anchors_.size();
  cons_ = IMat(n, m);
  scale_.assign(m, Int(1));
  for (size_t k = 0; k < m; ++k) {
    QVec col = exact::mul_row(anchors_[k], gram_);  // row times symmetric gram
    Int l = lcm_denominators(col);
    scale_[k] = l;
    for (size_t i = 0; i < n; ++i) cons_(i, k) = col[i].get_num() * (l / col[i].get_den());
  }
  kernel_ = m == 0 ? exact::imat_identity(n) : exact::int_left_kernel(cons_);
  // slice form on the kernel
  QMat kq = exact::to_qmat(kernel_);
  h_ = exact::mul(exact::mul(kq, gram_), exact::transpose(kq));
  if (h_.rows == 0) {
    definite_ = true;
    return;
  }
  Ldl probe = ldl_decompose(h_);
  if (probe.ok) {
    definite_ = true;
  } else {
    QMat neg = h_;
    for (auto& x : neg.a) x = -x;
    if (ldl_decompose(neg).ok) {
      definite_ = true;
      negated_ = true;
      h_ = std::move(neg);
    }
  }
}

std::vector<QVec> AffineSliceEnum::run(const QVec& offset, const std::vector<Rat>& values,
                                       const Rat& norm_lo, const Rat& norm_hi) const {
  require(definite_, "enum slice is not definite");
  size_t n = gram_.rows;
  size_t m = anchors_.size();
  std::vector<QVec> out;

  // solve z * cons = b over the integers
  IVec b(m);
  for (size_t k = 0; k < m; ++k) {
    Rat dot = 0;
    QVec col = exact::mul_row(anchors_[k], gram_);
    for (size_t i = 0; i < n; ++i) dot += offset[i] * col[i];
    Rat rhs = (values[k] - dot) * Rat(scale_[k]);
    if (rhs.get_den() != 1) return out;  // no integral solutions on this slice
    b[k] = rhs.get_num();
  }

  QVec start = offset;
  if (m > 0) {
    auto z0 = exact::int_solve_left(cons_, b);
    if (!z0.has_value()) return out;
    for (size_t i = 0; i < n; ++i) start[i] += Rat((*z0)[i]);
  }

  // x = start + y * kernel;  q(x) = (y + c) H (y + c)^T + const
  size_t k = kernel_.rows;
  QVec gx = exact::mul_row(start, gram_);
  Rat base = 0;
  for (size_t i = 0; i < n; ++i) base += start[i] * gx[i];

  QVec rhsv(k, Rat(0));
  for (size_t i = 0; i < k; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < n; ++j) s += Rat(kernel_(i, j)) * gx[j];
    rhsv[i] = negated_ ? -s : s;
  }
  QVec c(k, Rat(0));
  if (k > 0) {
    QMat hm = h_;
    auto sol = exact::solve_right(hm, rhsv);
    require(sol.has_value(), "definite form is invertible");
    c = sol->particular;
  }
  Rat corr = 0;
  for (size_t i = 0; i < k; ++i) corr += c[i] * rhsv[i];
  // q(x) = base + 2 y.rhs + y H y (after sign fold) ... with v = y + c:
  // s(v) = v H v^T,  q(x) = +-(s(v) - c H c^T) + base
  Rat chc = 0;
  for (size_t i = 0; i < k; ++i) {
    Rat row = 0;
    for (size_t j = 0; j < k; ++j) row += h_(i, j) * c[j];
    chc += c[i] * row;
  }
  Rat lo = norm_lo - base, hi = norm_hi - base;
  if (negated_) {
    std::swap(lo, hi);
    lo = -lo;
    hi = -hi;
  }
  lo += chc;
  hi += chc;

  enum_core(h_, c, lo, hi, [&](const IVec& y) {
    QVec x = start;
    for (size_t i = 0; i < k; ++i)
      if (y[i] != 0)
        for (size_t j = 0; j < n; ++j) x[j] += Rat(y[i]) * Rat(kernel_(i, j));
    out.push_back(std::move(x));
  });
  sort_canonical(out);
  return out;
}

void sort_canonical(std::vector<QVec>& vs) { std::sort(vs.begin(), vs.end(), QVecLess{}); }

std::vector<QVec> enum_norm_pairing(const Lattice& l, const QVec& v0, const Rat& a, const Rat& b,
                                    bool dual) {
  require(lat::norm_of(l, v0) > 0, "anchor not in the positive cone");
  if (!l.cone_witness.empty())
    require(lat::pairing(l, v0, l.cone_witness) > 0, "anchor not in the positive cone");
  if (l.even && !dual && a.get_den() == 1 && a.get_num() % 2 != 0) return {};
  QMat g = dual ? l.gram_inv : exact::to_qmat(l.gram);
  // in dual coordinates the anchor pairing rows change basis: represent the
  // anchor in the same coordinates as the enumerated vectors
  QVec anchor = v0;
  if (dual) anchor = exact::mul_row(v0, l.gram);  // <y G^-1 , v0>_dual-coords matches <x, v0>
  AffineSliceEnum e(g, {anchor});
  auto res = e.run(QVec(l.rank, Rat(0)), {b}, a, a);
  if (dual) {
    for (auto& y : res) y = exact::mul_row(y, l.gram_inv);
  }
  sort_canonical(res);
  return res;
}

std::vector<QVec> enum_separating(const Lattice& l, const QVec& v0, const QVec& v1, const Rat& a) {
  require(a < 0, "separating norm must be negative");
  require(lat::norm_of(l, v0) > 0 && lat::norm_of(l, v1) > 0, "anchors not in the positive cone");
  require(lat::pairing(l, v0, v1) > 0, "anchors not in a common positive cone");

  // integral primitive anchors give integer pairing grids
  QVec p0 = to_qvec(primitive_scale(v0));
  QVec p1 = to_qvec(primitive_scale(v1));
  Rat n0 = lat::norm_of(l, p0), n1 = lat::norm_of(l, p1);
  Rat c01 = lat::pairing(l, p0, p1);
  Rat det2 = n0 * n1 - c01 * c01;
  if (det2 == 0) return {};  // proportional anchors: nothing can separate
  require(det2 < 0, "anchors must span a hyperbolic plane");

  // <v,p0> = s > 0, <v,p1> = -u < 0; plane part of the norm must be >= a:
  // n1 s^2 + 2 c01 s u + n0 u^2 <= a * det2 =: bound
  Rat bound = a * det2;
  AffineSliceEnum e(exact::to_qmat(l.gram), {p0, p1});
  std::vector<QVec> out;
  Int s_max = isqrt(rat_floor(bound / n1));
  for (Int s = 1; s <= s_max; ++s) {
    // n0 u^2 + 2 c01 s u + (n1 s^2 - bound) <= 0
    Rat disc = c01 * c01 * Rat(s * s) - n0 * (n1 * Rat(s * s) - bound);
    if (disc < 0) continue;
    // u in [1, (-2 c01 s + 2 sqrt(disc)) / (2 n0)]
    Int u_max = rat_floor((Rat(-c01 * Rat(s)) + Rat(isqrt(rat_floor(disc)))) / n0);
    // exact endpoint correction for the floor(sqrt) approximation
    while (u_max >= 1 &&
           n0 * Rat(u_max * u_max) + 2 * c01 * Rat(s) * Rat(u_max) + n1 * Rat(s * s) > bound)
      --u_max;
    while (n0 * Rat((u_max + 1) * (u_max + 1)) + 2 * c01 * Rat(s) * Rat(u_max + 1) +
               n1 * Rat(s * s) <=
           bound)
      ++u_max;
    for (Int u = 1; u <= u_max; ++u) {
      auto part = e.run(QVec(l.rank, Rat(0)), {Rat(s), Rat(-u)}, a, a);
      for (auto& v : part) out.push_back(std::move(v));
    }
  }
  sort_canonical(out);
  return out;
}

std::vector<QVec> enum_negdef_range(const Lattice& l, const Rat& lo, const Rat& hi, bool dual) {
  require(lat::is_negative_definite(l), "lattice must be negative definite");
  QMat g = dual ? l.gram_inv : exact::to_qmat(l.gram);
  AffineSliceEnum e(g, {});
  auto res = e.run(QVec(l.rank, Rat(0)), {}, lo, hi);
  if (dual)
    for (auto& y : res) y = exact::mul_row(y, l.gram_inv);
  sort_canonical(res);
  return res;
}

std::vector<QVec> enum_negdef(const Lattice& l, const Rat& a, bool dual) {
  return enum_negdef_range(l, a, a, dual);
}

size_t count_negdef(const Lattice& l, const Rat& a) {
  require(lat::is_negative_definite(l), "lattice must be negative definite");
  QMat g = exact::to_qmat(l.gram);
  QMat neg = g;
  for (auto& x : neg.a) x = -x;
  size_t count = 0;
  enum_core(neg, QVec(l.rank, Rat(0)), -a, -a, [&](const IVec&) { ++count; });
  return count;
}

}  // namespace ww::enumerate
