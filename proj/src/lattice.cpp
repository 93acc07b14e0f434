#include "lattice.hpp"

namespace ww::lat {

using exact::to_qmat;

Lattice make_lattice(IMat gram, std::string name) {
  Lattice l;
  require(gram.rows == gram.cols, "gram not square");
  l.rank = gram.rows;
  for (size_t i = 0; i < l.rank; ++i)
    for (size_t j = 0; j < i; ++j) require(gram(i, j) == gram(j, i), "gram not symmetric");
  l.even = true;
  for (size_t i = 0; i < l.rank; ++i)
    if (gram(i, i) % 2 != 0) l.even = false;
  l.gram = std::move(gram);
  if (l.rank > 0) {
    require(det(l.gram) != 0, "degenerate gram");
    l.gram_inv = exact::inverse(to_qmat(l.gram));
  }
  l.name = std::move(name);
  return l;
}

Rat pairing(const Lattice& l, const QVec& x, const QVec& y) {
  require(x.size() == l.rank && y.size() == l.rank, "pairing: wrong length");
  Rat s = 0;
  for (size_t i = 0; i < l.rank; ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (size_t j = 0; j < l.rank; ++j)
      if (y[j] != 0) row += Rat(l.gram(i, j)) * y[j];
    s += x[i] * row;
  }
  return s;
}

Rat norm_of(const Lattice& l, const QVec& x) { return pairing(l, x, x); }

bool in_positive_cone(const Lattice& l, const QVec& x) {
  require(!l.cone_witness.empty(), "lattice has no positive-cone witness");
  return norm_of(l, x) > 0 && pairing(l, x, l.cone_witness) > 0;
}

bool in_positive_cone_closure(const Lattice& l, const QVec& x) {
  require(!l.cone_witness.empty(), "lattice has no positive-cone witness");
  return norm_of(l, x) >= 0 && pairing(l, x, l.cone_witness) > 0;
}

std::pair<int, int> signature(const Lattice& l) {
  // symmetric reduction over Q; congruence preserves signs of the diagonal
  QMat g = to_qmat(l.gram);
  size_t n = l.rank;
  int pos = 0, neg = 0;
  for (size_t k = 0; k < n; ++k) {
    if (g(k, k) == 0) {
      size_t d = n;
      for (size_t i = k + 1; i < n; ++i)
        if (g(i, i) != 0) {
          d = i;
          break;
        }
      if (d < n) {
        for (size_t j = 0; j < n; ++j) swap(g(k, j), g(d, j));
        for (size_t j = 0; j < n; ++j) swap(g(j, k), g(j, d));
      } else {
        size_t p = n;
        for (size_t i = k + 1; i < n && p == n; ++i)
          if (g(k, i) != 0) p = i;
        if (p == n) continue;  // zero row: degenerate block (cannot happen, gram nondegenerate)
        for (size_t j = 0; j < n; ++j) g(k, j) += g(p, j);
        for (size_t j = 0; j < n; ++j) g(j, k) += g(j, p);
      }
    }
    Rat piv = g(k, k);
    if (piv > 0) ++pos;
    else ++neg;
    for (size_t i = k + 1; i < n; ++i) {
      if (g(i, k) == 0) continue;
      Rat f = g(i, k) / piv;
      for (size_t j = k; j < n; ++j) g(i, j) -= f * g(k, j);
      for (size_t j = k; j < n; ++j) g(j, i) = g(i, j);
    }
  }
  return {pos, neg};
}

bool is_negative_definite(const Lattice& l) {
  auto [p, n] = signature(l);
  return p == 0 && size_t(n) == l.rank;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  DiscriminantGroup dg;
  exact::Snf s = exact::smith_normal_form(l.gram);
  dg.gv = exact::mul(l.gram, s.v);
  for (size_t i = 0; i < l.rank; ++i) {
    Int d = s.d(i, i);
    require(d != 0, "degenerate gram in discriminant_group");
    dg.order *= d;
    if (d == 1) continue;
    dg.sel.push_back(i);
    dg.factors.push_back(d);
    QVec gen(l.rank);
    for (size_t j = 0; j < l.rank; ++j) gen[j] = Rat(s.u(i, j), d);
    dg.gens.push_back(std::move(gen));
  }
  return dg;
}

bool is_dual_vector(const Lattice& l, const QVec& x) {
  for (size_t j = 0; j < l.rank; ++j) {
    Rat p = 0;
    for (size_t i = 0; i < l.rank; ++i)
      if (x[i] != 0) p += x[i] * Rat(l.gram(i, j));
    if (p.get_den() != 1) return false;
  }
  return true;
}

std::vector<Int> disc_coords(const DiscriminantGroup& dg, const QVec& dual_vec) {
  size_t n = dual_vec.size();
  // z = y * gram must be integral for a dual vector; coords are (z * v) mod d
  QVec zq(n, Rat(0));
  for (size_t j = 0; j < n; ++j) {
    Rat p = 0;
    for (size_t i = 0; i < n; ++i)
      if (dual_vec[i] != 0) p += dual_vec[i] * Rat(dg.gv(i, j));
    require(p.get_den() == 1, "disc_coords: not a dual vector");
    zq[j] = p;
  }
  std::vector<Int> c(dg.sel.size());
  for (size_t k = 0; k < dg.sel.size(); ++k) {
    Int v = zq[dg.sel[k]].get_num();
    Int m = v % dg.factors[k];
    if (m < 0) m += dg.factors[k];
    c[k] = m;
  }
  return c;
}

Rat disc_q(const Lattice& l, const QVec& dual_vec) {
  require(l.even, "discriminant form needs an even lattice");
  Rat q = norm_of(l, dual_vec);
  Rat m = q - 2 * Rat(rat_floor(q / 2));
  return m;  // in [0, 2)
}

Isometry make_isometry(const Lattice& l, IMat m) {
  require(m.rows == l.rank && m.cols == l.rank, "isometry: wrong shape");
  IMat g = exact::mul(exact::mul(m, l.gram), exact::transpose(m));
  require(g == l.gram, "not an isometry of L");
  return Isometry{std::move(m)};
}

Isometry make_isometry(const Lattice& l, const QMat& m) {
  require(exact::is_integral(m), "not an isometry of L");
  return make_isometry(l, exact::to_imat(m));
}

Isometry identity_isometry(const Lattice& l) { return Isometry{exact::imat_identity(l.rank)}; }

Isometry compose(const Isometry& a, const Isometry& b) { return Isometry{exact::mul(a.m, b.m)}; }

Isometry inverse_of(const Isometry& a) {
  QMat inv = exact::inverse(to_qmat(a.m));
  require(exact::is_integral(inv), "isometry inverse not integral");
  return Isometry{exact::to_imat(inv)};
}

QVec apply(const QVec& x, const Isometry& g) { return exact::mul_row(x, g.m); }

bool is_identity(const Isometry& g) {
  for (size_t i = 0; i < g.m.rows; ++i)
    for (size_t j = 0; j < g.m.cols; ++j)
      if (g.m(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

Isometry reflection(const Lattice& l, const QVec& r) {
  Rat n = norm_of(l, r);
  require(n < 0, "reflection vector must have negative norm");
  QMat m(l.rank, l.rank);
  for (size_t i = 0; i < l.rank; ++i) {
    QVec e(l.rank, Rat(0));
    e[i] = 1;
    Rat c = -2 * pairing(l, e, r) / n;
    for (size_t j = 0; j < l.rank; ++j) m(i, j) = (i == j ? Rat(1) : Rat(0)) + c * r[j];
  }
  require(exact::is_integral(m), "not an isometry of L");
  return make_isometry(l, exact::to_imat(m));
}

int disc_action_sign(const DiscriminantGroup& dg, const Isometry& g) {
  for (int s : {+1, -1}) {
    bool ok = true;
    for (auto& y : dg.gens) {
      QVec img = apply(y, g);
      for (size_t j = 0; j < img.size() && ok; ++j) {
        Rat d = img[j] - Rat(s) * y[j];
        if (d.get_den() != 1) ok = false;
      }
      if (!ok) break;
    }
    if (ok) return s;
  }
  return 0;
}

bool in_O_omega(const Lattice& l, const DiscriminantGroup& dg, const Isometry& g) {
  if (!l.cone_witness.empty()) {
    if (pairing(l, l.cone_witness, apply(l.cone_witness, g)) <= 0) return false;
  }
  return disc_action_sign(dg, g) != 0;
}

Embedding make_embedding(Lattice source, Lattice target, IMat map) {
  require(map.rows == source.rank && map.cols == target.rank, "embedding: wrong shape");
  IMat g = exact::mul(exact::mul(map, target.gram), exact::transpose(map));
  require(g == source.gram, "embedding does not preserve the form");
  return Embedding{std::move(source), std::move(target), std::move(map)};
}

QVec embed(const Embedding& e, const QVec& x) { return exact::mul_row(x, e.map); }

Embedding orthogonal_complement(const Embedding& e) {
  IMat a = exact::mul(e.target.gram, exact::transpose(e.map));
  IMat k = exact::int_left_kernel(a);
  IMat gram = exact::mul(exact::mul(k, e.target.gram), exact::transpose(k));
  Lattice comp = make_lattice(std::move(gram), e.source.name.empty() ? "complement"
                                                                     : e.source.name + "_perp");
  return Embedding{std::move(comp), e.target, std::move(k)};
}

bool is_primitive(const Embedding& e) {
  exact::Snf s = exact::smith_normal_form(e.map);
  size_t n = std::min(e.map.rows, e.map.cols);
  for (size_t i = 0; i < n; ++i)
    if (s.d(i, i) != 1) return false;
  return e.map.rows <= e.map.cols;
}

QVec project_to_dual(const Embedding& e, const QVec& v) {
  QVec t = exact::mul_row(v, e.target.gram);
  QVec s = exact::mul_row(t, exact::transpose(e.map));
  return exact::mul_row(s, e.source.gram_inv);
}

}  // namespace ww::lat
