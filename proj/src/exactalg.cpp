#include "exactalg.hpp"

#include <algorithm>

namespace ww::exact {

namespace {
int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
}  // namespace

QMat qmat_identity(size_t n) {
  QMat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IMat imat_identity(size_t n) {
  IMat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat to_qmat(const IMat& m) {
  QMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

bool is_integral(const QVec& v) {
  for (auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

bool is_integral(const QMat& m) { return is_integral(m.a); }

IMat to_imat(const QMat& m) {
  IMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    require(m.a[i].get_den() == 1, "to_imat: non-integral entry");
    r.a[i] = m.a[i].get_num();
  }
  return r;
}

QMat mul(const QMat& a, const QMat& b) {
  require(a.cols == b.rows, "mul: shape mismatch");
  QMat c(a.rows, b.cols);
  Rat t;
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) {
        t = aik * b(k, j);
        c(i, j) += t;
      }
    }
  return c;
}

IMat mul(const IMat& a, const IMat& b) {
  require(a.cols == b.rows, "mul: shape mismatch");
  IMat c(a.rows, b.cols);
  Int t;
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (size_t j = 0; j < b.cols; ++j) {
        t = aik * b(k, j);
        c(i, j) += t;
      }
    }
  return c;
}

QMat transpose(const QMat& m) {
  QMat r(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

IMat transpose(const IMat& m) {
  IMat r(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

QVec mul_row(const QVec& x, const QMat& m) {
  require(x.size() == m.rows, "mul_row: shape mismatch");
  QVec y(m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m.cols; ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

QVec mul_row(const QVec& x, const IMat& m) {
  require(x.size() == m.rows, "mul_row: shape mismatch");
  QVec y(m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m.cols; ++j) y[j] += x[i] * Rat(m(i, j));
  }
  return y;
}

IVec mul_row(const IVec& x, const IMat& m) {
  require(x.size() == m.rows, "mul_row: shape mismatch");
  IVec y(m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m.cols; ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

// Gaussian elimination helper: reduce a copy of m to row echelon form,
// returning pivot columns; optionally carries a right-hand side along.
namespace {

struct Echelon {
  QMat m;
  std::vector<size_t> pivot_col;  // per pivot row
  Rat det_factor = 1;             // product of pivots with row-swap signs
  bool square_singular = false;
};

Echelon echelonize(QMat m) {
  Echelon e;
  size_t pr = 0;
  for (size_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
    size_t sel = pr;
    while (sel < m.rows && m(sel, pc) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != pr) {
      for (size_t j = 0; j < m.cols; ++j) swap(m(sel, j), m(pr, j));
      e.det_factor = -e.det_factor;
    }
    e.det_factor *= m(pr, pc);
    Rat inv = 1 / m(pr, pc);
    for (size_t j = pc; j < m.cols; ++j) m(pr, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == pr || m(i, pc) == 0) continue;
      Rat f = m(i, pc);
      for (size_t j = pc; j < m.cols; ++j) m(i, j) -= f * m(pr, j);
    }
    e.pivot_col.push_back(pc);
    ++pr;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

size_t rank(const QMat& m) { return echelonize(m).pivot_col.size(); }

Rat det(const QMat& m) {
  require(m.rows == m.cols, "det: not square");
  Echelon e = echelonize(m);
  if (e.pivot_col.size() < m.rows) return Rat(0);
  return e.det_factor;
}

Int det(const IMat& m) {
  Rat d = det(to_qmat(m));
  require(d.get_den() == 1, "integer det not integral");
  return d.get_num();
}

QMat inverse(const QMat& m) {
  require(m.rows == m.cols, "inverse: not square");
  size_t n = m.rows;
  QMat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = echelonize(std::move(aug));
  require(e.pivot_col.size() == n && e.pivot_col[n - 1] == n - 1, "inverse: singular matrix");
  QMat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

std::optional<LinSolution> solve_right(const QMat& a, const QVec& b) {
  require(b.size() == a.rows, "solve_right: shape mismatch");
  size_t n = a.cols;
  QMat aug(a.rows, n + 1);
  for (size_t i = 0; i < a.rows; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = echelonize(std::move(aug));
  // inconsistent iff some pivot lands in the rhs column
  for (size_t c : e.pivot_col)
    if (c == n) return std::nullopt;

  std::vector<bool> is_pivot(n, false);
  for (size_t c : e.pivot_col) is_pivot[c] = true;

  LinSolution s;
  s.particular.assign(n, Rat(0));
  for (size_t r = 0; r < e.pivot_col.size(); ++r) s.particular[e.pivot_col[r]] = e.m(r, n);

  for (size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    QVec k(n, Rat(0));
    k[j] = 1;
    for (size_t r = 0; r < e.pivot_col.size(); ++r) k[e.pivot_col[r]] = -e.m(r, j);
    s.kernel.push_back(std::move(k));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IMat& m, size_t i, size_t j) {
  for (size_t c = 0; c < m.cols; ++c) swap(m(i, c), m(j, c));
}
void swap_cols(IMat& m, size_t i, size_t j) {
  for (size_t r = 0; r < m.rows; ++r) swap(m(r, i), m(r, j));
}
// row i -= q * row j
void row_axpy(IMat& m, size_t i, size_t j, const Int& q) {
  if (q == 0) return;
  for (size_t c = 0; c < m.cols; ++c) m(i, c) -= q * m(j, c);
}
void col_axpy(IMat& m, size_t i, size_t j, const Int& q) {
  if (q == 0) return;
  for (size_t r = 0; r < m.rows; ++r) m(r, i) -= q * m(r, j);
}
void negate_row(IMat& m, size_t i) {
  for (size_t c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
}

}  // namespace

Snf smith_normal_form(const IMat& m0) {
  Snf s;
  s.d = m0;
  s.u = imat_identity(m0.rows);
  s.v = imat_identity(m0.cols);
  IMat& d = s.d;
  size_t n = std::min(d.rows, d.cols);

  for (size_t t = 0; t < n; ++t) {
    // find a nonzero pivot of minimal absolute value in the trailing block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < d.rows; ++i)
      for (size_t j = t; j < d.cols; ++j) {
        if (d(i, j) == 0) continue;
        if (!found || cmpabs(d(i, j), d(pi, pj)) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    if (pi != t) {
      swap_rows(d, t, pi);
      swap_rows(s.u, t, pi);
    }
    if (pj != t) {
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);
    }

    for (;;) {
      bool clean = true;
      for (size_t i = t + 1; i < d.rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = floor_div(d(i, t), d(t, t));
        row_axpy(d, i, t, q);
        row_axpy(s.u, i, t, q);
        if (d(i, t) != 0) {
          // remainder smaller than pivot: swap up and restart
          swap_rows(d, t, i);
          swap_rows(s.u, t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < d.cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = floor_div(d(t, j), d(t, t));
        col_axpy(d, j, t, q);
        col_axpy(s.v, j, t, q);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(s.v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide everything in the trailing block
      bool fixed = false;
      for (size_t i = t + 1; i < d.rows && !fixed; ++i)
        for (size_t j = t + 1; j < d.cols && !fixed; ++j)
          if (d(i, j) % d(t, t) != 0) {
            // fold row i into row t and restart the reduction
            row_axpy(d, t, i, Int(-1));
            row_axpy(s.u, t, i, Int(-1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
  }
  return s;
}

IMat hnf_rows(const IMat& m0) {
  IMat m = m0;
  size_t pr = 0;
  std::vector<size_t> pivots;
  for (size_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
    // gcd-reduce the column below pr to a single nonzero entry at pr
    for (;;) {
      size_t sel = m.rows;
      for (size_t i = pr; i < m.rows; ++i)
        if (m(i, pc) != 0 && (sel == m.rows || cmpabs(m(i, pc), m(sel, pc)) < 0)) sel = i;
      if (sel == m.rows) break;  // column all zero
      if (sel != pr) swap_rows(m, pr, sel);
      bool done = true;
      for (size_t i = pr + 1; i < m.rows; ++i) {
        if (m(i, pc) == 0) continue;
        Int q = floor_div(m(i, pc), m(pr, pc));
        row_axpy(m, i, pr, q);
        if (m(i, pc) != 0) done = false;
      }
      if (done) break;
    }
    if (m(pr, pc) == 0) continue;
    if (m(pr, pc) < 0) negate_row(m, pr);
    // reduce entries above the pivot into [0, pivot)
    for (size_t i = 0; i < pr; ++i) {
      Int q = floor_div(m(i, pc), m(pr, pc));
      row_axpy(m, i, pr, q);
    }
    pivots.push_back(pc);
    ++pr;
  }
  IMat h(pr, m.cols);
  for (size_t i = 0; i < pr; ++i) h.set_row(i, m.row(i));
  return h;
}

IMat int_left_kernel(const IMat& m) {
  Snf s = smith_normal_form(m);
  size_t r = 0;
  size_t n = std::min(s.d.rows, s.d.cols);
  while (r < n && s.d(r, r) != 0) ++r;
  // x m = 0  <=>  x = z u with z supported on the zero rows of d
  IMat k(m.rows - r, m.rows);
  for (size_t i = r; i < m.rows; ++i) k.set_row(i - r, s.u.row(i));
  return k;
}

std::optional<IVec> int_solve_left(const IMat& m, const IVec& b) {
  require(b.size() == m.cols, "int_solve_left: shape mismatch");
  Snf s = smith_normal_form(m);
  // x m = b  <=>  y d = b v with y = x u^{-1}, then x = y u
  IVec bv = mul_row(b, s.v);
  size_t n = std::min(s.d.rows, s.d.cols);
  IVec y(m.rows, Int(0));
  for (size_t i = 0; i < bv.size(); ++i) {
    if (i < n && s.d(i, i) != 0) {
      if (bv[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = bv[i] / s.d(i, i);
    } else if (bv[i] != 0) {
      return std::nullopt;
    }
  }
  return mul_row(y, s.u);
}

// ---------------------------------------------------------------------------
// Phase-one simplex (Bland's rule) for cone membership.

bool in_cone(const std::vector<QVec>& gens, const QVec& target) {
  size_t n = target.size();
  size_t m = gens.size();
  for (auto& g : gens) require(g.size() == n, "in_cone: dim mismatch");

  // tableau: n constraint rows, columns = m generator vars + n artificials + rhs
  size_t cols = m + n + 1;
  std::vector<QVec> t(n, QVec(cols, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    bool neg = target[i] < 0;
    for (size_t j = 0; j < m; ++j) t[i][j] = neg ? -gens[j][i] : gens[j][i];
    t[i][m + i] = 1;
    t[i][cols - 1] = neg ? -target[i] : target[i];
  }
  // reduced-cost row for minimizing the sum of artificials
  QVec z(cols, Rat(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < cols; ++j)
      if (j < m || j == cols - 1) z[j] -= t[i][j];

  std::vector<size_t> basis(n);
  for (size_t i = 0; i < n; ++i) basis[i] = m + i;

  for (;;) {
    // Bland: entering = smallest-index column with negative reduced cost
    size_t enter = cols - 1;
    for (size_t j = 0; j + 1 < cols; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols - 1) break;

    // ratio test, ties broken by smallest basis variable (Bland)
    size_t leave = n;
    Rat best;
    for (size_t i = 0; i < n; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (leave == n || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    require(leave != n, "in_cone: unbounded phase-one (cannot happen)");

    // pivot on (leave, enter)
    Rat piv = t[leave][enter];
    for (size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (size_t i = 0; i < n; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      Rat f = z[enter];
      for (size_t j = 0; j < cols; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return z[cols - 1] == 0;  // artificials driven to zero <=> target in cone
}

bool lp_unbounded(const LPProblem& p) {
  require(p.objective.size() == p.dim, "lp_unbounded: objective dim mismatch");
  for (auto& c : p.cons) require(c.coeff.size() == p.dim, "lp_unbounded: constraint dim mismatch");

  // substitute out equality constraints
  std::vector<QVec> eqs;
  for (auto& c : p.cons)
    if (c.equality) eqs.push_back(c.coeff);

  std::vector<QVec> ineq_t;  // inequality rows in reduced coordinates
  QVec obj_t;
  if (eqs.empty()) {
    for (auto& c : p.cons)
      if (!c.equality) ineq_t.push_back(c.coeff);
    obj_t = p.objective;
  } else {
    QMat a(eqs.size(), p.dim);
    for (size_t i = 0; i < eqs.size(); ++i) a.set_row(i, eqs[i]);
    auto sol = solve_right(a, QVec(eqs.size(), Rat(0)));
    require(sol.has_value(), "homogeneous system must be solvable");
    const auto& kern = sol->kernel;  // x = y * K, rows of K span the solution space
    if (kern.empty()) return false;  // feasible set is {0}
    auto project = [&](const QVec& v) {
      QVec y(kern.size());
      for (size_t i = 0; i < kern.size(); ++i) {
        Rat s = 0;
        for (size_t j = 0; j < p.dim; ++j) s += kern[i][j] * v[j];
        y[i] = s;
      }
      return y;
    };
    for (auto& c : p.cons)
      if (!c.equality) ineq_t.push_back(project(c.coeff));
    obj_t = project(p.objective);
  }
  if (std::all_of(obj_t.begin(), obj_t.end(), [](const Rat& x) { return x == 0; })) return false;
  // unbounded iff {x : ineq_t . x >= 0, obj_t . x <= -1} is nonempty,
  // i.e. (Farkas) iff obj_t is not in the cone spanned by the inequality rows
  return !in_cone(ineq_t, obj_t);
}

}  // namespace ww::exact
