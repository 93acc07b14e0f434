#pragma once
// Exact integer/rational linear algebra and exact rational linear programming.
//
// Conventions: vectors are rows; a matrix acts on a row vector from the right
// (y = x * M).  solve_right uses the textbook column convention A x = b.

#include "basics.hpp"

#include <optional>

namespace ww::exact {

struct QMat {
  size_t rows = 0, cols = 0;
  QVec a;

  QMat() = default;
  QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Rat& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  QVec row(size_t i) const { return QVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  void set_row(size_t i, const QVec& v) {
    for (size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
  }
  bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

struct IMat {
  size_t rows = 0, cols = 0;
  IVec a;

  IMat() = default;
  IMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  Int& operator()(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

  IVec row(size_t i) const { return IVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
  void set_row(size_t i, const IVec& v) {
    for (size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
  }
  bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMat qmat_identity(size_t n);
IMat imat_identity(size_t n);
QMat to_qmat(const IMat& m);
// every entry must be integral
IMat to_imat(const QMat& m);
bool is_integral(const QMat& m);
bool is_integral(const QVec& v);

QMat mul(const QMat& a, const QMat& b);
IMat mul(const IMat& a, const IMat& b);
QMat transpose(const QMat& m);
IMat transpose(const IMat& m);
QVec mul_row(const QVec& x, const QMat& m);  // x * m
QVec mul_row(const QVec& x, const IMat& m);
IVec mul_row(const IVec& x, const IMat& m);

Rat det(const QMat& m);
Int det(const IMat& m);
// throws on singular input
QMat inverse(const QMat& m);

struct LinSolution {
  QVec particular;            // one solution of A x = b
  std::vector<QVec> kernel;   // basis of {x : A x = 0}
};

// A x = b over the rationals; nullopt when inconsistent.
std::optional<LinSolution> solve_right(const QMat& a, const QVec& b);

// Smith normal form with transforms: u * m * v = d, det u, det v = +-1,
// d diagonal with d1 | d2 | ... and nonnegative entries.
struct Snf {
  IMat d, u, v;
};
Snf smith_normal_form(const IMat& m);

// Canonical basis (Hermite normal form) of the row span; zero rows dropped.
IMat hnf_rows(const IMat& m);

size_t rank(const QMat& m);

// basis of {x : x * m = 0} over the integers (a primitive sublattice)
IMat int_left_kernel(const IMat& m);

// one integer solution of x * m = b, if any
std::optional<IVec> int_solve_left(const IMat& m, const IVec& b);

// ---------------------------------------------------------------------------
// Exact rational linear programming.

struct LPConstraint {
  QVec coeff;
  bool equality = false;  // coeff . x == 0 when set, otherwise coeff . x >= 0
};

struct LPProblem {
  size_t dim = 0;
  std::vector<LPConstraint> cons;
  QVec objective;
};

// Is there z >= 0 with sum_i z_i gens[i] = target?  Phase-one simplex with
// Bland's rule; exact, always terminates.
bool in_cone(const std::vector<QVec>& gens, const QVec& target);

// True iff inf of objective . x over {x : constraints} is -infinity.
// The feasible region of an LPProblem is a cone containing 0, so the infimum
// is either 0 or -infinity.
bool lp_unbounded(const LPProblem& p);

}  // namespace ww::exact
