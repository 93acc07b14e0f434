#include <doctest.h>

#include "exactalg.hpp"

using namespace ww;
using namespace ww::exact;

namespace {

IMat imat(std::vector<std::vector<long>> rows) {
  IMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

QMat qmat(std::vector<std::vector<long>> rows) { return to_qmat(imat(rows)); }

bool snf_consistent(const IMat& m) {
  Snf s = smith_normal_form(m);
  if (mul(mul(s.u, m), s.v) != s.d) return false;
  Int du = det(s.u), dv = det(s.v);
  if (du != 1 && du != -1) return false;
  if (dv != 1 && dv != -1) return false;
  size_t n = std::min(m.rows, m.cols);
  for (size_t i = 0; i + 1 < n; ++i) {
    if (s.d(i, i) == 0 && s.d(i + 1, i + 1) != 0) return false;
    if (s.d(i, i) != 0 && s.d(i + 1, i + 1) % s.d(i, i) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("smith normal form on stated inputs") {
  Snf s1 = smith_normal_form(imat_identity(3));
  CHECK(s1.d == imat_identity(3));

  Snf s2 = smith_normal_form(imat({{0, 1}, {1, 0}}));
  CHECK(s2.d == imat_identity(2));
  CHECK(snf_consistent(imat({{0, 1}, {1, 0}})));

  Snf s3 = smith_normal_form(imat({{-2}}));
  CHECK(s3.d(0, 0) == 2);
}

TEST_CASE("smith normal form transform identity on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IMat m(r, c);
    for (auto& x : m.a) x = long(rng() % 19) - 9;
    CHECK(snf_consistent(m));
  }
}

TEST_CASE("hnf_rows gives canonical row basis") {
  IMat h = hnf_rows(imat({{2, 0}, {0, 2}, {1, 1}}));
  CHECK(h == imat({{1, 1}, {0, 2}}));
  // invariant under row order
  IMat h2 = hnf_rows(imat({{1, 1}, {2, 0}, {0, 2}}));
  CHECK(h == h2);
}

TEST_CASE("solve_right on stated inputs") {
  auto s1 = solve_right(qmat({{1, 0}, {0, 1}}), {Rat(3), Rat(-5)});
  REQUIRE(s1.has_value());
  CHECK(s1->particular == QVec{Rat(3), Rat(-5)});
  CHECK(s1->kernel.empty());

  auto s2 = solve_right(qmat({{1, 1}}), {Rat(1)});
  REQUIRE(s2.has_value());
  CHECK(s2->particular == QVec{Rat(1), Rat(0)});
  REQUIRE(s2->kernel.size() == 1);
  CHECK(s2->kernel[0][0] + s2->kernel[0][1] == 0);

  auto s3 = solve_right(qmat({{0, 0}}), {Rat(1)});
  CHECK(!s3.has_value());
}

TEST_CASE("integer kernel and integer solve") {
  IMat m = imat({{2}, {1}});
  IMat k = int_left_kernel(m);
  REQUIRE(k.rows == 1);
  CHECK(2 * k(0, 0) + k(0, 1) == 0);
  CHECK((k(0, 0) == 1 || k(0, 0) == -1));

  auto x = int_solve_left(m, {Int(3)});
  REQUIRE(x.has_value());
  CHECK(2 * (*x)[0] + (*x)[1] == 3);
  CHECK(!int_solve_left(imat({{2}, {0}}), {Int(1)}).has_value());
}

TEST_CASE("matrix inverse and det") {
  QMat m = qmat({{1, 2}, {3, 5}});
  CHECK(det(m) == Rat(-1));
  CHECK(mul(m, inverse(m)) == qmat_identity(2));
}

TEST_CASE("lp_unbounded on stated one-dimensional instances") {
  LPProblem p1;
  p1.dim = 1;
  p1.cons = {{{Rat(1)}, false}};
  p1.objective = {Rat(1)};
  CHECK(!lp_unbounded(p1));  // minimize x, x >= 0

  LPProblem p2 = p1;
  p2.objective = {Rat(-1)};
  CHECK(lp_unbounded(p2));  // minimize -x, x >= 0
}

TEST_CASE("lp_unbounded with equality substitution") {
  // x + y = 0, x >= 0; minimize y  ->  y = -x, unbounded below
  LPProblem p;
  p.dim = 2;
  p.cons = {{{Rat(1), Rat(1)}, true}, {{Rat(1), Rat(0)}, false}};
  p.objective = {Rat(0), Rat(1)};
  CHECK(lp_unbounded(p));
  // same but minimize x: bounded below by 0
  p.objective = {Rat(1), Rat(0)};
  CHECK(!lp_unbounded(p));
}

TEST_CASE("in_cone basics") {
  std::vector<QVec> gens = {{Rat(1), Rat(0)}, {Rat(1), Rat(1)}};
  CHECK(in_cone(gens, {Rat(3), Rat(1)}));
  CHECK(in_cone(gens, {Rat(0), Rat(0)}));
  CHECK(!in_cone(gens, {Rat(-1), Rat(0)}));
  CHECK(!in_cone(gens, {Rat(0), Rat(-1)}));
}

// Independent oracle for two-dimensional cones: a linear functional is
// unbounded below on {x : a_i . x >= 0} iff it is negative on some extreme
// ray, and every extreme ray is a rotation of a constraint normal.
namespace {
bool oracle_unbounded_2d(const std::vector<QVec>& cons, const QVec& c) {
  std::vector<QVec> rays;
  for (auto& a : cons) {
    rays.push_back({-a[1], a[0]});
    rays.push_back({a[1], -a[0]});
  }
  for (auto& r : rays) {
    bool inside = true;
    for (auto& a : cons)
      if (a[0] * r[0] + a[1] * r[1] < 0) {
        inside = false;
        break;
      }
    if (inside && c[0] * r[0] + c[1] * r[1] < 0) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("lp_unbounded matches ray enumeration on random 2d cones") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    LPProblem p;
    p.dim = 2;
    size_t m = 2 + rng() % 4;
    for (size_t i = 0; i < m; ++i) {
      QVec a = {Rat(long(rng() % 11) - 5), Rat(long(rng() % 11) - 5)};
      if (a[0] == 0 && a[1] == 0) a[0] = 1;
      p.cons.push_back({a, false});
    }
    p.objective = {Rat(long(rng() % 11) - 5), Rat(long(rng() % 11) - 5)};
    if (p.objective[0] == 0 && p.objective[1] == 0) continue;
    std::vector<QVec> normals;
    for (auto& cn : p.cons) normals.push_back(cn.coeff);
    CHECK(lp_unbounded(p) == oracle_unbounded_2d(normals, p.objective));
  }
}
