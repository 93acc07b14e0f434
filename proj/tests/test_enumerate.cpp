#include <doctest.h>

#include "enumerate.hpp"

using namespace ww;
using namespace ww::enumerate;
using ww::exact::IMat;

namespace {

lat::Lattice u_plane() {
  IMat g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  auto l = lat::make_lattice(std::move(g), "U");
  l.cone_witness = {Rat(1), Rat(1)};
  return l;
}

QVec qv(std::vector<long> v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace

TEST_CASE("norm/pairing enumeration in the hyperbolic plane") {
  auto u = u_plane();
  auto s = enum_norm_pairing(u, qv({1, 1}), Rat(0), Rat(1));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == qv({0, 1}));
  CHECK(s[1] == qv({1, 0}));

  // even lattice, odd norm: empty by parity
  CHECK(enum_norm_pairing(u, qv({1, 1}), Rat(-3), Rat(2)).empty());
}

TEST_CASE("separating vectors in the hyperbolic plane") {
  auto u = u_plane();
  auto s = enum_separating(u, qv({2, 1}), qv({1, 2}), Rat(-2));
  REQUIRE(s.size() == 1);
  CHECK(s[0] == qv({-1, 1}));
  CHECK(enum_separating(u, qv({2, 1}), qv({2, 1}), Rat(-2)).empty());
}

TEST_CASE("negative definite enumeration with dual variant") {
  // A1(-): [[-2]]
  IMat g(1, 1);
  g(0, 0) = -2;
  auto a1 = lat::make_lattice(std::move(g), "A1");
  auto roots = enum_negdef(a1, Rat(-2));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == qv({-1}));
  CHECK(roots[1] == qv({1}));
  // dual vectors of norm -1/2
  auto duals = enum_negdef(a1, Rat(-1, 2), true);
  REQUIRE(duals.size() == 2);
  CHECK(duals[1] == QVec{Rat(1, 2)});
}

TEST_CASE("enumeration agrees with brute-force box search on small lattices") {
  // random negative-definite rank-3 gram: -(B B^T + I) is neg definite
  Rng rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    IMat b(3, 3);
    for (auto& x : b.a) x = long(rng() % 5) - 2;
    IMat g = exact::mul(b, exact::transpose(b));
    for (size_t i = 0; i < 3; ++i) g(i, i) += 1;
    for (auto& x : g.a) x = -x;
    auto l = lat::make_lattice(g, "nd3");

    for (long target : {-2, -4, -6}) {
      auto fast = enum_negdef(l, Rat(target));
      std::vector<QVec> slow;
      for (long x = -8; x <= 8; ++x)
        for (long y = -8; y <= 8; ++y)
          for (long z = -8; z <= 8; ++z) {
            QVec v = qv({x, y, z});
            if (lat::norm_of(l, v) == Rat(target)) slow.push_back(v);
          }
      sort_canonical(slow);
      // box is wide enough: every enumerated vector lies inside it
      for (auto& v : fast)
        for (auto& c : v) CHECK(abs(c.get_num()) <= 8);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("hyperbolic slice enumeration agrees with box search") {
  // U + A1: gram [[0,1,0],[1,0,0],[0,0,-2]]
  IMat g(3, 3);
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(2, 2) = -2;
  auto l = lat::make_lattice(g, "U+A1");
  l.cone_witness = qv({1, 1, 0});
  QVec v0 = qv({2, 3, 1});
  REQUIRE(lat::norm_of(l, v0) > 0);
  for (long a : {-2, -4}) {
    for (long bb : {0, 1, 2, 3}) {
      auto fast = enum_norm_pairing(l, v0, Rat(a), Rat(bb));
      std::vector<QVec> slow;
      for (long x = -20; x <= 20; ++x)
        for (long y = -20; y <= 20; ++y)
          for (long z = -20; z <= 20; ++z) {
            QVec v = qv({x, y, z});
            if (lat::norm_of(l, v) == Rat(a) && lat::pairing(l, v, v0) == Rat(bb))
              slow.push_back(v);
          }
      sort_canonical(slow);
      for (auto& v : fast)
        for (auto& c : v) CHECK(abs(c.get_num()) <= 20);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("every enumerated vector satisfies its defining constraints") {
  auto u = u_plane();
  auto s = enum_separating(u, qv({5, 2}), qv({1, 7}), Rat(-4));
  CHECK(!s.empty());
  for (auto& v : s) {
    CHECK(lat::norm_of(u, v) == Rat(-4));
    CHECK(lat::pairing(u, v, qv({5, 2})) > 0);
    CHECK(lat::pairing(u, v, qv({1, 7})) < 0);
  }
}
