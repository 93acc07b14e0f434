#include <doctest.h>

#include "lattice.hpp"

using namespace ww;
using namespace ww::lat;
using exact::IMat;

namespace {
Lattice u_plane() {
  IMat g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = 1;
  return make_lattice(std::move(g), "U");
}
QVec qv(std::vector<long> v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}
}  // namespace

TEST_CASE("signature") {
  CHECK(signature(u_plane()) == std::pair<int, int>(1, 1));
  IMat g(1, 1);
  g(0, 0) = -2;
  CHECK(signature(make_lattice(g)) == std::pair<int, int>(0, 1));
}

TEST_CASE("discriminant group of unimodular lattice is trivial") {
  auto dg = discriminant_group(u_plane());
  CHECK(dg.factors.empty());
  CHECK(dg.order == 1);
}

TEST_CASE("discriminant group of A1 and q values") {
  IMat g(1, 1);
  g(0, 0) = -2;
  auto a1 = make_lattice(g);
  auto dg = discriminant_group(a1);
  REQUIRE(dg.factors.size() == 1);
  CHECK(dg.factors[0] == 2);
  // generator is a half vector with q = -1/2 mod 2 = 3/2
  CHECK(disc_q(a1, dg.gens[0]) == Rat(3, 2));
  CHECK(disc_coords(dg, dg.gens[0]) == std::vector<Int>{Int(1)});
}

TEST_CASE("reflection in (1,-1) swaps the U basis") {
  auto u = u_plane();
  auto s = reflection(u, qv({1, -1}));
  CHECK(apply(qv({3, 7}), s) == qv({7, 3}));
  CHECK(is_identity(compose(s, s)));
}

TEST_CASE("reflections act trivially on the discriminant group") {
  IMat g(3, 3);
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(2, 2) = -4;
  auto l = make_lattice(g);
  l.cone_witness = qv({1, 1, 0});
  auto dg = discriminant_group(l);
  REQUIRE(dg.factors.size() == 1);
  // reflection in an integral (-2)-vector: x + <x,r> r with r = (1,-1,0)
  auto s = reflection(l, qv({1, -1, 0}));
  CHECK(in_O_omega(l, dg, s));
  CHECK(disc_action_sign(dg, s) == 1);
}

TEST_CASE("embeddings, complements, dual projection") {
  // A1(-4) inside U + A1(-4): complement has rank 2
  IMat g(3, 3);
  g(0, 1) = 1;
  g(1, 0) = 1;
  g(2, 2) = -4;
  auto big = make_lattice(g);
  IMat e(1, 3);
  e(0, 2) = 1;
  IMat small(1, 1);
  small(0, 0) = -4;
  auto emb = make_embedding(make_lattice(small), big, e);
  CHECK(is_primitive(emb));

  auto comp = orthogonal_complement(emb);
  CHECK(comp.source.rank == 2);
  CHECK(signature(comp.source) == std::pair<int, int>(1, 1));

  // project (0,0,1) and a mixed vector to the dual of the A1(-4)
  QVec p = project_to_dual(emb, qv({5, 7, 1}));
  CHECK(p == QVec{Rat(1)});
  QVec q = project_to_dual(emb, qv({5, 7, 0}));
  CHECK(q == QVec{Rat(0)});

  // imprimitive: index 2 image
  IMat e2(1, 3);
  e2(0, 2) = 2;
  IMat small2(1, 1);
  small2(0, 0) = -16;
  auto emb2 = make_embedding(make_lattice(small2), big, e2);
  CHECK(!is_primitive(emb2));
}
