#include <doctest.h>

#include "leech.hpp"

using namespace ww;
using namespace ww::leech;

TEST_CASE("golay code structure") {
  const auto& le = ww::leech::get();
  CHECK(le.golay.words.size() == 4096);
  CHECK(le.golay.octads.size() == 759);
  CHECK(le.golay.contains(0));

  // symmetric difference of two octads meeting in 4 points is an octad
  int checked = 0;
  for (size_t i = 0; i < 40 && checked < 10; ++i)
    for (size_t j = i + 1; j < 40 && checked < 10; ++j) {
      uint32_t a = le.golay.octads[i], b = le.golay.octads[j];
      if (std::popcount(a & b) == 4) {
        CHECK(le.golay.contains(a ^ b));
        CHECK(std::popcount(a ^ b) == 8);
        ++checked;
      }
    }
  CHECK(checked == 10);
}

TEST_CASE("omega set round trip") {
  uint32_t m = parse_omega_set("{inf, 0, 1, 7, 12, 13, 14, 20}");
  CHECK(std::popcount(m) == 8);
  CHECK(omega_set_str(m) == "{inf, 0, 1, 7, 12, 13, 14, 20}");
  CHECK(ww::leech::get().golay.contains(m));  // N0 octad of the 16-nodal fixture
}

TEST_CASE("leech lattice invariants") {
  const auto& le = ww::leech::get();
  CHECK(exact::det(le.lambda.gram) == 1);
  CHECK(le.lambda.even);
  auto sig = lat::signature(le.lambda);
  CHECK(sig.first == 0);
  CHECK(sig.second == 24);
  // octad vectors have norm -4 and integral pairings
  IVec v = octad_vector(le, le.golay.octads[0]);
  CHECK(lat::norm_of(le.lambda, to_qvec(v)) == Rat(-4));
}

TEST_CASE("leech roots") {
  const auto& le = ww::leech::get();
  QVec w0 = to_qvec(weyl0());

  IVec r0 = leech_root(le, IVec(24, Int(0)));
  CHECK(r0[0] == -1);
  CHECK(r0[1] == 1);
  CHECK(lat::norm_of(le.ii, to_qvec(r0)) == Rat(-2));
  CHECK(lat::pairing(le.ii, to_qvec(r0), w0) == Rat(1));

  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    IVec lam(24);
    for (auto& x : lam) x = long(rng() % 5) - 2;
    IVec r = leech_root(le, lam);
    CHECK(lat::norm_of(le.ii, to_qvec(r)) == Rat(-2));
    CHECK(lat::pairing(le.ii, to_qvec(r), w0) == Rat(1));
  }

  // octads meeting in 2 points give leech roots pairing to 1
  const auto& oc = le.golay.octads;
  int found = 0;
  for (size_t i = 0; i < 30 && found < 5; ++i)
    for (size_t j = i + 1; j < 30 && found < 5; ++j)
      if (std::popcount(oc[i] & oc[j]) == 2) {
        QVec ri = to_qvec(leech_root(le, octad_vector(le, oc[i])));
        QVec rj = to_qvec(leech_root(le, octad_vector(le, oc[j])));
        CHECK(lat::pairing(le.ii, ri, rj) == Rat(1));
        ++found;
      }
  CHECK(found == 5);
}

TEST_CASE("weyl vector recognition") {
  const auto& le = ww::leech::get();
  QVec w0 = to_qvec(weyl0());
  CHECK(is_weyl(le, w0));

  // non-examples
  QVec z(26, Rat(0));
  CHECK(!is_weyl(le, z));
  QVec neg = to_qvec(ii_vector(0, 0, octad_vector(le, le.golay.octads[3])));
  CHECK(!is_weyl(le, neg));  // negative norm
  QVec twice = w0;
  for (auto& x : twice) x *= 2;
  CHECK(!is_weyl(le, twice));  // imprimitive

  // reflection images of w0 are again weyl vectors
  IVec lam = octad_vector(le, le.golay.octads[0]);
  QVec root = to_qvec(leech_root(le, lam));
  auto refl = lat::reflection(le.ii, root);
  CHECK(is_weyl(le, lat::apply(w0, refl)));
}
