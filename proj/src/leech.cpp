#include "leech.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace ww::leech {

using exact::IMat;
using exact::QMat;

bool GolayCode::contains(uint32_t w) const {
  return std::binary_search(words.begin(), words.end(), w);
}

namespace {

// generator polynomial of the length-23 quadratic-residue code,
// x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 (LSB = constant term)
constexpr uint32_t kQrPoly = (1u << 0) | (1u << 2) | (1u << 4) | (1u << 5) | (1u << 6) |
                             (1u << 10) | (1u << 11);

uint32_t poly_mul(uint32_t a, uint64_t b) {
  uint64_t r = 0;
  for (int i = 0; i < 32; ++i)
    if ((a >> i) & 1) r ^= b << i;
  require(r < (uint64_t(1) << 32), "poly_mul overflow");
  return uint32_t(r);
}

}  // namespace

GolayCode build_golay() {
  // sanity: (x+1) * g * g~ = x^23 + 1 over F2, g~ the reciprocal polynomial
  uint32_t grev = 0;
  for (int i = 0; i <= 11; ++i)
    if ((kQrPoly >> i) & 1) grev |= 1u << (11 - i);
  require(poly_mul(poly_mul(kQrPoly, grev), 0b11u) == ((1u << 23) | 1u),
          "quadratic-residue polynomial check failed");

  // cyclic [23,12] code spanned by x^i g(x), extended by parity at infinity
  uint32_t basis[12];
  for (int i = 0; i < 12; ++i) basis[i] = kQrPoly << i;
  GolayCode g;
  g.words.reserve(4096);
  for (uint32_t m = 0; m < 4096; ++m) {
    uint32_t w23 = 0;
    for (int i = 0; i < 12; ++i)
      if ((m >> i) & 1) w23 ^= basis[i];
    uint32_t par = std::popcount(w23) & 1u;
    g.words.push_back((w23 << 1) | par);
  }
  std::sort(g.words.begin(), g.words.end());
  require(std::adjacent_find(g.words.begin(), g.words.end()) == g.words.end(),
          "golay words not distinct");

  size_t wt[25] = {0};
  for (uint32_t w : g.words) ++wt[std::popcount(w)];
  require(wt[0] == 1 && wt[8] == 759 && wt[12] == 2576 && wt[16] == 759 && wt[24] == 1,
          "golay weight enumerator check failed");
  for (int k : {1, 2, 3, 4, 5, 6, 7, 9, 10, 11})
    require(wt[k] == 0 && wt[24 - k] == 0, "golay weight enumerator check failed");

  for (uint32_t w : g.words)
    if (std::popcount(w) == 8) g.octads.push_back(w);

  // Steiner S(5,8,24): the octads cover every 5-subset exactly once
  std::unordered_set<uint32_t> fives;
  fives.reserve(50000);
  for (uint32_t oc : g.octads) {
    int pts[8], n = 0;
    for (int i = 0; i < 24; ++i)
      if ((oc >> i) & 1) pts[n++] = i;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          for (int d = c + 1; d < 8; ++d)
            for (int e = d + 1; e < 8; ++e) {
              uint32_t m = (1u << pts[a]) | (1u << pts[b]) | (1u << pts[c]) | (1u << pts[d]) |
                           (1u << pts[e]);
              require(fives.insert(m).second, "octads: repeated 5-subset");
            }
  }
  require(fives.size() == 42504, "octads do not cover all 5-subsets");
  return g;
}

std::string omega_set_str(uint32_t mask) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i = 0; i < 24; ++i) {
    if (!((mask >> i) & 1)) continue;
    if (!first) os << ", ";
    first = false;
    if (i == 0) os << "inf";
    else os << (i - 1);
  }
  os << '}';
  return os.str();
}

uint32_t parse_omega_set(const std::string& text) {
  uint32_t mask = 0;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    if (tok == "inf" || tok == "oo") mask |= 1u;
    else {
      int v = std::stoi(tok);
      require(v >= 0 && v <= 22, "omega point out of range: " + tok);
      mask |= 1u << (1 + v);
    }
    tok.clear();
  };
  for (char c : text) {
    if (isdigit(c) || isalpha(c)) tok += c;
    else flush();
  }
  flush();
  return mask;
}

void size_reduce_rows(IMat& rows, const IMat& ambient_gram) {
  // sweeps of b_i -> b_i - round(<b_i,b_j>/<b_j,b_j>) b_j on the definite form
  size_t n = rows.rows;
  auto pair_of = [&](size_t i, size_t j) {
    Int s = 0;
    for (size_t a = 0; a < rows.cols; ++a) {
      if (rows(i, a) == 0) continue;
      Int row = 0;
      for (size_t b = 0; b < rows.cols; ++b)
        if (rows(j, b) != 0) row += ambient_gram(a, b) * rows(j, b);
      s += rows(i, a) * row;
    }
    return s;
  };
  for (int sweep = 0; sweep < 64; ++sweep) {
    bool changed = false;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Rat ratio = Rat(pair_of(i, j)) / Rat(pair_of(j, j));
        Int q = rat_floor(ratio + Rat(1, 2));
        if (q == 0) continue;
        for (size_t a = 0; a < rows.cols; ++a) rows(i, a) -= q * rows(j, a);
        changed = true;
      }
    if (!changed) return;
  }
}

namespace {

Leech* build_leech() {
  auto le = new Leech;
  le->golay = build_golay();

  // generators of the Leech lattice in Z^Omega
  std::vector<IVec> gens;
  IVec special(24, Int(1));
  special[0] = -3;  // nu_Omega - 4 nu_inf
  gens.push_back(special);
  for (uint32_t oc : le->golay.octads) {
    IVec v(24, Int(0));
    for (int i = 0; i < 24; ++i)
      if ((oc >> i) & 1) v[i] = 2;
    gens.push_back(std::move(v));
  }

  IMat stack(gens.size(), 24);
  for (size_t i = 0; i < gens.size(); ++i) stack.set_row(i, gens[i]);
  IMat basis = exact::hnf_rows(stack);
  require(basis.rows == 24, "leech generators do not span rank 24");

  // swap long HNF rows for short generators (all generators have norm -4)
  auto eunorm = [&](const IVec& v) {
    Int s = 0;
    for (auto& x : v) s += x * x;
    return s;
  };
  for (int it = 0; it < 256; ++it) {
    QMat binv = exact::inverse(exact::to_qmat(basis));
    bool changed = false;
    for (auto& gvec : gens) {
      QVec c = exact::mul_row(to_qvec(gvec), binv);
      require(exact::is_integral(c), "generator outside spanned lattice");
      for (size_t i = 0; i < 24 && !changed; ++i) {
        Int ci = c[i].get_num();
        if ((ci == 1 || ci == -1) && eunorm(gvec) < eunorm(basis.row(i))) {
          basis.set_row(i, gvec);
          changed = true;
        }
      }
      if (changed) break;
    }
    if (!changed) break;
  }

  // gram(i,j) = -(b_i . b_j)/8, must be integral
  IMat gram(24, 24);
  for (size_t i = 0; i < 24; ++i)
    for (size_t j = 0; j < 24; ++j) {
      Int s = 0;
      for (size_t a = 0; a < 24; ++a) s += basis(i, a) * basis(j, a);
      require(s % 8 == 0, "leech pairing not divisible by 8");
      gram(i, j) = -s / 8;
    }
  le->basis = basis;
  le->basis_inv = exact::inverse(exact::to_qmat(basis));
  le->lambda = lat::make_lattice(gram, "Leech");
  require(exact::det(le->lambda.gram) == 1, "leech gram not unimodular");
  require(le->lambda.even, "leech gram not even");
  auto sig = lat::signature(le->lambda);
  require(sig.first == 0 && sig.second == 24, "leech signature not (0,24)");
  require(enumerate::count_negdef(le->lambda, Rat(-2)) == 0, "leech lattice has roots");

  // II_{1,25} = U + Lambda
  IMat g26(26, 26);
  g26(0, 1) = 1;
  g26(1, 0) = 1;
  for (size_t i = 0; i < 24; ++i)
    for (size_t j = 0; j < 24; ++j) g26(2 + i, 2 + j) = gram(i, j);
  le->ii = lat::make_lattice(g26, "II_1_25");
  le->ii.cone_witness = QVec(26, Rat(0));
  le->ii.cone_witness[0] = 1;
  le->ii.cone_witness[1] = 1;
  Int d26 = exact::det(le->ii.gram);
  require(d26 == -1, "rank-26 lattice not unimodular");
  require(le->ii.even, "rank-26 lattice not even");
  return le;
}

}  // namespace

const Leech& get() {
  static const Leech* instance = build_leech();
  return *instance;
}

std::optional<IVec> lambda_coords(const Leech& le, const IVec& omega_vec) {
  QVec c = exact::mul_row(to_qvec(omega_vec), le.basis_inv);
  if (!exact::is_integral(c)) return std::nullopt;
  IVec r(24);
  for (size_t i = 0; i < 24; ++i) r[i] = c[i].get_num();
  return r;
}

IVec omega_coords(const Leech& le, const IVec& lambda_c) {
  return exact::mul_row(lambda_c, le.basis);
}

IVec octad_vector(const Leech& le, uint32_t octad) {
  require(le.golay.contains(octad) && std::popcount(octad) == 8, "not an octad");
  IVec v(24, Int(0));
  for (int i = 0; i < 24; ++i)
    if ((octad >> i) & 1) v[i] = 2;
  auto c = lambda_coords(le, v);
  require(c.has_value(), "octad vector not in the lattice");
  return *c;
}

IVec ii_vector(long a, long b, const IVec& lambda_c) {
  IVec v(26, Int(0));
  v[0] = a;
  v[1] = b;
  for (size_t i = 0; i < lambda_c.size(); ++i) v[2 + i] = lambda_c[i];
  return v;
}

QVec ii_qvec(long a, long b, const IVec& lambda_c) { return to_qvec(ii_vector(a, b, lambda_c)); }

IVec weyl0() { return ii_vector(1, 0, IVec(24, Int(0))); }

IVec leech_root(const Leech& le, const IVec& lambda_c) {
  Rat n2 = lat::norm_of(le.lambda, to_qvec(lambda_c));
  Rat a = -1 - n2 / 2;
  require(a.get_den() == 1, "leech root: odd norm");
  IVec r = ii_vector(0, 1, lambda_c);
  r[0] = a.get_num();
  return r;
}

bool is_weyl(const Leech& le, const QVec& w) {
  if (!exact::is_integral(w) || is_zero(w)) return false;
  IVec wi(26);
  Int g = 0;
  for (size_t i = 0; i < 26; ++i) {
    wi[i] = w[i].get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), wi[i].get_mpz_t());
  }
  if (g != 1) return false;                                   // not primitive
  if (lat::norm_of(le.ii, w) != 0) return false;              // not isotropic
  if (lat::pairing(le.ii, w, le.ii.cone_witness) <= 0) return false;

  // quotient (Zw)-perp / Zw must be even unimodular of rank 24 with no roots
  IMat a(26, 1);
  QVec gw = exact::mul_row(w, le.ii.gram);
  for (size_t i = 0; i < 26; ++i) a(i, 0) = gw[i].get_num();
  IMat k = exact::int_left_kernel(a);  // rank 25
  require(k.rows == 25, "weyl perp rank");
  // coordinates of w inside the perp
  auto c = exact::int_solve_left(k, wi);
  require(c.has_value(), "w not inside its perp");
  // unimodular T with first row c: from the SNF of the 1x25 matrix [c]
  IMat crow(1, 25);
  crow.set_row(0, *c);
  auto s = exact::smith_normal_form(crow);
  require(s.d(0, 0) == 1, "weyl vector not primitive in perp");
  // [c] = u^-1 d v^-1 -> rows of v^-1? use: T := v^T-free approach:
  // d = u c v with u = [\pm 1]; first row of (v^{-1}) is (u d) ... build T
  QMat vinv = exact::inverse(exact::to_qmat(s.v));
  IMat t = exact::to_imat(vinv);
  // first row of t is +- c; normalize sign
  {
    bool matches = true;
    for (size_t i = 0; i < 25; ++i)
      if (t(0, i) != (*c)[i]) matches = false;
    if (!matches) {
      for (size_t i = 0; i < 25; ++i) t(0, i) = -t(0, i);
      for (size_t i = 0; i < 25; ++i)
        require(t(0, i) == (*c)[i], "unimodular completion failed");
    }
  }
  IMat newb = exact::mul(t, k);  // rows: w, then a complement of Zw in the perp
  IMat quot(24, 26);
  for (size_t i = 0; i < 24; ++i) quot.set_row(i, newb.row(i + 1));
  size_reduce_rows(quot, le.ii.gram);
  IMat qg = exact::mul(exact::mul(quot, le.ii.gram), exact::transpose(quot));
  auto ql = lat::make_lattice(qg, "weyl_quotient");
  if (!ql.even) return false;
  if (exact::det(ql.gram) != 1) return false;
  if (!lat::is_negative_definite(ql)) return false;
  return enumerate::count_negdef(ql, Rat(-2)) == 0;
}

}  // namespace ww::leech
