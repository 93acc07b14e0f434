#pragma once
// Shared scalar types and small helpers used across the library.
// All arithmetic is exact: Int is an arbitrary-precision integer,
// Rat an always-reduced rational with positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ww {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

// "p/q" or "p"; denominator sign normalized by mpq canonicalization.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw error("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline long to_long(const Int& z) {
  require(z.fits_slong_p(), "integer out of long range");
  return z.get_si();
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// floor(sqrt(z)), z >= 0
inline Int isqrt(const Int& z) {
  require(sgn(z) >= 0, "isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

inline int cmp_qvec(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

struct QVecLess {
  bool operator()(const QVec& a, const QVec& b) const { return cmp_qvec(a, b) < 0; }
};

inline QVec add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const QVec& a) {
  for (auto& x : a)
    if (x != 0) return false;
  return true;
}

inline QVec to_qvec(const IVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Common denominator and integer content helpers.
inline Int lcm_denominators(const QVec& v) {
  Int l = 1;
  for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

// Unique primitive integer vector that is a positive multiple of v (v != 0).
inline IVec primitive_scale(const QVec& v) {
  Int l = lcm_denominators(v);
  IVec w(v.size());
  Int g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  require(g != 0, "primitive_scale of zero vector");
  for (auto& x : w) x /= g;
  return w;
}

using Rng = std::mt19937_64;

}  // namespace ww
