#pragma once
// The binary Golay code on P^1(F_23), the negative-definite Leech lattice,
// the even unimodular lattice of signature (1,25), Weyl vectors and Leech
// roots.
//
// Coordinate conventions: subsets of Omega = {inf, 0, ..., 22} are 24-bit
// masks with bit 0 = inf and bit 1+k = k.  A vector of the rank-26 lattice
// has coordinates (a, b, c1..c24) where (a, b) is the hyperbolic-plane part
// and c are coordinates in the chosen Leech basis.

#include "enumerate.hpp"

#include <cstdint>
#include <optional>

namespace ww::leech {

struct GolayCode {
  std::vector<uint32_t> words;   // all 4096 codewords, sorted
  std::vector<uint32_t> octads;  // the 759 weight-8 words, sorted
  bool contains(uint32_t w) const;
};

// Extended quadratic-residue construction, verified by weight enumerator and
// the Steiner S(5,8,24) covering property; throws on any failed self-check.
GolayCode build_golay();

std::string omega_set_str(uint32_t mask);
uint32_t parse_omega_set(const std::string& text);

struct Leech {
  GolayCode golay;
  exact::IMat basis;      // rows: Leech basis vectors in Z^Omega
  exact::QMat basis_inv;
  lat::Lattice lambda;    // rank 24, gram(i,j) = -(b_i . b_j)/8
  lat::Lattice ii;        // rank 26: hyperbolic plane + lambda
};

// built on first use; immutable afterwards
const Leech& get();

// membership test against the basis: Z^Omega coords -> basis coords
std::optional<IVec> lambda_coords(const Leech& le, const IVec& omega_vec);
IVec omega_coords(const Leech& le, const IVec& lambda_c);
// the norm-(-4) lattice vector 2 nu_K of an octad K, in basis coords
IVec octad_vector(const Leech& le, uint32_t octad);

IVec ii_vector(long a, long b, const IVec& lambda_c);
QVec ii_qvec(long a, long b, const IVec& lambda_c);
IVec weyl0();  // (1, 0, 0)

// r0(lambda) = (-1 - |lambda|^2/2, 1, lambda), a Leech root for weyl0
IVec leech_root(const Leech& le, const IVec& lambda_c);

// nonzero, primitive, isotropic, in the closed positive cone, with
// (Zw)-perp / Zw even unimodular of rank 24 without roots
bool is_weyl(const Leech& le, const QVec& w);

// In-place pair-reduction sweeps shortening a basis of a definite lattice
// given by ambient gram; used before enumerating in quotient lattices.
void size_reduce_rows(exact::IMat& rows, const exact::IMat& ambient_gram);

}  // namespace ww::leech
