#pragma once
// Finite vector-set enumeration in hyperbolic and negative-definite lattices.
//
// Everything reduces to one exact core: integer points of an affine sublattice
// on which the form is definite, enumerated recursively from an exact LDL^T
// decomposition with integer-sqrt interval bounds.  No floating point.

#include "lattice.hpp"

#include <functional>

namespace ww::enumerate {

using lat::Lattice;

// All integer u with (u + c) H (u + c)^T in [lo, hi]; H positive definite.
// The sink receives each solution; return order is lexicographic in u.
void enum_core(const exact::QMat& h, const QVec& c, const Rat& lo, const Rat& hi,
               const std::function<void(const IVec&)>& sink);

// Enumerates x = offset + z, z integral, subject to <x, anchors[i]> = value_i
// and norm(x) in a range.  The constraint structure (kernel, LDL) is reused
// across calls with different right-hand sides.
class AffineSliceEnum {
 public:
  // gram may be rational (dual-basis enumerations)
  AffineSliceEnum(exact::QMat gram, std::vector<QVec> anchors);

  // nullopt when the slice form is not definite (negated internally when
  // negative definite); values/offset choose the affine slice
  std::vector<QVec> run(const QVec& offset, const std::vector<Rat>& values, const Rat& norm_lo,
                        const Rat& norm_hi) const;
  bool slice_definite() const { return definite_; }

 private:
  exact::QMat gram_;
  std::vector<QVec> anchors_;
  exact::IMat cons_;       // integer constraint matrix (columns scaled)
  IVec scale_;             // per-constraint scaling
  exact::IMat kernel_;     // rows span {z : z * cons = 0}
  exact::QMat h_;          // kernel gram, made positive definite
  bool negated_ = false;   // true when the slice form was negative definite
  bool definite_ = false;
};

// {v in L : <v,v> = a, <v,v0> = b}; v0 must be in the positive cone.
// With dual = true, v ranges over the dual lattice instead.
std::vector<QVec> enum_norm_pairing(const Lattice& l, const QVec& v0, const Rat& a, const Rat& b,
                                    bool dual = false);

// {v in L : <v,v> = a, <v,v0> > 0, <v,v1> < 0}; a < 0, v0 and v1 in the
// positive cone.  These are the vectors whose wall separates v0 from v1.
std::vector<QVec> enum_separating(const Lattice& l, const QVec& v0, const QVec& v1, const Rat& a);

// All vectors of norm exactly a (a < 0) in a negative-definite lattice,
// or of norm in [lo, hi] with hi < 0; dual = true enumerates the dual.
std::vector<QVec> enum_negdef(const Lattice& l, const Rat& a, bool dual = false);
std::vector<QVec> enum_negdef_range(const Lattice& l, const Rat& lo, const Rat& hi,
                                    bool dual = false);
// count-only variant (norm exactly a), streaming, no storage
size_t count_negdef(const Lattice& l, const Rat& a);

void sort_canonical(std::vector<QVec>& vs);

}  // namespace ww::enumerate
