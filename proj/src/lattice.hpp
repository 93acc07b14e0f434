#pragma once
// Integral lattices with exact Gram data: duals, discriminant groups and
// forms, isometries, reflections, embeddings, orthogonal complements and
// dual projections.
//
// A vector is a row of rational coordinates in the fixed basis of its home
// lattice; dual vectors use the same basis (no separate dual basis).

#include "exactalg.hpp"

#include <optional>
#include <string>

namespace ww::lat {

using exact::IMat;
using exact::QMat;

struct Lattice {
  size_t rank = 0;
  IMat gram;
  bool even = false;
  std::string name;
  QMat gram_inv;
  // orients the positive cone of a hyperbolic lattice; empty when unused
  QVec cone_witness;
};

Lattice make_lattice(IMat gram, std::string name = "");

Rat pairing(const Lattice& l, const QVec& x, const QVec& y);
Rat norm_of(const Lattice& l, const QVec& x);
bool in_positive_cone(const Lattice& l, const QVec& x);        // norm > 0, witness side
bool in_positive_cone_closure(const Lattice& l, const QVec& x);

// Sylvester signature (positives, negatives) of gram over the reals,
// computed exactly by rational symmetric reduction.
std::pair<int, int> signature(const Lattice& l);

bool is_negative_definite(const Lattice& l);

struct DiscriminantGroup {
  std::vector<Int> factors;   // invariant factors > 1, d1 | d2 | ...
  std::vector<QVec> gens;     // lifted generators in L tensor Q, gens[i] has order factors[i]
  IMat gv;                    // gram * V from the SNF, for coordinate extraction
  std::vector<size_t> sel;    // indices of the nontrivial factors in the SNF diagonal
  Int order = 1;
};

DiscriminantGroup discriminant_group(const Lattice& l);
// coordinates of a dual vector in the cyclic decomposition, reduced mod factors
std::vector<Int> disc_coords(const DiscriminantGroup& dg, const QVec& dual_vec);
// discriminant form value q(x) in [0,2) for an even lattice
Rat disc_q(const Lattice& l, const QVec& dual_vec);
bool is_dual_vector(const Lattice& l, const QVec& x);

struct Isometry {
  IMat m;  // acts on row vectors from the right: x -> x * m
  bool operator==(const Isometry& o) const { return m == o.m; }
};

Isometry make_isometry(const Lattice& l, IMat m);
Isometry make_isometry(const Lattice& l, const QMat& m);  // must be integral
Isometry identity_isometry(const Lattice& l);
Isometry compose(const Isometry& a, const Isometry& b);   // x^(ab) = (x^a)^b
Isometry inverse_of(const Isometry& a);
QVec apply(const QVec& x, const Isometry& g);
bool is_identity(const Isometry& g);

// Reflection in r: x -> x - 2<x,r>/<r,r> r.  Integral for <r,r> = -2 and
// r in L; other norms are accepted only when the map is integral on L.
Isometry reflection(const Lattice& l, const QVec& r);

// True iff g acts as +-identity on the discriminant group and preserves the
// positive cone (checked against the cone witness when present).
bool in_O_omega(const Lattice& l, const DiscriminantGroup& dg, const Isometry& g);
// the discriminant action alone: +1, -1, or 0 when neither
int disc_action_sign(const DiscriminantGroup& dg, const Isometry& g);

struct Embedding {
  Lattice source;
  Lattice target;
  IMat map;  // source.rank x target.rank, rows = images of source basis vectors
};

Embedding make_embedding(Lattice source, Lattice target, IMat map);
QVec embed(const Embedding& e, const QVec& x);

// basis of {v in target : <v, im(e)> = 0} with its induced gram
Embedding orthogonal_complement(const Embedding& e);
// torsion-freeness of target/im(e), via the Smith normal form of the map
bool is_primitive(const Embedding& e);
// unique w in source tensor Q with <w, s> = <v, e(s)> for all s
QVec project_to_dual(const Embedding& e, const QVec& v);

}  // namespace ww::lat
