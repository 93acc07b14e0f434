#pragma once
// The two concrete Picard lattices: the rank-17 lattice of the 16-nodal
// (Kummer) quartic fixture embedded in the rank-26 lattice through the 32
// published octads, and the rank-16 lattice of the 15-nodal quartic fixture
// embedded as the orthogonal complement of the nodal class N0.
//
// Named classes use string keys: "N0", "Nij", "Ti", "Tij" for the rank-17
// fixture; "Eij" (duads), "sEij" (tropes, i<j<=5), "h4", "h6" for the
// rank-16 fixture.

#include "leech.hpp"

#include <map>

namespace ww::fix {

struct K3Bundle {
  std::string name;
  lat::Lattice s;
  lat::Embedding emb;          // S into the rank-26 lattice
  lat::Lattice r;              // orthogonal complement of S
  lat::Embedding r_emb;        // R into the rank-26 lattice
  lat::DiscriminantGroup disc;
  lat::DiscriminantGroup disc_r;
  QVec alpha;                  // interior dual point pr_S(w0), S coordinates
  QVec w_r;                    // pr_R(w0), R coordinates
  std::map<std::string, QVec> named;

  const QVec& cls(const std::string& key) const;
};

// built on first use; s15() also triggers s16()
const K3Bundle& s16();
const K3Bundle& s15();

// extra data of the rank-16 fixture tied to its sublattice realization
struct S15Links {
  lat::Embedding in_s16;  // rank-16 lattice into the rank-17 lattice
};
const S15Links& s15_links();

// ADE type of the (-2)-vectors of a negative-definite lattice, e.g. "6A1+A3"
std::string root_system_type(const lat::Lattice& l);

// the 32 published octads with their curve labels, in fixed order:
// N0, N12..N56, T1..T6, T12..T45
const std::vector<std::pair<std::string, std::string>>& octad_table();

}  // namespace ww::fix
