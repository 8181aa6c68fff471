#ifndef ROOTLEN_ZLATTICE_HPP
#define ROOTLEN_ZLATTICE_HPP

#include "rootlen/rational.hpp"

#include <vector>

namespace rootlen {

/// Column-style Hermite normal form of an integer lattice basis.
/// Columns have strictly increasing pivot rows, positive pivots, zero entries
/// above each pivot, and entries left of a pivot reduced into [0, pivot).
/// Two generating sets span the same lattice iff their forms are identical.
struct Hnf {
  int dim = 0;
  std::vector<std::vector<Int>> cols; // echelon columns
  std::vector<int> pivot_rows;        // pivot row of each column

  bool operator==(const Hnf&) const = default;
};

Hnf hermite_normal_form(const std::vector<LatticeVec>& gens, int dim);

/// Whether v lies in the lattice spanned by the columns of h.
bool in_lattice(const Hnf& h, const LatticeVec& v);

/// Rank of the rational span.
int rational_rank(const std::vector<LatticeVec>& vecs, int dim);

/// Integer normal vectors cutting out the rational span of vecs:
/// u is in span(vecs) iff k . u = 0 for every returned k.
std::vector<LatticeVec> span_normals(const std::vector<LatticeVec>& vecs, int dim);

/// Basis of the full integer kernel lattice {y : row . y = 0 for all rows}
/// via unimodular column reduction.
std::vector<LatticeVec> kernel_lattice(const std::vector<LatticeVec>& rows, int ncols);

} // namespace rootlen

#endif
