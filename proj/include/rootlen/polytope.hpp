#ifndef ROOTLEN_POLYTOPE_HPP
#define ROOTLEN_POLYTOPE_HPP

#include "rootlen/root_system.hpp"
#include "rootlen/weyl.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace rootlen {

/// Simple roots whose removal leaves the affine diagram (minus them) connected;
/// these index the facet orbits of the root polytope.
std::vector<int> maximal_roots(const RootSystem& rs);

/// Whether (Delta \ A) + {alpha_0} is connected in the affine diagram.
bool in_I(const RootSystem& rs, const std::vector<int>& A);

struct ClosureData {
  std::vector<int> boundary; // dA
  std::vector<int> closure;  // Abar; F(B) = F(A) iff dA <= B <= Abar
  std::vector<int> stab;     // A* = Delta \ dA; W_{A*} stabilizes F(A)
  LatticeVec beta;           // beta_A, the dominance-least root of V(A)
};

ClosureData closure_data(const RootSystem& rs, const std::vector<int>& A);

/// A parabolic face F(A; tau).  Canonical form: A in I (A = Abar) and tau the
/// canonical minimal representative in W^{A*}.
struct FaceSpec {
  std::vector<int> A;
  WeylWord tau;
};

/// Canonicalizes an arbitrary (A, tau): A is replaced by its closure (which
/// always lies in I) and tau by the minimal coset representative word.
FaceSpec canonical_face(const RootSystem& rs, const std::vector<int>& A,
                        const WeylWord& tau = {});

/// V(A; tau) = F(A; tau) n Phi.  Computed both as the coweight level set and
/// as {tau b : b >= beta_A}; the two routes are asserted equal.
std::vector<LatticeVec> face_roots(const RootSystem& rs, const FaceSpec& spec);

/// A facet F(alpha; tau) with its defining functional lambda = tau w^_a / m_a.
struct Facet {
  int alpha = 0;
  WeylWord tau;
  RatVec lambda;
};

std::vector<Facet> enumerate_facets(const RootSystem& rs, std::size_t cap = 1000000);

/// Inclusion test F(B; sigma) <= F(A; tau) via the parabolic criterion
/// (B >= A and tau^-1 sigma in W_{A*} W_{B*}).
bool face_contains(const RootSystem& rs, const FaceSpec& outer, const FaceSpec& inner);

struct AdjacentFacet {
  Facet facet;
  bool autointersection = false;
};

/// The facets adjacent to the coordinate facet F(alpha).
std::vector<AdjacentFacet> adjacent_facets(const RootSystem& rs, int alpha);

/// Separating data between F(alpha) and its adjacent facets.
struct PsiEntry {
  int delta = 0;
  bool autointersection = false; // delta is the non-maximal root of case (ii)
  RatVec nabla;                  // w^_a/m_a - w^_d/m_d
  Rat d_long;                    // max of nabla over V(alpha) n Phi_long
  std::optional<Rat> d_short;    // max over V(alpha) n Phi_short; empty if none
};

struct PsiData {
  int alpha = 0;
  std::vector<PsiEntry> entries;
};

PsiData psi_and_nabla(const RootSystem& rs, int alpha);

/// Exact barycenter of V(A) for A in I; Delta-dominant with stabilizer W_{A*}.
RatVec barycenter(const RootSystem& rs, const std::vector<int>& A);

/// The functionals of all facets (the half-space presentation of the polytope).
std::vector<RatVec> halfspace_presentation(const RootSystem& rs);

/// Shared per-system facet data: functionals plus exact integer covectors
/// (common positive scale) so that functional comparisons are integer dots.
class FacetTable {
public:
  explicit FacetTable(const RootSystem& rs, std::size_t cap = 1000000);

  const std::vector<Facet>& facets() const { return facets_; }
  /// (lambda_k, g) * scale, as an exact integer.
  Coord scaled_value(std::size_t k, const LatticeVec& g) const;
  const Int& scale() const { return scale_; }
  Rat value(std::size_t k, const LatticeVec& g) const;

  /// max_k (lambda_k, g) and whether index `k` attains it.
  Coord max_scaled_value(const LatticeVec& g) const;
  bool attains_max(std::size_t k, const LatticeVec& g) const;
  std::size_t index_of(const RatVec& lambda) const; // throws if absent

private:
  std::vector<Facet> facets_;
  std::vector<LatticeVec> covectors_; // row k: scale * Gram * lambda_k
  Int scale_ = 1;
};

/// Process-wide cache of facet tables keyed by root-system type.
std::shared_ptr<const FacetTable> facet_table(const RootSystem& rs);

} // namespace rootlen

#endif
