#ifndef ROOTLEN_MONOID_HPP
#define ROOTLEN_MONOID_HPP

#include "rootlen/polytope.hpp"
#include "rootlen/zlattice.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace rootlen {

/// Monoid data attached to a parabolic face F: the roots V(F) in the face, the
/// defining functional, the Z-span basis in Hermite form, and (for facets) the
/// separating functionals towards the adjacent facets.
///
/// N(F) = non-negative integer span of V(F), Z(F) = integer span,
/// C(V(F)) = rational cone, M(F) = C(V(F)) n R.
/// The context borrows the RootSystem; keep it alive.  Instances memoize the
/// N(F)-span search, so a single instance is not safe for concurrent use;
/// separate instances share nothing mutable.
class MonoidCtx {
public:
  /// Coordinate facet F(alpha; tau), alpha maximal.
  static MonoidCtx facet(const RootSystem& rs, int alpha, const WeylWord& tau = {});
  /// Arbitrary parabolic face (canonicalized); a singleton A yields a facet.
  static MonoidCtx face(const RootSystem& rs, const FaceSpec& spec);

  const RootSystem& root_system() const { return *rs_; }
  const FaceSpec& spec() const { return spec_; }
  bool is_facet() const { return is_facet_; }
  int alpha() const { return alpha_; }
  const std::vector<LatticeVec>& vroots() const { return vroots_; }
  const RatVec& lambda() const { return lambda_; }
  /// Facets only: the nabla family separating F from its adjacent facets.
  const std::vector<RatVec>& separators() const { return separators_; }
  const Hnf& zbasis() const { return zbasis_; }

  Rat level(const LatticeVec& g) const;

  /// gamma in C(V(F)): the facet functional attains the global maximum at
  /// gamma (and, for lower faces, gamma lies in the span of the face).
  bool in_cone(const LatticeVec& g) const;

  /// gamma in Z(F), by Hermite-form substitution.
  bool in_zspan(const LatticeVec& g) const;

  /// gamma in N(F); returns a witness multiset summing to gamma on success.
  /// The search depth is exactly the level, so a fractional or negative level
  /// fails immediately.
  std::optional<std::vector<LatticeVec>> in_nspan(const LatticeVec& g) const;

  /// Proper element criterion (facets only): the (Delta - alpha)-dominant
  /// conjugate pairs strictly positively with every separator nabla_{alpha,delta}.
  /// Throws InvalidInput when gamma is not in M(F).
  bool is_proper(const LatticeVec& g) const;

  /// Enumerates M(F) in the level slab [0, bound]; fn sees each point once
  /// (excluding 0).  Throws CapExceeded if the bounding box exceeds cap.
  void for_each_slab_point(const Rat& bound, std::size_t cap,
                           const std::function<void(const LatticeVec&)>& fn) const;

  /// Nonzero slab elements gamma with gamma - v outside M(F) for every
  /// v in V(F); these are the nonzero <=_F-minimal elements up to the bound.
  std::vector<LatticeVec> minimal_elements(const Rat& bound,
                                           std::size_t cap = 10000000) const;

private:
  MonoidCtx() = default;
  void init(const RootSystem& rs, const FaceSpec& spec);

  const RootSystem* rs_ = nullptr;
  std::shared_ptr<const FacetTable> table_;
  FaceSpec spec_;
  bool is_facet_ = false;
  int alpha_ = 0; // facet: the maximal root index
  std::vector<LatticeVec> vroots_;
  RatVec lambda_;
  std::size_t lambda_index_ = 0;
  std::vector<RatVec> separators_;
  std::vector<LatticeVec> separator_covs_; // integer-cleared Gram covectors
  std::vector<LatticeVec> span_normals_;   // empty for facets
  Hnf zbasis_;
  std::vector<int> psi_;                   // facet: Psi_alpha (paired with separators of tau = e)
  mutable std::map<std::pair<LatticeVec, std::size_t>, bool> nspan_memo_;
};

struct NormalityResult {
  bool normal = false;
  std::optional<LatticeVec> witness; // in C n Z but not N
};

/// Bounded normality check: every Z(F)-point of the cone with level <= bound
/// lies in N(F).
NormalityResult is_normal(const MonoidCtx& ctx, const Rat& level_bound,
                          std::size_t cap = 10000000);

struct IntegralClosureResult {
  bool closed = false;
  std::optional<LatticeVec> witness; // in M but not N
  bool matches_mark_prediction = false; // closed == (m_alpha == 1)
};

/// Bounded integral-closure check M(F) c N(F) on facets, compared against the
/// m_alpha = 1 prediction.
IntegralClosureResult is_integrally_closed(const MonoidCtx& ctx, const Rat& level_bound,
                                           std::size_t cap = 10000000);

enum class GeneratorRoute { Auto, Slab, Criterion };

struct GeneratorReport {
  std::string type;
  int alpha = 0;
  std::vector<LatticeVec> generators; // proper minimal elements of M(F(alpha))
  std::string certificate;            // "slab-exhaustive" or "criterion"
  long long level_bound = 0;          // slab route only
  bool stable = false;                // slab route: unchanged at bound + 1
};

/// Proper minimal elements of M(F(alpha)) for a coordinate facet.
///
/// slab route: exhaustive scan of the level slab (with a stability re-check at
/// bound + 1).  criterion route: candidate elements are confined to a finite
/// box by the minimality test inequality for beta = theta together with the
/// properness and cone-wall inequalities, then checked explicitly; this is
/// the route for E7/E8 where slabs are out of reach.
GeneratorReport proper_minimal_generators(const RootSystem& rs, int alpha,
                                          long long level_bound = 7,
                                          GeneratorRoute route = GeneratorRoute::Auto,
                                          std::size_t cap = 100000000);

} // namespace rootlen

#endif
