#ifndef ROOTLEN_LENGTH_HPP
#define ROOTLEN_LENGTH_HPP

#include "rootlen/polytope.hpp"

#include <optional>
#include <vector>

namespace rootlen {

struct LengthResult {
  LatticeVec gamma;
  long long length = 0;
  std::vector<int> attaining; // maximal-root indices attaining the max for dom(gamma)
  std::optional<std::vector<LatticeVec>> decomposition;
};

/// |gamma| = max over facets F of ceil((lambda_F, gamma)): computed through
/// the dominant representative, where the maximum over each facet orbit is
/// attained at the coordinate functional w^_a / m_a.
LengthResult length(const RootSystem& rs, const LatticeVec& gamma);
long long length_value(const RootSystem& rs, const LatticeVec& gamma);

/// Verification path: the same maximum over the full facet enumeration.
long long length_via_facets(const RootSystem& rs, const FacetTable& table,
                            const LatticeVec& gamma);

/// A minimal partition of gamma into |gamma| roots, by greedy peeling:
/// repeatedly subtract the first root (in coordinate order) that lowers the
/// length by one.
std::vector<LatticeVec> decompose(const RootSystem& rs, const LatticeVec& gamma);

/// |gamma|_+ : minimal number of positive roots summing to gamma (gamma must
/// have non-negative coordinates).  Shortest path in the coordinate box.
long long positive_length(const RootSystem& rs, const LatticeVec& gamma,
                          std::size_t cap = 10000000);

/// Type A closed form h(gamma) = sum_i max(a_i - a_{i-1}, 0).
long long horizontal_length_typeA(const RootSystem& rs, const LatticeVec& gamma);

} // namespace rootlen

#endif
