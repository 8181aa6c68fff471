#ifndef ROOTLEN_ORACLE_HPP
#define ROOTLEN_ORACLE_HPP

#include "rootlen/root_system.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace rootlen {

/// Brute-force ground truth for the length maps.  Independent of the facet
/// machinery: it only uses the root list.
///
/// brute_length uses meet-in-the-middle: sums of exactly k roots (k <= 6) are
/// tabulated once per system, and a length-r query scans sums of ceil(r/2)
/// roots for complements among sums of floor(r/2).
class BruteOracle {
public:
  explicit BruteOracle(const RootSystem& rs);

  /// Smallest r <= r_max with gamma a sum of r roots; nullopt when r_max is
  /// exceeded (reported, never silently passed).
  std::optional<long long> brute_length(const LatticeVec& gamma, int r_max = 6);

  /// A multiset of exactly r roots summing to gamma (r from brute_length).
  std::vector<LatticeVec> witness(const LatticeVec& gamma, int r);

  /// Exact positive length: distances from 0 by adding positive roots inside
  /// the coordinate box [0, gamma].
  long long brute_positive_length(const LatticeVec& gamma, std::size_t cap = 10000000);

private:
  void extend_tables(int k);
  bool is_sum_of(const LatticeVec& gamma, int r);
  using Table = std::unordered_map<std::uint64_t, std::uint32_t>;
  const RootSystem* rs_;
  std::vector<Table> sums_; // sums_[k]: sums of exactly k roots
};

} // namespace rootlen

#endif
