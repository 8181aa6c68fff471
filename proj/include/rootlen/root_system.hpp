#ifndef ROOTLEN_ROOT_SYSTEM_HPP
#define ROOTLEN_ROOT_SYSTEM_HPP

#include "rootlen/rational.hpp"

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace rootlen {

/// An irreducible crystallographic reduced root system in Bourbaki numbering.
///
/// All vectors are coordinate vectors over the simple roots alpha_1..alpha_l.
/// The scalar product is normalized so long roots have squared length 2.
/// Instances are immutable after construction and safe to share across threads.
class RootSystem {
public:
  /// Builds the root datum for a valid irreducible type
  /// (A l>=1, B l>=2, C l>=2, D l>=4, E 6..8, F 4, G 2); throws InvalidInput otherwise.
  static RootSystem build(char family, int rank);

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, family_) + std::to_string(rank_); }

  /// Cartan matrix, cartan()[i][j] = <alpha_{i+1}, alpha_{j+1}^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Gram matrix of the simple roots, long roots normalized to squared length 2.
  const std::vector<RatVec>& gram() const { return gram_; }

  const std::vector<LatticeVec>& roots() const { return roots_; }
  const std::vector<LatticeVec>& positive_roots() const { return positive_; }
  const LatticeVec& theta() const { return theta_; }
  /// Highest short root; absent iff the system is simply laced.
  const std::optional<LatticeVec>& theta_short() const { return theta_s_; }
  /// Coordinates m_alpha of theta over the simple roots.
  const LatticeVec& marks() const { return marks_; }

  /// Fundamental coweight dual to alpha_i (1-based): (coweight(i), alpha_j) = delta_ij.
  const RatVec& coweight(int i) const;
  /// Fundamental weight dual to the coroot of alpha_i (1-based).
  const RatVec& weight(int i) const;

  bool is_root(const LatticeVec& v) const;
  bool is_long(const LatticeVec& root) const;

  Rat pairing(const RatVec& u, const RatVec& v) const;
  Rat pairing(const RatVec& u, const LatticeVec& v) const;
  Rat norm2(const LatticeVec& v) const;

  /// (v, alpha_j^vee) for 1-based j; integral on lattice vectors.
  Coord cartan_pair(const LatticeVec& v, int j) const;
  Rat cartan_pair(const RatVec& v, int j) const;

  /// Adjacency in the affine Dynkin diagram on nodes {0, 1..l} (0 = affine node).
  bool affine_adjacent(int a, int b) const;
  /// Simple roots adjacent to the affine node (1-based).
  const std::vector<int>& affine_node_neighbors() const { return aff0_; }

  /// |W| from the classification closed forms.
  Int weyl_order() const;
  /// |W_A| for the standard parabolic on A (1-based indices), by classifying
  /// the components of the induced subdiagram.
  Int parabolic_order(const std::vector<int>& A) const;

private:
  RootSystem() = default;

  char family_ = 0;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<RatVec> gram_;
  std::vector<LatticeVec> roots_;
  std::vector<LatticeVec> positive_;
  LatticeVec theta_;
  std::optional<LatticeVec> theta_s_;
  LatticeVec marks_;
  std::vector<RatVec> coweights_;
  std::vector<RatVec> weights_;
  std::vector<int> aff0_;
  std::unordered_set<std::uint64_t> root_keys_;
};

/// Parses a single irreducible type token like "B3" or "E8".
std::pair<char, int> parse_type_token(const std::string& token);

} // namespace rootlen

#endif
