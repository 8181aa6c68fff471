#ifndef ROOTLEN_WEYL_HPP
#define ROOTLEN_WEYL_HPP

#include "rootlen/root_system.hpp"

#include <cstddef>
#include <vector>

namespace rootlen {

/// A Weyl group element as a word in simple reflections (1-based letters).
/// Words act with the leftmost letter applied last:
/// act_word({1,2}, v) = s_1(s_2(v)).  The empty word is the identity.
using WeylWord = std::vector<int>;

inline WeylWord word_inverse(WeylWord w) {
  std::reverse(w.begin(), w.end());
  return w;
}

RatVec reflect_simple(const RootSystem& rs, int i, const RatVec& v);
LatticeVec reflect_simple(const RootSystem& rs, int i, const LatticeVec& v);

RatVec act_word(const RootSystem& rs, const WeylWord& w, const RatVec& v);
LatticeVec act_word(const RootSystem& rs, const WeylWord& w, const LatticeVec& v);

/// All simple-root indices, 1..rank.
std::vector<int> full_delta(const RootSystem& rs);
/// Delta minus one index.
std::vector<int> delta_minus(const RootSystem& rs, int alpha);

template <typename Vec>
struct Dominant {
  Vec vec;
  WeylWord word; // act_word(word, input) == vec, word in W_A
};

/// A-dominant representative by ascent, always applying the smallest-index
/// violated reflection.  The result is independent of the reduction path.
Dominant<RatVec> to_dominant(const RootSystem& rs, const RatVec& v,
                             const std::vector<int>& A);
Dominant<LatticeVec> to_dominant(const RootSystem& rs, const LatticeVec& v,
                                 const std::vector<int>& A);
Dominant<RatVec> to_dominant(const RootSystem& rs, const RatVec& v);
Dominant<LatticeVec> to_dominant(const RootSystem& rs, const LatticeVec& v);

/// The canonical word for the minimal coset representative sending the
/// dominant representative of v's orbit to v: the lexicographically smallest
/// reduced word, built by greedy smallest-descent.
WeylWord canonical_word_from_dominant(const RootSystem& rs, const RatVec& v);

struct OrbitElement {
  RatVec vec;
  WeylWord word; // canonical: act_word(word, start) == vec
};

/// Full W-orbit of v, each element with its canonical witness word, ordered
/// by (word length, word).  Throws CapExceeded past `cap` elements.
std::vector<OrbitElement> orbit_with_words(const RootSystem& rs, const RatVec& v,
                                           std::size_t cap = 1000000);

/// Orbit of a lattice vector under the parabolic W_A (no words).
std::vector<LatticeVec> parabolic_orbit(const RootSystem& rs, const LatticeVec& v,
                                        const std::vector<int>& A,
                                        std::size_t cap = 1000000);
std::vector<RatVec> parabolic_orbit(const RootSystem& rs, const RatVec& v,
                                    const std::vector<int>& A,
                                    std::size_t cap = 1000000);

/// Minimal-length representatives of W/W_A as canonical words.
std::vector<WeylWord> coset_reps(const RootSystem& rs, const std::vector<int>& A,
                                 std::size_t cap = 1000000);

/// {i : (v, alpha_i) = 0} for a Delta-dominant v; throws if v is not dominant.
std::vector<int> stabilizer_simple_roots(const RootSystem& rs, const RatVec& v);

/// Sum of fundamental weights over indices NOT in A; its stabilizer is W_A.
RatVec parabolic_fixed_vector(const RootSystem& rs, const std::vector<int>& A);

} // namespace rootlen

#endif
