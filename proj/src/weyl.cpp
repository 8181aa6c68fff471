#include "rootlen/weyl.hpp"

#include "rootlen/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

namespace rootlen {

namespace {

void check_letter(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw InvalidInput("reflection index out of range");
}

// Scaled-integer view of a rational vector: v = num / den componentwise.
// Simple reflections act on the numerator vector by the Cartan matrix, so
// orbit enumeration runs on plain integer vectors.
struct Scaled {
  LatticeVec num;
  Int den;
};

Scaled scale_vec(const RatVec& v) {
  Int den = 1;
  for (const Rat& x : v) den = boost::multiprecision::lcm(den, rat_den(x));
  LatticeVec num(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int n = rat_num(v[i]) * (den / rat_den(v[i]));
    if (n > std::numeric_limits<Coord>::max() / 4 || n < std::numeric_limits<Coord>::min() / 4)
      throw CapExceeded("scaled coordinates too large");
    num[i] = static_cast<Coord>(n);
  }
  return {std::move(num), den};
}

RatVec unscale(const LatticeVec& num, const Int& den) {
  RatVec v(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) v[i] = Rat(Int(num[i]), den);
  return v;
}

} // namespace

LatticeVec reflect_simple(const RootSystem& rs, int i, const LatticeVec& v) {
  check_letter(rs, i);
  LatticeVec w = v;
  w[i - 1] -= rs.cartan_pair(v, i);
  return w;
}

RatVec reflect_simple(const RootSystem& rs, int i, const RatVec& v) {
  check_letter(rs, i);
  RatVec w = v;
  w[i - 1] -= rs.cartan_pair(v, i);
  return w;
}

RatVec act_word(const RootSystem& rs, const WeylWord& w, const RatVec& v) {
  RatVec r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect_simple(rs, *it, r);
  return r;
}

LatticeVec act_word(const RootSystem& rs, const WeylWord& w, const LatticeVec& v) {
  LatticeVec r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect_simple(rs, *it, r);
  return r;
}

std::vector<int> full_delta(const RootSystem& rs) {
  std::vector<int> a(rs.rank());
  std::iota(a.begin(), a.end(), 1);
  return a;
}

std::vector<int> delta_minus(const RootSystem& rs, int alpha) {
  std::vector<int> a;
  for (int i = 1; i <= rs.rank(); ++i)
    if (i != alpha) a.push_back(i);
  return a;
}

namespace {

// Ascent loop shared by the integer and rational paths.  A sign test on
// (v, alpha_i^vee) is a sign test on (v, alpha_i).
template <typename Vec>
Dominant<Vec> dominantize(const RootSystem& rs, Vec v, const std::vector<int>& A) {
  for (int i : A) check_letter(rs, i);
  WeylWord word;
  for (;;) {
    int neg = 0;
    for (int i : A)
      if (rs.cartan_pair(v, i) < 0) {
        neg = i;
        break;
      }
    if (neg == 0) break;
    v = reflect_simple(rs, neg, v);
    word.push_back(neg);
  }
  std::reverse(word.begin(), word.end());
  return {std::move(v), std::move(word)};
}

} // namespace

Dominant<RatVec> to_dominant(const RootSystem& rs, const RatVec& v, const std::vector<int>& A) {
  return dominantize(rs, v, A);
}
Dominant<LatticeVec> to_dominant(const RootSystem& rs, const LatticeVec& v,
                                 const std::vector<int>& A) {
  return dominantize(rs, v, A);
}
Dominant<RatVec> to_dominant(const RootSystem& rs, const RatVec& v) {
  return dominantize(rs, v, full_delta(rs));
}
Dominant<LatticeVec> to_dominant(const RootSystem& rs, const LatticeVec& v) {
  return dominantize(rs, v, full_delta(rs));
}

WeylWord canonical_word_from_dominant(const RootSystem& rs, const RatVec& v) {
  // to_dominant applies s_{i_k}..s_{i_1} (smallest descent first); the word
  // for the minimal representative mapping the dominant vector back to v is
  // the reverse, and greedy smallest-descent makes it lexicographically
  // smallest among the reduced words.
  return word_inverse(to_dominant(rs, v).word);
}

std::vector<OrbitElement> orbit_with_words(const RootSystem& rs, const RatVec& v,
                                           std::size_t cap) {
  Scaled s = scale_vec(v);
  WeylWord base = to_dominant(rs, s.num).word; // act_word(base, v) is dominant

  std::set<LatticeVec> seen{s.num};
  std::deque<LatticeVec> queue{s.num};
  while (!queue.empty()) {
    LatticeVec u = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      LatticeVec w = reflect_simple(rs, i, u);
      if (seen.insert(w).second) {
        if (seen.size() > cap) throw CapExceeded("orbit size exceeds cap");
        queue.push_back(std::move(w));
      }
    }
  }

  std::vector<OrbitElement> out;
  out.reserve(seen.size());
  for (const LatticeVec& u : seen) {
    WeylWord tau = word_inverse(to_dominant(rs, u).word);
    // witness from the original v: first reach the dominant vector, then u
    tau.insert(tau.end(), base.begin(), base.end());
    out.push_back({unscale(u, s.den), std::move(tau)});
  }
  std::sort(out.begin(), out.end(), [](const OrbitElement& a, const OrbitElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

std::vector<LatticeVec> parabolic_orbit(const RootSystem& rs, const LatticeVec& v,
                                        const std::vector<int>& A, std::size_t cap) {
  std::map<LatticeVec, bool> seen;
  std::deque<LatticeVec> queue;
  seen[v] = true;
  queue.push_back(v);
  while (!queue.empty()) {
    LatticeVec u = queue.front();
    queue.pop_front();
    for (int i : A) {
      LatticeVec w = reflect_simple(rs, i, u);
      if (seen.emplace(w, true).second) {
        if (seen.size() > cap) throw CapExceeded("orbit size exceeds cap");
        queue.push_back(std::move(w));
      }
    }
  }
  std::vector<LatticeVec> out;
  out.reserve(seen.size());
  for (const auto& kv : seen) out.push_back(kv.first);
  return out;
}

std::vector<RatVec> parabolic_orbit(const RootSystem& rs, const RatVec& v,
                                    const std::vector<int>& A, std::size_t cap) {
  Scaled s = scale_vec(v);
  std::vector<RatVec> out;
  for (const LatticeVec& u : parabolic_orbit(rs, s.num, A, cap)) out.push_back(unscale(u, s.den));
  return out;
}

std::vector<WeylWord> coset_reps(const RootSystem& rs, const std::vector<int>& A,
                                 std::size_t cap) {
  RatVec x = parabolic_fixed_vector(rs, A);
  std::vector<WeylWord> words;
  for (const OrbitElement& e : orbit_with_words(rs, x, cap)) words.push_back(e.word);
  return words;
}

std::vector<int> stabilizer_simple_roots(const RootSystem& rs, const RatVec& v) {
  std::vector<int> zero;
  for (int i = 1; i <= rs.rank(); ++i) {
    Rat p = rs.cartan_pair(v, i);
    if (p < 0) throw InvalidInput("stabilizer_simple_roots requires a dominant vector");
    if (p == 0) zero.push_back(i);
  }
  return zero;
}

RatVec parabolic_fixed_vector(const RootSystem& rs, const std::vector<int>& A) {
  RatVec x(rs.rank(), 0);
  for (int i = 1; i <= rs.rank(); ++i)
    if (std::find(A.begin(), A.end(), i) == A.end()) x = add(x, rs.weight(i));
  return x;
}

} // namespace rootlen
