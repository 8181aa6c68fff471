#ifndef ROOTLEN_RATIONAL_HPP
#define ROOTLEN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rootlen {

// All arithmetic in this library is exact.  Rat is an arbitrary-precision
// rational kept in lowest terms with positive denominator; Int its integer
// counterpart.  Lattice elements (roots, elements of R) carry small integer
// coordinates, so they use plain 64-bit coordinates.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Coord = std::int64_t;
using LatticeVec = std::vector<Coord>;
using RatVec = std::vector<Rat>;

inline RatVec to_rat(const LatticeVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

inline LatticeVec add(const LatticeVec& a, const LatticeVec& b) {
  LatticeVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline LatticeVec sub(const LatticeVec& a, const LatticeVec& b) {
  LatticeVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline LatticeVec neg(const LatticeVec& a) {
  LatticeVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline bool is_zero(const LatticeVec& a) {
  for (Coord c : a)
    if (c != 0) return false;
  return true;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec scale(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int f = n / d;
  if (f * d < n) ++f;
  return f;
}

/// Largest integer <= q.
inline Int floor_rat(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int f = n / d;
  if (f * d > n) --f;
  return f;
}

/// Canonical exact serialization: "p" for integers, "p/q" otherwise.
std::string rat_to_string(const Rat& q);

/// Parses "p" or "p/q"; throws InvalidInput on malformed text.
Rat rat_from_string(const std::string& s);

/// Packs a small integer vector (|coord| < 128, length <= 8) into a hash key.
std::uint64_t pack_key(const LatticeVec& v);

/// Whether every |coordinate| < 128 so that pack_key is injective.
bool packable(const LatticeVec& v);

} // namespace rootlen

#endif
