#include "rootlen/rational.hpp"

#include "rootlen/errors.hpp"

#include <cstdlib>

namespace rootlen {

std::string rat_to_string(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d <= 0) throw InvalidInput("rational denominator must be positive: " + s);
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw InvalidInput("malformed rational literal: " + s);
  }
}

std::uint64_t pack_key(const LatticeVec& v) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(v[i] + 128)) << (8 * i);
  return key;
}

bool packable(const LatticeVec& v) {
  if (v.size() > 8) return false;
  for (Coord c : v)
    if (c < -127 || c > 127) return false;
  return true;
}

} // namespace rootlen
