#include "rootlen/length.hpp"

#include "rootlen/errors.hpp"
#include "rootlen/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace rootlen {

namespace {

void check_dim(const RootSystem& rs, const LatticeVec& g) {
  if (static_cast<int>(g.size()) != rs.rank()) throw InvalidInput("dimension mismatch");
}

long long ceil_div(Coord a, Coord b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

} // namespace

LengthResult length(const RootSystem& rs, const LatticeVec& gamma) {
  check_dim(rs, gamma);
  LengthResult res;
  res.gamma = gamma;
  if (is_zero(gamma)) return res;
  LatticeVec dom = to_dominant(rs, gamma).vec;
  long long best = 0;
  for (int a : maximal_roots(rs)) {
    // (w^_a, dom) is the a-th coordinate of dom
    long long v = ceil_div(dom[a - 1], rs.marks()[a - 1]);
    if (v > best) {
      best = v;
      res.attaining.clear();
    }
    if (v == best) res.attaining.push_back(a);
  }
  res.length = best;
  return res;
}

long long length_value(const RootSystem& rs, const LatticeVec& gamma) {
  return length(rs, gamma).length;
}

long long length_via_facets(const RootSystem& rs, const FacetTable& table,
                            const LatticeVec& gamma) {
  check_dim(rs, gamma);
  if (is_zero(gamma)) return 0;
  long long best = 0;
  for (std::size_t k = 0; k < table.facets().size(); ++k) {
    Rat v = table.value(k, gamma);
    if (v > 0) best = std::max(best, static_cast<long long>(ceil_rat(v)));
  }
  return best;
}

std::vector<LatticeVec> decompose(const RootSystem& rs, const LatticeVec& gamma) {
  check_dim(rs, gamma);
  std::vector<LatticeVec> parts;
  LatticeVec rest = gamma;
  long long k = length_value(rs, rest);
  while (k > 0) {
    bool found = false;
    for (const auto& b : rs.roots()) {
      LatticeVec next = sub(rest, b);
      if (length_value(rs, next) == k - 1) {
        parts.push_back(b);
        rest = std::move(next);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidInput("no root lowers the length; formula violated");
    --k;
  }
  if (!is_zero(rest)) throw InvalidInput("decomposition did not terminate at zero");
  return parts;
}

long long positive_length(const RootSystem& rs, const LatticeVec& gamma, std::size_t cap) {
  check_dim(rs, gamma);
  for (Coord c : gamma)
    if (c < 0) throw InvalidInput("positive_length requires non-negative coordinates");
  if (is_zero(gamma)) return 0;

  // shortest path from gamma to 0, steps subtract positive roots; every
  // intermediate sum of a positive partition stays inside the box [0, gamma]
  const int l = rs.rank();
  std::size_t states = 1;
  std::vector<std::size_t> stride(l, 1);
  for (int i = 0; i < l; ++i) {
    stride[i] = states;
    states *= static_cast<std::size_t>(gamma[i]) + 1;
    if (states > cap) throw CapExceeded("positive_length state space exceeds cap");
  }
  auto index_of = [&](const LatticeVec& v) {
    std::size_t idx = 0;
    for (int i = 0; i < l; ++i) idx += stride[i] * static_cast<std::size_t>(v[i]);
    return idx;
  };
  std::vector<int> dist(states, -1);
  std::deque<LatticeVec> queue{gamma};
  dist[index_of(gamma)] = 0;
  while (!queue.empty()) {
    LatticeVec u = queue.front();
    queue.pop_front();
    int du = dist[index_of(u)];
    if (is_zero(u)) return du;
    for (const auto& b : rs.positive_roots()) {
      LatticeVec w = sub(u, b);
      if (std::any_of(w.begin(), w.end(), [](Coord c) { return c < 0; })) continue;
      std::size_t wi = index_of(w);
      if (dist[wi] < 0) {
        dist[wi] = du + 1;
        queue.push_back(std::move(w));
      }
    }
  }
  throw InvalidInput("unreachable: simple roots alone decompose gamma");
}

long long horizontal_length_typeA(const RootSystem& rs, const LatticeVec& gamma) {
  if (rs.family() != 'A') throw InvalidInput("horizontal length is a type A formula");
  check_dim(rs, gamma);
  for (Coord c : gamma)
    if (c < 0) throw InvalidInput("horizontal length requires non-negative coordinates");
  long long h = 0;
  Coord prev = 0;
  for (Coord a : gamma) {
    if (a > prev) h += a - prev;
    prev = a;
  }
  return h;
}

} // namespace rootlen
