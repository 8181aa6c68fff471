#include "rootlen/oracle.hpp"

#include "rootlen/errors.hpp"
#include "rootlen/rational.hpp"

#include <algorithm>
#include <deque>

namespace rootlen {

namespace {

LatticeVec unpack_key(std::uint64_t key, int l) {
  LatticeVec u(l);
  for (int i = 0; i < l; ++i)
    u[i] = static_cast<Coord>(static_cast<std::uint8_t>(key >> (8 * i))) - 128;
  return u;
}

} // namespace

BruteOracle::BruteOracle(const RootSystem& rs) : rs_(&rs) {
  sums_.resize(1);
  sums_[0].emplace(pack_key(LatticeVec(rs.rank(), 0)), 0);
}

void BruteOracle::extend_tables(int k) {
  while (static_cast<int>(sums_.size()) <= k) {
    const Table& prev = sums_.back();
    Table next;
    const auto& roots = rs_->roots();
    for (const auto& [key, unused] : prev) {
      (void)unused;
      LatticeVec u = unpack_key(key, rs_->rank());
      for (std::uint32_t r = 0; r < roots.size(); ++r) {
        LatticeVec w = add(u, roots[r]);
        if (!packable(w)) throw CapExceeded("oracle sums left the packing range");
        next.emplace(pack_key(w), r);
      }
    }
    sums_.push_back(std::move(next));
  }
}

bool BruteOracle::is_sum_of(const LatticeVec& gamma, int r) {
  int a = r / 2, b = r - a;
  extend_tables(b);
  const Table& small = sums_[a];
  const Table& big = sums_[b];
  const int l = rs_->rank();
  for (const auto& [key, unused] : small) {
    (void)unused;
    LatticeVec u = unpack_key(key, l);
    LatticeVec w(l);
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      w[i] = gamma[i] - u[i];
      ok = ok && w[i] >= -127 && w[i] <= 127;
    }
    if (ok && big.count(pack_key(w))) return true;
  }
  return false;
}

std::optional<long long> BruteOracle::brute_length(const LatticeVec& gamma, int r_max) {
  if (static_cast<int>(gamma.size()) != rs_->rank()) throw InvalidInput("dimension mismatch");
  if (r_max < 0) throw InvalidInput("r_max must be non-negative");
  if (!packable(gamma)) throw CapExceeded("gamma outside the oracle packing range");
  for (int r = 0; r <= r_max; ++r)
    if (is_sum_of(gamma, r)) return r;
  return std::nullopt;
}

std::vector<LatticeVec> BruteOracle::witness(const LatticeVec& gamma, int r) {
  // peel one root at a time: gamma is a sum of k roots iff gamma - b is a
  // sum of k-1 roots for some root b
  std::vector<LatticeVec> parts;
  LatticeVec rest = gamma;
  for (int k = r; k > 0; --k) {
    bool found = false;
    for (const auto& b : rs_->roots()) {
      LatticeVec w = sub(rest, b);
      if (!packable(w)) continue;
      if (is_sum_of(w, k - 1)) {
        parts.push_back(b);
        rest = std::move(w);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidInput("witness reconstruction failed");
  }
  if (!is_zero(rest)) throw InvalidInput("witness does not sum to gamma");
  return parts;
}

long long BruteOracle::brute_positive_length(const LatticeVec& gamma, std::size_t cap) {
  const RootSystem& rs = *rs_;
  if (static_cast<int>(gamma.size()) != rs.rank()) throw InvalidInput("dimension mismatch");
  for (Coord c : gamma)
    if (c < 0) throw InvalidInput("brute_positive_length requires gamma in R+");
  const int l = rs.rank();
  std::size_t states = 1;
  std::vector<std::size_t> stride(l, 1);
  for (int i = 0; i < l; ++i) {
    stride[i] = states;
    states *= static_cast<std::size_t>(gamma[i]) + 1;
    if (states > cap) throw CapExceeded("positive-length state space exceeds cap");
  }
  auto index_of = [&](const LatticeVec& v) {
    std::size_t idx = 0;
    for (int i = 0; i < l; ++i) idx += stride[i] * static_cast<std::size_t>(v[i]);
    return idx;
  };
  // distances from 0 upward by adding positive roots inside the box
  std::vector<int> dist(states, -1);
  LatticeVec zero(l, 0);
  std::deque<LatticeVec> queue{zero};
  dist[0] = 0;
  std::size_t target = index_of(gamma);
  while (!queue.empty()) {
    LatticeVec u = queue.front();
    queue.pop_front();
    std::size_t ui = index_of(u);
    if (ui == target) return dist[ui];
    for (const auto& b : rs.positive_roots()) {
      LatticeVec w = add(u, b);
      bool inside = true;
      for (int i = 0; i < l; ++i) inside = inside && w[i] <= gamma[i];
      if (!inside) continue;
      std::size_t wi = index_of(w);
      if (dist[wi] < 0) {
        dist[wi] = dist[ui] + 1;
        queue.push_back(std::move(w));
      }
    }
  }
  throw InvalidInput("unreachable: gamma is a sum of simple roots");
}

} // namespace rootlen
