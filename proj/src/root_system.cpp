#include "rootlen/root_system.hpp"

#include "rootlen/errors.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace rootlen {

namespace {

bool valid_type(char f, int l) {
  switch (f) {
    case 'A': return l >= 1;
    case 'B': return l >= 2;
    case 'C': return l >= 2;
    case 'D': return l >= 4;
    case 'E': return l >= 6 && l <= 8;
    case 'F': return l == 4;
    case 'G': return l == 2;
    default: return false;
  }
}

std::vector<std::vector<int>> cartan_matrix(char f, int l) {
  std::vector<std::vector<int>> C(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) C[i][i] = 2;
  auto link = [&](int i, int j, int cij, int cji) {
    C[i][j] = cij;
    C[j][i] = cji;
  };
  switch (f) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1, -1);
      link(l - 2, l - 1, -2, -1); // alpha_l short
      break;
    case 'C':
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1, -1, -1);
      link(l - 2, l - 1, -1, -2); // alpha_l long
      break;
    case 'D':
      for (int i = 0; i + 3 < l; ++i) link(i, i + 1, -1, -1);
      link(l - 4, l - 3, -1, -1);
      link(l - 3, l - 2, -1, -1);
      link(l - 3, l - 1, -1, -1);
      break;
    case 'E': {
      // chain 1-3-4-5-6(-7-8), node 2 attached to node 4
      std::vector<int> chain = {0, 2, 3, 4, 5, 6, 7};
      chain.resize(l - 1);
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) link(chain[i], chain[i + 1], -1, -1);
      link(1, 3, -1, -1);
      break;
    }
    case 'F':
      link(0, 1, -1, -1);
      link(1, 2, -2, -1); // alpha_3, alpha_4 short
      link(2, 3, -1, -1);
      break;
    case 'G':
      link(0, 1, -1, -3); // alpha_1 short
      break;
  }
  return C;
}

std::vector<RatVec> rat_inverse(const std::vector<RatVec>& M) {
  const std::size_t n = M.size();
  std::vector<RatVec> a(n, RatVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("singular matrix");
    std::swap(a[c], a[p]);
    Rat pv = a[c][c];
    for (auto& x : a[c]) x /= pv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<RatVec> inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

} // namespace

std::pair<char, int> parse_type_token(const std::string& token) {
  if (token.size() < 2 || !std::isalpha(static_cast<unsigned char>(token[0])))
    throw InvalidInput("malformed type token: '" + token + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  for (std::size_t i = 1; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw InvalidInput("malformed type token: '" + token + "'");
  int l = std::stoi(token.substr(1));
  if (!valid_type(f, l)) throw InvalidInput("invalid irreducible type: '" + token + "'");
  return {f, l};
}

RootSystem RootSystem::build(char family, int rank) {
  if (!valid_type(family, rank))
    throw InvalidInput("invalid irreducible type: " + std::string(1, family) +
                       std::to_string(rank));
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  const int l = rank;
  rs.cartan_ = cartan_matrix(family, rank);
  const auto& C = rs.cartan_;

  // Symmetrizing diagonal: d_i = (alpha_i, alpha_i)/2, long roots = 1.
  std::vector<Rat> d(l, Rat(0));
  d[0] = 1;
  std::vector<bool> known(l, false);
  known[0] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (i != j && C[i][j] != 0 && known[i] && !known[j]) {
          d[j] = d[i] * Rat(C[j][i]) / Rat(C[i][j]);
          known[j] = true;
          changed = true;
        }
  }
  Rat dmax = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= dmax;
  rs.gram_.assign(l, RatVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.gram_[i][j] = Rat(C[i][j]) * d[j];

  // Reflection closure of the simple roots.
  std::set<LatticeVec> seen;
  std::deque<LatticeVec> queue;
  for (int i = 0; i < l; ++i) {
    LatticeVec e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    LatticeVec v = queue.front();
    queue.pop_front();
    for (int j = 0; j < l; ++j) {
      Coord s = 0;
      for (int i = 0; i < l; ++i) s += v[i] * C[i][j];
      LatticeVec w = v;
      w[j] -= s;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  rs.roots_.assign(seen.begin(), seen.end());
  for (const auto& r : rs.roots_) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](Coord c) { return c >= 0; });
    Coord first = 0;
    for (Coord c : r)
      if (c != 0) {
        first = c;
        break;
      }
    if ((first > 0) != nonneg) throw InvalidInput("positivity convention violated");
    if (nonneg) rs.positive_.push_back(r);
    if (!packable(r)) throw InvalidInput("root coordinates out of packing range");
    rs.root_keys_.insert(pack_key(r));
  }
  if (2 * rs.positive_.size() != rs.roots_.size())
    throw InvalidInput("root set is not symmetric");

  // theta / theta_s: the dominant long / short roots.
  for (const auto& r : rs.positive_) {
    bool dom = true;
    for (int j = 1; j <= l && dom; ++j) dom = rs.cartan_pair(r, j) >= 0;
    if (!dom) continue;
    if (rs.norm2(r) == 2) {
      if (!rs.theta_.empty()) throw InvalidInput("dominant long root not unique");
      rs.theta_ = r;
    } else {
      if (rs.theta_s_) throw InvalidInput("dominant short root not unique");
      rs.theta_s_ = r;
    }
  }
  if (rs.theta_.empty()) throw InvalidInput("no highest root");
  rs.marks_ = rs.theta_;

  // Coweights are the rows of the inverse Gram matrix; weights the rows of
  // the inverse Cartan matrix.
  rs.coweights_.resize(l);
  {
    auto ginv = rat_inverse(rs.gram_);
    for (int i = 0; i < l; ++i) rs.coweights_[i] = ginv[i];
  }
  rs.weights_.resize(l);
  {
    std::vector<RatVec> cr(l, RatVec(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) cr[i][j] = C[i][j];
    auto cinv = rat_inverse(cr);
    for (int i = 0; i < l; ++i) rs.weights_[i] = cinv[i];
  }
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) {
      LatticeVec e(l, 0);
      e[j - 1] = 1;
      if (rs.pairing(rs.coweight(i), e) != Rat(i == j ? 1 : 0))
        throw InvalidInput("coweight duality failed");
    }
    if (rs.pairing(rs.coweight(i), rs.theta_) != Rat(rs.marks_[i - 1]))
      throw InvalidInput("coweight/theta pairing does not match the marks");
  }

  for (int i = 1; i <= l; ++i) {
    LatticeVec e(l, 0);
    e[i - 1] = 1;
    if (rs.pairing(to_rat(rs.theta_), e) != 0) rs.aff0_.push_back(i);
  }
  return rs;
}

const RatVec& RootSystem::coweight(int i) const {
  if (i < 1 || i > rank_) throw InvalidInput("coweight index out of range");
  return coweights_[i - 1];
}

const RatVec& RootSystem::weight(int i) const {
  if (i < 1 || i > rank_) throw InvalidInput("weight index out of range");
  return weights_[i - 1];
}

bool RootSystem::is_root(const LatticeVec& v) const {
  if (static_cast<int>(v.size()) != rank_) throw InvalidInput("dimension mismatch");
  if (!packable(v)) return false;
  return root_keys_.count(pack_key(v)) > 0;
}

bool RootSystem::is_long(const LatticeVec& root) const { return norm2(root) == 2; }

Rat RootSystem::pairing(const RatVec& u, const RatVec& v) const {
  if (static_cast<int>(u.size()) != rank_ || static_cast<int>(v.size()) != rank_)
    throw InvalidInput("dimension mismatch in pairing");
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (u[i] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < rank_; ++j)
      if (v[j] != 0) row += gram_[i][j] * v[j];
    s += u[i] * row;
  }
  return s;
}

Rat RootSystem::pairing(const RatVec& u, const LatticeVec& v) const {
  return pairing(u, to_rat(v));
}

Rat RootSystem::norm2(const LatticeVec& v) const { return pairing(to_rat(v), v); }

Coord RootSystem::cartan_pair(const LatticeVec& v, int j) const {
  Coord s = 0;
  for (int i = 0; i < rank_; ++i) s += v[i] * cartan_[i][j - 1];
  return s;
}

Rat RootSystem::cartan_pair(const RatVec& v, int j) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) s += v[i] * cartan_[i][j - 1];
  return s;
}

bool RootSystem::affine_adjacent(int a, int b) const {
  if (a == b) return false;
  if (a == 0) return std::find(aff0_.begin(), aff0_.end(), b) != aff0_.end();
  if (b == 0) return affine_adjacent(0, a);
  return cartan_[a - 1][b - 1] != 0;
}

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int pow2(int n) {
  Int p = 1;
  p <<= n;
  return p;
}

Int simple_group_order(char f, int l) {
  switch (f) {
    case 'A': return factorial(l + 1);
    case 'B':
    case 'C': return pow2(l) * factorial(l);
    case 'D': return pow2(l - 1) * factorial(l);
    case 'E': return l == 6 ? Int(51840) : l == 7 ? Int(2903040) : Int(696729600);
    case 'F': return Int(1152);
    case 'G': return Int(12);
  }
  throw InvalidInput("unknown family");
}

} // namespace

Int RootSystem::weyl_order() const { return simple_group_order(family_, rank_); }

Int RootSystem::parabolic_order(const std::vector<int>& A) const {
  std::vector<int> nodes = A;
  std::sort(nodes.begin(), nodes.end());
  for (int a : nodes)
    if (a < 1 || a > rank_) throw InvalidInput("parabolic index out of range");
  std::vector<bool> used(rank_ + 1, false);
  Int order = 1;
  for (int start : nodes) {
    if (used[start]) continue;
    // collect the component of `start` in the induced subdiagram
    std::vector<int> comp;
    std::deque<int> q{start};
    used[start] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      comp.push_back(u);
      for (int w : nodes)
        if (!used[w] && cartan_[u - 1][w - 1] != 0) {
          used[w] = true;
          q.push_back(w);
        }
    }
    const int n = static_cast<int>(comp.size());
    // classify the component by its bond multiplicities and branch shape
    int max_mult = 1;
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && cartan_[comp[i] - 1][comp[j] - 1] != 0) {
          ++degree[i];
          int mult = cartan_[comp[i] - 1][comp[j] - 1] * cartan_[comp[j] - 1][comp[i] - 1];
          if (mult > max_mult) max_mult = mult;
        }
    if (max_mult == 3) {
      order *= simple_group_order('G', 2);
      continue;
    }
    if (max_mult == 2) {
      // distinguish F4 (double bond in the middle of a 4-chain) from B/C
      bool middle = false;
      for (int i = 0; i < n && !middle; ++i)
        for (int j = i + 1; j < n && !middle; ++j)
          if (cartan_[comp[i] - 1][comp[j] - 1] * cartan_[comp[j] - 1][comp[i] - 1] == 2)
            middle = degree[i] >= 2 && degree[j] >= 2;
      order *= (n == 4 && middle) ? simple_group_order('F', 4) : simple_group_order('B', n);
      continue;
    }
    // simply laced: chain -> A, one degree-3 node -> D/E by branch lengths
    int branch = -1;
    for (int i = 0; i < n; ++i)
      if (degree[i] == 3) branch = i;
    if (branch < 0) {
      order *= simple_group_order('A', n);
      continue;
    }
    // branch lengths from the degree-3 node
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
      if (i == branch || cartan_[comp[branch] - 1][comp[i] - 1] == 0) continue;
      int len = 1, prev = branch, cur = i;
      for (;;) {
        int next = -1;
        for (int k = 0; k < n; ++k)
          if (k != prev && k != cur && cartan_[comp[cur] - 1][comp[k] - 1] != 0) next = k;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens.size() != 3) throw InvalidInput("unrecognized subdiagram");
    if (lens[1] == 1)
      order *= simple_group_order('D', n);
    else if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4)
      order *= simple_group_order('E', n);
    else
      throw InvalidInput("unrecognized subdiagram");
  }
  return order;
}

} // namespace rootlen
