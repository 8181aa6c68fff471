#include "rootlen/polytope.hpp"

#include "rootlen/errors.hpp"
#include "rootlen/zlattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

namespace rootlen {

namespace {

// Connectivity of a node subset of the affine diagram {0, 1..l}.
bool affine_connected(const RootSystem& rs, const std::vector<int>& nodes) {
  if (nodes.empty()) return true;
  std::set<int> todo(nodes.begin(), nodes.end());
  std::deque<int> queue{*todo.begin()};
  todo.erase(todo.begin());
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto it = todo.begin(); it != todo.end();) {
      if (rs.affine_adjacent(u, *it)) {
        queue.push_back(*it);
        it = todo.erase(it);
      } else {
        ++it;
      }
    }
  }
  return todo.empty();
}

std::vector<int> sorted_unique(std::vector<int> a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void check_subset(const RootSystem& rs, const std::vector<int>& A) {
  for (int a : A)
    if (a < 1 || a > rs.rank()) throw InvalidInput("subset index out of range");
}

} // namespace

std::vector<int> maximal_roots(const RootSystem& rs) {
  std::vector<int> out;
  for (int a = 1; a <= rs.rank(); ++a) {
    std::vector<int> rest{0};
    for (int i = 1; i <= rs.rank(); ++i)
      if (i != a) rest.push_back(i);
    if (affine_connected(rs, rest)) out.push_back(a);
  }
  return out;
}

bool in_I(const RootSystem& rs, const std::vector<int>& A) {
  check_subset(rs, A);
  std::vector<int> rest{0};
  for (int i = 1; i <= rs.rank(); ++i)
    if (std::find(A.begin(), A.end(), i) == A.end()) rest.push_back(i);
  return affine_connected(rs, rest);
}

ClosureData closure_data(const RootSystem& rs, const std::vector<int>& Ain) {
  std::vector<int> A = sorted_unique(Ain);
  check_subset(rs, A);
  // component of the affine node in (Delta \ A) + {alpha_0}
  std::set<int> comp{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w = 1; w <= rs.rank(); ++w) {
      if (comp.count(w) || std::find(A.begin(), A.end(), w) != A.end()) continue;
      if (rs.affine_adjacent(u, w)) {
        comp.insert(w);
        queue.push_back(w);
      }
    }
  }
  ClosureData cd;
  for (int i = 1; i <= rs.rank(); ++i)
    if (!comp.count(i)) cd.closure.push_back(i);
  for (int a : A) {
    bool touches = false;
    for (int b : comp)
      if (rs.affine_adjacent(a, b)) touches = true;
    if (touches) cd.boundary.push_back(a);
  }
  for (int i = 1; i <= rs.rank(); ++i)
    if (std::find(cd.boundary.begin(), cd.boundary.end(), i) == cd.boundary.end())
      cd.stab.push_back(i);

  // beta_A: dominance-least root with full coweight level on A.  theta always
  // qualifies, so the candidate set is nonempty; the least element is unique.
  std::vector<LatticeVec> cands;
  for (const auto& r : rs.roots()) {
    bool ok = true;
    for (int a : A) ok = ok && r[a - 1] == rs.marks()[a - 1];
    if (ok) cands.push_back(r);
  }
  for (const auto& c : cands) {
    bool least = true;
    for (const auto& other : cands) {
      for (int i = 0; i < rs.rank(); ++i)
        if (other[i] < c[i]) {
          least = false;
          break;
        }
      if (!least) break;
    }
    if (least) {
      cd.beta = c;
      break;
    }
  }
  if (cd.beta.empty()) throw InvalidInput("V(A) has no dominance-least root");
  // Remark on beta_A: level exactly m on the closure, strictly below outside.
  for (int i = 1; i <= rs.rank(); ++i) {
    bool in_closure = std::find(cd.closure.begin(), cd.closure.end(), i) != cd.closure.end();
    if (in_closure != (cd.beta[i - 1] == rs.marks()[i - 1]))
      throw InvalidInput("beta_A level pattern contradicts the closure");
  }
  return cd;
}

FaceSpec canonical_face(const RootSystem& rs, const std::vector<int>& A, const WeylWord& tau) {
  ClosureData cd = closure_data(rs, A);
  FaceSpec spec;
  spec.A = cd.closure;
  // closure always lies in I: its complement plus alpha_0 is the component
  if (!in_I(rs, spec.A)) throw InvalidInput("closure of A left I; cannot canonicalize");
  RatVec x = parabolic_fixed_vector(rs, cd.stab);
  spec.tau = canonical_word_from_dominant(rs, act_word(rs, tau, x));
  return spec;
}

std::vector<LatticeVec> face_roots(const RootSystem& rs, const FaceSpec& spec) {
  ClosureData cd = closure_data(rs, spec.A);
  std::vector<LatticeVec> by_level, by_beta;
  for (const auto& r : rs.roots()) {
    bool ok = true;
    for (int a : spec.A) ok = ok && r[a - 1] == rs.marks()[a - 1];
    if (ok) by_level.push_back(act_word(rs, spec.tau, r));
    bool dom = true;
    for (int i = 0; i < rs.rank(); ++i) dom = dom && r[i] >= cd.beta[i];
    if (dom) by_beta.push_back(act_word(rs, spec.tau, r));
  }
  std::sort(by_level.begin(), by_level.end());
  std::sort(by_beta.begin(), by_beta.end());
  if (by_level != by_beta)
    throw InvalidInput("face root routes disagree (coweight level vs beta_A dominance)");
  return by_level;
}

std::vector<Facet> enumerate_facets(const RootSystem& rs, std::size_t cap) {
  std::vector<Facet> out;
  std::set<RatVec> distinct;
  for (int a : maximal_roots(rs)) {
    RatVec lam = scale(rs.coweight(a), Rat(1, rs.marks()[a - 1]));
    for (OrbitElement& e : orbit_with_words(rs, lam, cap)) {
      if (!distinct.insert(e.vec).second)
        throw InvalidInput("facet functionals are not pairwise distinct");
      out.push_back(Facet{a, std::move(e.word), std::move(e.vec)});
    }
  }
  return out;
}

bool face_contains(const RootSystem& rs, const FaceSpec& outer, const FaceSpec& inner) {
  FaceSpec fa = canonical_face(rs, outer.A, outer.tau);
  FaceSpec fb = canonical_face(rs, inner.A, inner.tau);
  if (!std::includes(fb.A.begin(), fb.A.end(), fa.A.begin(), fa.A.end())) return false;
  std::vector<int> a_star = closure_data(rs, fa.A).stab;
  std::vector<int> b_star = closure_data(rs, fb.A).stab;
  // x = tau^-1 sigma; reduce modulo W_{B*} on the right, then the inclusion
  // holds iff the minimal representative lies in W_{A*}.
  WeylWord x = word_inverse(fa.tau);
  x.insert(x.end(), fb.tau.begin(), fb.tau.end());
  RatVec xb = parabolic_fixed_vector(rs, b_star);
  WeylWord xmin = canonical_word_from_dominant(rs, act_word(rs, x, xb));
  RatVec xa = parabolic_fixed_vector(rs, a_star);
  return act_word(rs, xmin, xa) == xa;
}

std::vector<AdjacentFacet> adjacent_facets(const RootSystem& rs, int alpha) {
  std::vector<int> maxr = maximal_roots(rs);
  if (std::find(maxr.begin(), maxr.end(), alpha) == maxr.end())
    throw InvalidInput("adjacent_facets requires a maximal root");
  std::vector<AdjacentFacet> out;
  std::vector<int> sub = delta_minus(rs, alpha);
  for (int d = 1; d <= rs.rank(); ++d) {
    if (d == alpha || !in_I(rs, {alpha, d})) continue;
    bool is_max = std::find(maxr.begin(), maxr.end(), d) != maxr.end();
    if (is_max) {
      RatVec lam = scale(rs.coweight(d), Rat(1, rs.marks()[d - 1]));
      for (const RatVec& mu : parabolic_orbit(rs, lam, sub))
        out.push_back({Facet{d, canonical_word_from_dominant(rs, mu), mu}, false});
    } else {
      // autointersection: the non-maximal root adjacent to alpha; the facets
      // are F(alpha; tau s_alpha)
      if (!rs.affine_adjacent(alpha, d))
        throw InvalidInput("autointersection root is not adjacent to alpha");
      RatVec lam = scale(rs.coweight(alpha), Rat(1, rs.marks()[alpha - 1]));
      RatVec slam = reflect_simple(rs, alpha, lam);
      for (const RatVec& mu : parabolic_orbit(rs, slam, sub))
        out.push_back({Facet{alpha, canonical_word_from_dominant(rs, mu), mu}, true});
    }
  }
  std::sort(out.begin(), out.end(), [](const AdjacentFacet& x, const AdjacentFacet& y) {
    if (x.facet.alpha != y.facet.alpha) return x.facet.alpha < y.facet.alpha;
    if (x.facet.tau.size() != y.facet.tau.size()) return x.facet.tau.size() < y.facet.tau.size();
    return x.facet.tau < y.facet.tau;
  });
  return out;
}

PsiData psi_and_nabla(const RootSystem& rs, int alpha) {
  std::vector<int> maxr = maximal_roots(rs);
  if (std::find(maxr.begin(), maxr.end(), alpha) == maxr.end())
    throw InvalidInput("psi_and_nabla requires a maximal root");
  PsiData data;
  data.alpha = alpha;
  std::vector<LatticeVec> v = face_roots(rs, canonical_face(rs, {alpha}));
  int autos = 0;
  for (int d = 1; d <= rs.rank(); ++d) {
    if (d == alpha || !in_I(rs, {alpha, d})) continue;
    PsiEntry e;
    e.delta = d;
    e.autointersection = std::find(maxr.begin(), maxr.end(), d) == maxr.end();
    autos += e.autointersection ? 1 : 0;
    e.nabla = sub(scale(rs.coweight(alpha), Rat(1, rs.marks()[alpha - 1])),
                  scale(rs.coweight(d), Rat(1, rs.marks()[d - 1])));
    bool have_long = false;
    for (const auto& b : v) {
      Rat val = rs.pairing(e.nabla, b);
      if (rs.is_long(b)) {
        e.d_long = have_long ? std::max(e.d_long, val) : val;
        have_long = true;
      } else {
        e.d_short = e.d_short ? std::max(*e.d_short, val) : val;
      }
    }
    if (!have_long) throw InvalidInput("V(alpha) has no long roots");
    data.entries.push_back(std::move(e));
  }
  if (autos > 1) throw InvalidInput("multiple autointersection roots");
  return data;
}

RatVec barycenter(const RootSystem& rs, const std::vector<int>& A) {
  if (!in_I(rs, A)) throw InvalidInput("barycenter requires A in I");
  std::vector<LatticeVec> v = face_roots(rs, FaceSpec{sorted_unique(A), {}});
  RatVec b(rs.rank(), 0);
  for (const auto& r : v)
    for (int i = 0; i < rs.rank(); ++i) b[i] += r[i];
  return scale(b, Rat(1, static_cast<long long>(v.size())));
}

std::vector<RatVec> halfspace_presentation(const RootSystem& rs) {
  std::vector<RatVec> lams;
  for (const Facet& f : enumerate_facets(rs)) lams.push_back(f.lambda);
  return lams;
}

FacetTable::FacetTable(const RootSystem& rs, std::size_t cap) {
  facets_ = enumerate_facets(rs, cap);
  const int l = rs.rank();
  std::vector<RatVec> covs;
  for (const Facet& f : facets_) {
    RatVec cov(l, 0);
    for (int j = 0; j < l; ++j)
      for (int i = 0; i < l; ++i) cov[j] += f.lambda[i] * rs.gram()[i][j];
    covs.push_back(std::move(cov));
  }
  for (const RatVec& cov : covs)
    for (const Rat& x : cov) scale_ = boost::multiprecision::lcm(scale_, rat_den(x));
  for (const RatVec& cov : covs) {
    LatticeVec row(l);
    for (int j = 0; j < l; ++j) {
      Int e = rat_num(cov[j]) * (scale_ / rat_den(cov[j]));
      if (e > (1 << 20) || e < -(1 << 20)) throw CapExceeded("facet covector entries too large");
      row[j] = static_cast<Coord>(e);
    }
    covectors_.push_back(std::move(row));
  }
}

Coord FacetTable::scaled_value(std::size_t k, const LatticeVec& g) const {
  const LatticeVec& w = covectors_[k];
  Coord s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * g[i];
  return s;
}

Rat FacetTable::value(std::size_t k, const LatticeVec& g) const {
  return Rat(Int(scaled_value(k, g)), scale_);
}

Coord FacetTable::max_scaled_value(const LatticeVec& g) const {
  Coord best = scaled_value(0, g);
  for (std::size_t k = 1; k < covectors_.size(); ++k)
    best = std::max(best, scaled_value(k, g));
  return best;
}

bool FacetTable::attains_max(std::size_t k, const LatticeVec& g) const {
  return scaled_value(k, g) == max_scaled_value(g);
}

std::size_t FacetTable::index_of(const RatVec& lambda) const {
  for (std::size_t k = 0; k < facets_.size(); ++k)
    if (facets_[k].lambda == lambda) return k;
  throw InvalidInput("functional is not a facet functional");
}

std::shared_ptr<const FacetTable> facet_table(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const FacetTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rs.name());
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const FacetTable>(rs);
  cache.emplace(rs.name(), table);
  return table;
}

} // namespace rootlen
