#include "rootlen/monoid.hpp"

#include "rootlen/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rootlen {

namespace {

// Clears denominators of the Gram covector of a functional, keeping the sign:
// sign(result . g) == sign((phi, g)).
LatticeVec integer_covector(const RootSystem& rs, const RatVec& phi) {
  const int l = rs.rank();
  RatVec cov(l, 0);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) cov[j] += phi[i] * rs.gram()[i][j];
  Int den = 1;
  for (const Rat& x : cov) den = boost::multiprecision::lcm(den, rat_den(x));
  LatticeVec out(l);
  for (int j = 0; j < l; ++j) {
    Int e = rat_num(cov[j]) * (den / rat_den(cov[j]));
    if (e > (1 << 24) || e < -(1 << 24)) throw CapExceeded("covector entries too large");
    out[j] = static_cast<Coord>(e);
  }
  return out;
}

Coord dot(const LatticeVec& a, const LatticeVec& b) {
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace

MonoidCtx MonoidCtx::facet(const RootSystem& rs, int alpha, const WeylWord& tau) {
  std::vector<int> maxr = maximal_roots(rs);
  if (std::find(maxr.begin(), maxr.end(), alpha) == maxr.end())
    throw InvalidInput("facet context requires a maximal root");
  MonoidCtx ctx;
  ctx.init(rs, canonical_face(rs, {alpha}, tau));
  return ctx;
}

MonoidCtx MonoidCtx::face(const RootSystem& rs, const FaceSpec& spec) {
  MonoidCtx ctx;
  ctx.init(rs, canonical_face(rs, spec.A, spec.tau));
  return ctx;
}

void MonoidCtx::init(const RootSystem& rs, const FaceSpec& spec) {
  if (spec.A.empty()) throw InvalidInput("the improper face F({}) has no monoid context");
  rs_ = &rs;
  table_ = facet_table(rs);
  spec_ = spec;
  vroots_ = face_roots(rs, spec_);
  zbasis_ = hermite_normal_form(vroots_, rs.rank());

  std::vector<int> maxr = maximal_roots(rs);
  is_facet_ = spec_.A.size() == 1 &&
              std::find(maxr.begin(), maxr.end(), spec_.A[0]) != maxr.end();

  if (is_facet_) {
    alpha_ = spec_.A[0];
    lambda_ = act_word(rs, spec_.tau,
                       scale(rs.coweight(alpha_), Rat(1, rs.marks()[alpha_ - 1])));
    // separators: tau images of the standard walls lambda - mu/m_delta
    RatVec lam0 = scale(rs.coweight(alpha_), Rat(1, rs.marks()[alpha_ - 1]));
    PsiData psi = psi_and_nabla(rs, alpha_);
    for (const PsiEntry& e : psi.entries) {
      psi_.push_back(e.delta);
      RatVec lamd = scale(rs.coweight(e.delta), Rat(1, rs.marks()[e.delta - 1]));
      for (const RatVec& mu : parabolic_orbit(rs, lamd, delta_minus(rs, alpha_)))
        separators_.push_back(act_word(rs, spec_.tau, sub(lam0, mu)));
    }
    std::sort(separators_.begin(), separators_.end());
    separators_.erase(std::unique(separators_.begin(), separators_.end()), separators_.end());
    for (const RatVec& w : separators_) separator_covs_.push_back(integer_covector(rs, w));
  } else {
    // pick a facet functional tight on the whole face
    bool found = false;
    for (std::size_t k = 0; k < table_->facets().size() && !found; ++k) {
      bool tight = true;
      for (const auto& v : vroots_) tight = tight && table_->value(k, v) == 1;
      if (tight) {
        lambda_ = table_->facets()[k].lambda;
        found = true;
      }
    }
    if (!found) throw InvalidInput("no facet functional is tight on the face");
    span_normals_ = span_normals(vroots_, rs.rank());
  }
  lambda_index_ = table_->index_of(lambda_);
  for (const auto& v : vroots_)
    if (table_->value(lambda_index_, v) != 1)
      throw InvalidInput("face functional is not tight on V(F)");
}

Rat MonoidCtx::level(const LatticeVec& g) const { return table_->value(lambda_index_, g); }

bool MonoidCtx::in_cone(const LatticeVec& g) const {
  for (const LatticeVec& k : span_normals_)
    if (dot(k, g) != 0) return false;
  return table_->attains_max(lambda_index_, g);
}

bool MonoidCtx::in_zspan(const LatticeVec& g) const { return in_lattice(zbasis_, g); }

std::optional<std::vector<LatticeVec>> MonoidCtx::in_nspan(const LatticeVec& g) const {
  Rat lv = level(g);
  if (lv < 0 || !is_integer(lv)) return std::nullopt;
  std::vector<LatticeVec> witness;
  // depth-first over non-increasing generator indices; each step lowers the
  // level by exactly 1, and every partial remainder stays in the cone
  std::function<bool(const LatticeVec&, std::size_t)> go =
      [&](const LatticeVec& rem, std::size_t maxi) -> bool {
    if (is_zero(rem)) return true;
    auto key = std::make_pair(rem, maxi);
    auto it = nspan_memo_.find(key);
    if (it != nspan_memo_.end() && !it->second) return false;
    for (std::size_t i = maxi + 1; i-- > 0;) {
      LatticeVec next = sub(rem, vroots_[i]);
      if (!in_cone(next)) continue;
      if (go(next, i)) {
        witness.push_back(vroots_[i]);
        return true;
      }
    }
    nspan_memo_[key] = false;
    return false;
  };
  if (!in_cone(g)) return std::nullopt;
  if (!go(g, vroots_.size() - 1)) return std::nullopt;
  return witness;
}

bool MonoidCtx::is_proper(const LatticeVec& g) const {
  if (!is_facet_) throw InvalidInput("is_proper is defined for facet contexts");
  if (!in_cone(g)) throw InvalidInput("is_proper requires an element of M(F)");
  LatticeVec g0 = act_word(*rs_, word_inverse(spec_.tau), g);
  LatticeVec gp = to_dominant(*rs_, g0, delta_minus(*rs_, alpha_)).vec;
  RatVec lam0 = scale(rs_->coweight(alpha_), Rat(1, rs_->marks()[alpha_ - 1]));
  for (int d : psi_) {
    RatVec nab = sub(lam0, scale(rs_->coweight(d), Rat(1, rs_->marks()[d - 1])));
    if (!(rs_->pairing(nab, gp) > 0)) return false;
  }
  return true;
}

namespace {

Coord floor_div(Coord a, Coord b) { // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}
Coord ceil_div2(Coord a, Coord b) { // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

struct SlabRow {
  LatticeVec w;
  Coord low;
  std::optional<Coord> up;
};

// One round of exact interval tightening of the variable boxes against the
// rows; false when some box empties.
bool tighten(const std::vector<SlabRow>& rows, std::vector<Coord>& lo, std::vector<Coord>& hi,
             int from) {
  const int l = static_cast<int>(lo.size());
  for (int pass = 0; pass < 2; ++pass) {
    for (const SlabRow& row : rows) {
      Coord minsum = 0, maxsum = 0;
      for (int e = 0; e < l; ++e) {
        if (row.w[e] == 0) continue;
        minsum += row.w[e] > 0 ? row.w[e] * lo[e] : row.w[e] * hi[e];
        maxsum += row.w[e] > 0 ? row.w[e] * hi[e] : row.w[e] * lo[e];
      }
      if (maxsum < row.low || (row.up && minsum > *row.up)) return false;
      for (int e = from; e < l; ++e) {
        Coord we = row.w[e];
        if (we == 0) continue;
        Coord rest_min = minsum - (we > 0 ? we * lo[e] : we * hi[e]);
        Coord rest_max = maxsum - (we > 0 ? we * hi[e] : we * lo[e]);
        if (row.up) {
          // we * c_e <= U - rest_min
          if (we > 0)
            hi[e] = std::min(hi[e], floor_div(*row.up - rest_min, we));
          else
            lo[e] = std::max(lo[e], -floor_div(*row.up - rest_min, -we));
        }
        // we * c_e >= L - rest_max
        if (we > 0)
          lo[e] = std::max(lo[e], ceil_div2(row.low - rest_max, we));
        else
          hi[e] = std::min(hi[e], -ceil_div2(row.low - rest_max, -we));
        if (lo[e] > hi[e]) return false;
      }
    }
  }
  return true;
}

} // namespace

void MonoidCtx::for_each_slab_point(const Rat& bound, std::size_t cap,
                                    const std::function<void(const LatticeVec&)>& fn) const {
  const int l = rs_->rank();
  if (bound < 0) return;
  Coord mult = static_cast<Coord>(ceil_rat(bound));

  // integer constraint rows implied by membership in the slab
  std::vector<SlabRow> rows;
  {
    // 0 <= level <= bound, through the scaled facet-table covector
    LatticeVec own(l);
    for (int j = 0; j < l; ++j) {
      LatticeVec e(l, 0);
      e[j] = 1;
      own[j] = table_->scaled_value(lambda_index_, e);
    }
    Rat upper = bound * Rat(table_->scale());
    rows.push_back({own, 0, static_cast<Coord>(floor_rat(upper))});
  }
  for (const LatticeVec& w : separator_covs_) rows.push_back({w, 0, std::nullopt});
  for (const LatticeVec& k : span_normals_) {
    rows.push_back({k, 0, Coord(0)});
    rows.push_back({neg(k), 0, Coord(0)});
  }

  std::vector<Coord> lo(l, 0), hi(l, 0);
  for (int i = 0; i < l; ++i) {
    Coord mn = 0, mx = 0;
    for (const auto& v : vroots_) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = mult * mn;
    hi[i] = mult * mx;
  }

  // depth-first over coordinates with interval tightening at each node
  std::size_t visited = 0;
  LatticeVec g(l, 0);
  std::function<void(int, std::vector<Coord>, std::vector<Coord>)> go =
      [&](int depth, std::vector<Coord> l0, std::vector<Coord> h0) {
        if (++visited > cap) throw CapExceeded("slab enumeration exceeds the point cap");
        if (!tighten(rows, l0, h0, depth)) return;
        if (depth == l) {
          if (is_zero(g)) return;
          for (const LatticeVec& k : span_normals_)
            if (dot(k, g) != 0) return;
          Rat lv = level(g);
          if (lv < 0 || lv > bound || !table_->attains_max(lambda_index_, g)) return;
          fn(g);
          return;
        }
        for (Coord c = l0[depth]; c <= h0[depth]; ++c) {
          g[depth] = c;
          std::vector<Coord> l1 = l0, h1 = h0;
          l1[depth] = h1[depth] = c;
          go(depth + 1, std::move(l1), std::move(h1));
        }
        g[depth] = 0;
      };
  go(0, lo, hi);
}

std::vector<LatticeVec> MonoidCtx::minimal_elements(const Rat& bound, std::size_t cap) const {
  std::vector<LatticeVec> out;
  for_each_slab_point(bound, cap, [&](const LatticeVec& g) {
    for (const auto& v : vroots_)
      if (in_cone(sub(g, v))) return;
    out.push_back(g);
  });
  std::sort(out.begin(), out.end());
  return out;
}

NormalityResult is_normal(const MonoidCtx& ctx, const Rat& level_bound, std::size_t cap) {
  NormalityResult res;
  res.normal = true;
  ctx.for_each_slab_point(level_bound, cap, [&](const LatticeVec& g) {
    if (!res.normal || !ctx.in_zspan(g)) return;
    if (!ctx.in_nspan(g)) {
      res.normal = false;
      res.witness = g;
    }
  });
  return res;
}

IntegralClosureResult is_integrally_closed(const MonoidCtx& ctx, const Rat& level_bound,
                                           std::size_t cap) {
  if (!ctx.is_facet()) throw InvalidInput("is_integrally_closed is defined for facets");
  IntegralClosureResult res;
  res.closed = true;
  ctx.for_each_slab_point(level_bound, cap, [&](const LatticeVec& g) {
    if (!res.closed) return;
    if (!ctx.in_nspan(g)) {
      res.closed = false;
      res.witness = g;
    }
  });
  const RootSystem& rs = ctx.root_system();
  res.matches_mark_prediction = res.closed == (rs.marks()[ctx.alpha() - 1] == 1);
  return res;
}

namespace {

// ---- criterion route: bounded candidate enumeration for proper minimal ----

struct LinIneq {
  std::vector<Rat> a;
  Rat b;
  bool strict;
};

// Interval propagation for integer points of {c : a.c (<|<=) b for all ineqs}.
// Returns false when the system is proved empty.  Unbounded coordinates keep
// nullopt bounds.
bool propagate(const std::vector<LinIneq>& sys, std::vector<std::optional<Int>>& lo,
               std::vector<std::optional<Int>>& hi) {
  const std::size_t n = lo.size();
  for (int round = 0; round < 200; ++round) {
    bool changed = false;
    for (const LinIneq& q : sys) {
      for (std::size_t e = 0; e < n; ++e) {
        if (q.a[e] == 0) continue;
        Rat rest = 0;
        bool ok = true;
        for (std::size_t e2 = 0; e2 < n && ok; ++e2) {
          if (e2 == e || q.a[e2] == 0) continue;
          if (q.a[e2] > 0) {
            if (!lo[e2]) ok = false;
            else rest += q.a[e2] * Rat(*lo[e2]);
          } else {
            if (!hi[e2]) ok = false;
            else rest += q.a[e2] * Rat(*hi[e2]);
          }
        }
        if (!ok) continue;
        Rat bound = (q.b - rest) / q.a[e];
        if (q.a[e] > 0) {
          Int nb = floor_rat(bound);
          if (q.strict && Rat(nb) == bound) --nb;
          if (!hi[e] || nb < *hi[e]) {
            hi[e] = nb;
            changed = true;
          }
        } else {
          Int nb = ceil_rat(bound);
          if (q.strict && Rat(nb) == bound) ++nb;
          if (!lo[e] || nb > *lo[e]) {
            lo[e] = nb;
            changed = true;
          }
        }
        if (lo[e] && hi[e] && *lo[e] > *hi[e]) return false; // empty
      }
    }
    if (!changed) break;
  }
  return true;
}

bool feasible(const std::vector<LinIneq>& sys, const std::vector<Int>& c) {
  for (const LinIneq& q : sys) {
    Rat s = 0;
    for (std::size_t e = 0; e < c.size(); ++e) s += q.a[e] * Rat(c[e]);
    if (q.strict ? !(s < q.b) : !(s <= q.b)) return false;
  }
  return true;
}

// Path between two nodes in the finite Dynkin diagram (a tree).
std::vector<int> dynkin_path(const RootSystem& rs, int a, int b) {
  std::vector<int> prev(rs.rank() + 1, 0);
  std::deque<int> q{a};
  prev[a] = a;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == b) break;
    for (int w = 1; w <= rs.rank(); ++w)
      if (w != u && prev[w] == 0 && rs.cartan()[u - 1][w - 1] != 0) {
        prev[w] = u;
        q.push_back(w);
      }
  }
  std::vector<int> path;
  for (int u = b; u != a; u = prev[u]) path.push_back(u);
  path.push_back(a);
  return path;
}

Int lcm_ll(long long a, long long b) { return boost::multiprecision::lcm(Int(a), Int(b)); }

std::vector<LatticeVec> criterion_generators(const RootSystem& rs, int alpha,
                                             std::size_t cap) {
  MonoidCtx ctx = MonoidCtx::facet(rs, alpha);
  PsiData psi = psi_and_nabla(rs, alpha);
  const int l = rs.rank();
  const long long ma = rs.marks()[alpha - 1];

  bool has_short = false;
  for (const auto& v : ctx.vroots()) has_short = has_short || !rs.is_long(v);

  // necessary conditions on the existence of a proper minimal element: some
  // separator direction must leave room above the coarsest pairing step
  bool okL = false, okS = !has_short;
  for (const PsiEntry& e : psi.entries) {
    Rat step = Rat(1) / Rat(lcm_ll(ma, rs.marks()[e.delta - 1]));
    if (step < e.d_long) okL = true;
    if (e.d_short && step < *e.d_short) okS = true;
  }
  if (!okL || !okS) return {};

  // theta is proportional to a single fundamental weight outside type A
  if (rs.affine_node_neighbors().size() != 1)
    throw CapExceeded("criterion route needs a unique adjoint node");
  const int nu = rs.affine_node_neighbors()[0];

  // weight coordinates: coefficient of c_e in (phi, sum_e c_e omega_e)
  auto wcoef = [&](const RatVec& phi) {
    std::vector<Rat> co(l);
    for (int e = 1; e <= l; ++e) co[e - 1] = rs.pairing(phi, rs.weight(e));
    return co;
  };

  std::set<std::vector<Int>> candidates;
  for (const PsiEntry& entry : psi.entries) {
    Rat step = Rat(1) / Rat(lcm_ll(ma, rs.marks()[entry.delta - 1]));
    if (!(step < entry.d_long)) continue; // this delta cannot witness beta = theta

    std::vector<LinIneq> sys;
    // minimality test inequality for beta = theta
    std::vector<Rat> tco = wcoef(entry.nabla);
    for (int e : dynkin_path(rs, entry.delta, nu))
      tco[e - 1] += Rat(1) / Rat(rs.marks()[entry.delta - 1]);
    sys.push_back({tco, entry.d_long, true});
    // properness: all separators of the standard facet strictly positive
    for (const PsiEntry& e2 : psi.entries) {
      std::vector<Rat> co = wcoef(e2.nabla);
      for (auto& x : co) x = -x;
      sys.push_back({co, Rat(0), true});
    }
    // cone walls (all tau-conjugates): non-negative on M(F)
    for (const RatVec& w : ctx.separators()) {
      std::vector<Rat> co = wcoef(w);
      for (auto& x : co) x = -x;
      sys.push_back({co, Rat(0), false});
    }
    // dominance outside alpha
    std::vector<std::optional<Int>> lo(l), hi(l);
    for (int e = 0; e < l; ++e)
      if (e != alpha - 1) lo[e] = 0;

    if (!propagate(sys, lo, hi)) continue; // proved empty
    Int volume = 1;
    bool bounded = true;
    for (int e = 0; e < l; ++e) {
      if (!lo[e] || !hi[e]) {
        bounded = false;
        break;
      }
      volume *= *hi[e] - *lo[e] + 1;
    }
    if (!bounded)
      throw CapExceeded("criterion candidate region is unbounded for delta = " +
                        std::to_string(entry.delta));
    if (volume > Int(cap)) throw CapExceeded("criterion candidate box exceeds cap");

    std::vector<Int> c(l);
    for (int e = 0; e < l; ++e) c[e] = *lo[e];
    for (;;) {
      if (feasible(sys, c)) candidates.insert(c);
      int i = 0;
      while (i < l && c[i] == *hi[i]) {
        c[i] = *lo[i];
        ++i;
      }
      if (i == l) break;
      ++c[i];
    }
  }

  // explicit checks: lattice membership, cone, properness, minimality
  std::set<LatticeVec> generators;
  for (const std::vector<Int>& c : candidates) {
    RatVec g(l, 0);
    for (int e = 1; e <= l; ++e) g = add(g, scale(rs.weight(e), Rat(c[e - 1])));
    LatticeVec gi(l);
    bool integral = true;
    for (int i = 0; i < l && integral; ++i) {
      integral = is_integer(g[i]);
      if (integral) gi[i] = static_cast<Coord>(Int(rat_num(g[i])));
    }
    if (!integral || is_zero(gi)) continue;
    if (!ctx.in_cone(gi)) continue;
    if (!ctx.is_proper(gi)) continue;
    bool minimal = true;
    for (const auto& v : ctx.vroots())
      if (ctx.in_cone(sub(gi, v))) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    // the candidate system only covers (Delta - alpha)-dominant elements;
    // a proper minimal element's stabilizer orbit fills in the rest
    for (const auto& u : parabolic_orbit(rs, gi, delta_minus(rs, alpha)))
      generators.insert(u);
  }
  return {generators.begin(), generators.end()};
}

} // namespace

GeneratorReport proper_minimal_generators(const RootSystem& rs, int alpha,
                                          long long level_bound, GeneratorRoute route,
                                          std::size_t cap) {
  std::vector<int> maxr = maximal_roots(rs);
  if (std::find(maxr.begin(), maxr.end(), alpha) == maxr.end())
    throw InvalidInput("generators are computed for coordinate facets F(alpha)");
  if (route == GeneratorRoute::Auto)
    route = rs.rank() <= 6 ? GeneratorRoute::Slab : GeneratorRoute::Criterion;

  GeneratorReport rep;
  rep.type = rs.name();
  rep.alpha = alpha;
  if (route == GeneratorRoute::Slab) {
    MonoidCtx ctx = MonoidCtx::facet(rs, alpha);
    auto pmin_at = [&](long long b) {
      std::vector<LatticeVec> out;
      for (const auto& g : ctx.minimal_elements(Rat(b), cap))
        if (ctx.is_proper(g)) out.push_back(g);
      return out;
    };
    rep.generators = pmin_at(level_bound);
    rep.stable = pmin_at(level_bound + 1) == rep.generators;
    rep.certificate = "slab-exhaustive";
    rep.level_bound = level_bound;
  } else {
    rep.generators = criterion_generators(rs, alpha, cap);
    rep.certificate = "criterion";
    rep.level_bound = 0;
    rep.stable = true;
  }
  return rep;
}

} // namespace rootlen
