#include "rootlen/verify.hpp"

#include "rootlen/errors.hpp"
#include "rootlen/length.hpp"
#include "rootlen/monoid.hpp"
#include "rootlen/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace rootlen::verify {

namespace {

std::string vec_str(const LatticeVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::pair<char, int>> types_up_to_rank4() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
          {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'F', 4}, {'G', 2}};
}

std::vector<std::vector<int>> nonempty_subsets_in_I(const RootSystem& rs) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << rs.rank()); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rs.rank(); ++i)
      if (mask & (1 << i)) s.push_back(i + 1);
    if (in_I(rs, s)) out.push_back(std::move(s));
  }
  return out;
}

// multiple of a fundamental weight as a lattice vector (must be integral)
LatticeVec weight_multiple(const RootSystem& rs, int i, int mult) {
  RatVec w = scale(rs.weight(i), Rat(mult));
  LatticeVec out(rs.rank());
  for (int k = 0; k < rs.rank(); ++k) {
    if (!is_integer(w[k])) throw InvalidInput("weight multiple is not a lattice vector");
    out[k] = static_cast<Coord>(Int(rat_num(w[k])));
  }
  return out;
}

void box_walk(int rank, Coord lo, Coord hi, const std::function<void(const LatticeVec&)>& fn) {
  LatticeVec g(rank, lo);
  for (;;) {
    fn(g);
    int i = 0;
    while (i < rank && g[i] == hi) {
      g[i] = lo;
      ++i;
    }
    if (i == rank) break;
    ++g[i];
  }
}

struct Failures {
  int count = 0;
  std::vector<std::string>& notes;
  explicit Failures(std::vector<std::string>& n) : notes(n) {}
  void add(const std::string& msg) {
    ++count;
    if (count <= 10) notes.push_back("FAIL: " + msg);
  }
};

} // namespace

CheckResult check_oracle_equality(const Options& opt) {
  CheckResult res{1, "length formula vs brute-force oracle", false, {}};
  Failures bad(res.notes);
  std::vector<std::pair<char, int>> full = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2},
                                            {'B', 3}, {'C', 2}, {'C', 3}, {'G', 2}};
  std::vector<std::pair<char, int>> sampled = {{'A', 4}, {'B', 4}, {'C', 4}, {'D', 4}, {'F', 4}};
  for (auto [f, l] : full) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(f, l);
    BruteOracle oracle(rs);
    long long points = 0, deepest = 0;
    box_walk(l, -3, 3, [&](const LatticeVec& g) {
      long long formula = length_value(rs, g);
      auto brute = oracle.brute_length(g, static_cast<int>(std::max(6LL, formula)));
      if (!brute || *brute != formula)
        bad.add(rs.name() + " " + vec_str(g) + ": formula " + std::to_string(formula) +
                " vs oracle " + (brute ? std::to_string(*brute) : std::string("> cap")));
      deepest = std::max(deepest, formula);
      ++points;
    });
    res.notes.push_back(rs.name() + ": full box, " + std::to_string(points) +
                        " points, max length " + std::to_string(deepest));
  }
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<Coord> coord(-3, 3);
  for (auto [f, l] : sampled) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(f, l);
    BruteOracle oracle(rs);
    long long deepest = 0;
    for (int k = 0; k < opt.samples; ++k) {
      LatticeVec g(l);
      for (auto& c : g) c = coord(rng);
      long long formula = length_value(rs, g);
      auto brute = oracle.brute_length(g, static_cast<int>(std::max(6LL, formula)));
      if (!brute || *brute != formula)
        bad.add(rs.name() + " " + vec_str(g) + ": formula " + std::to_string(formula) +
                " vs oracle " + (brute ? std::to_string(*brute) : std::string("> cap")));
      deepest = std::max(deepest, formula);
    }
    res.notes.push_back(rs.name() + ": " + std::to_string(opt.samples) +
                        " sampled points, max length " + std::to_string(deepest));
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_intro_example(const Options&) {
  CheckResult res{2, "intro example: B3, gamma = a1 + 2a3", false, {}};
  RootSystem rs = RootSystem::build('B', 3);
  BruteOracle oracle(rs);
  LatticeVec g{1, 0, 2};
  long long len = length_value(rs, g);
  long long pos = positive_length(rs, g);
  auto blen = oracle.brute_length(g);
  long long bpos = oracle.brute_positive_length(g);
  res.notes.push_back("length " + std::to_string(len) + " (oracle " +
                      (blen ? std::to_string(*blen) : "?") + "), positive length " +
                      std::to_string(pos) + " (oracle " + std::to_string(bpos) + ")");
  res.pass = len == 2 && pos == 3 && blen == 2 && bpos == 3;
  return res;
}

CheckResult check_theorem_b(const Options& opt) {
  CheckResult res{3, "proper minimal generators of the facets", false, {}};
  Failures bad(res.notes);

  struct Entry {
    char f;
    int l;
    int alpha;
    std::vector<std::pair<int, int>> gens; // (weight index, multiple)
    GeneratorRoute route;
  };
  std::vector<Entry> entries;
  auto add_empty = [&](char f, int l, std::vector<int> alphas) {
    for (int a : alphas) entries.push_back({f, l, a, {}, GeneratorRoute::Slab});
  };
  add_empty('A', 1, {1});
  add_empty('A', 2, {1, 2});
  add_empty('A', 3, {1, 2, 3});
  add_empty('A', 4, {1, 2, 3, 4});
  add_empty('A', 5, {1, 2, 3, 4, 5});
  entries.push_back({'B', 3, 1, {}, GeneratorRoute::Slab});
  entries.push_back({'B', 3, 3, {{3, 2}}, GeneratorRoute::Slab});
  add_empty('B', 4, {1, 4});
  add_empty('B', 5, {1, 5});
  add_empty('C', 2, {2});
  add_empty('C', 3, {3});
  add_empty('C', 4, {4});
  add_empty('C', 5, {5});
  add_empty('D', 4, {1, 3, 4});
  add_empty('D', 5, {1, 4, 5});
  add_empty('E', 6, {1, 6});
  add_empty('F', 4, {4});
  entries.push_back({'G', 2, 1, {{1, 1}, {1, 2}}, GeneratorRoute::Slab});
  entries.push_back({'E', 7, 2, {{2, 2}}, GeneratorRoute::Criterion});
  entries.push_back({'E', 7, 7, {}, GeneratorRoute::Criterion});
  entries.push_back({'E', 8, 1, {}, GeneratorRoute::Criterion});
  entries.push_back({'E', 8, 2, {{2, 1}, {2, 2}}, GeneratorRoute::Criterion});

  for (const Entry& e : entries) {
    if (opt.max_rank && e.l > opt.max_rank) {
      res.notes.push_back(std::string(1, e.f) + std::to_string(e.l) + ": skipped (max-rank)");
      continue;
    }
    RootSystem rs = RootSystem::build(e.f, e.l);
    std::vector<LatticeVec> expected;
    for (auto [i, m] : e.gens) expected.push_back(weight_multiple(rs, i, m));
    std::sort(expected.begin(), expected.end());

    GeneratorReport rep = proper_minimal_generators(rs, e.alpha, opt.level_bound, e.route, opt.cap);
    if (rep.generators != expected)
      bad.add(rs.name() + " F(a" + std::to_string(e.alpha) + "): got " +
              std::to_string(rep.generators.size()) + " generators, expected " +
              std::to_string(expected.size()));
    if (e.route == GeneratorRoute::Slab && !rep.stable)
      bad.add(rs.name() + " F(a" + std::to_string(e.alpha) + "): slab result unstable at bound+1");

    // explicit certificates for the listed generators: membership in M - N,
    // per-root minimality, properness criterion
    if (!expected.empty()) {
      MonoidCtx ctx = MonoidCtx::facet(rs, e.alpha);
      for (const auto& g : expected) {
        if (!ctx.in_cone(g)) bad.add(rs.name() + " " + vec_str(g) + " not in C(V(F))");
        if (ctx.in_nspan(g)) bad.add(rs.name() + " " + vec_str(g) + " already in N(F)");
        if (!ctx.is_proper(g)) bad.add(rs.name() + " " + vec_str(g) + " not proper");
        for (const auto& v : ctx.vroots())
          if (ctx.in_cone(sub(g, v))) {
            bad.add(rs.name() + " " + vec_str(g) + " not minimal (subtract " + vec_str(v) + ")");
            break;
          }
      }
      std::string gens;
      for (const auto& g : expected) gens += (gens.empty() ? "" : ", ") + vec_str(g);
      res.notes.push_back(rs.name() + " F(a" + std::to_string(e.alpha) + "): {" + gens + "} [" +
                          rep.certificate + "]");
    }
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_normality(const Options& opt) {
  CheckResult res{4, "normality of every face", false, {}};
  Failures bad(res.notes);
  long long faces = 0;
  for (auto [f, l] : types_up_to_rank4()) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(f, l);
    for (const auto& A : nonempty_subsets_in_I(rs)) {
      ClosureData cd = closure_data(rs, A);
      for (const auto& tau : coset_reps(rs, cd.stab)) {
        MonoidCtx ctx = MonoidCtx::face(rs, FaceSpec{A, tau});
        NormalityResult nr = is_normal(ctx, Rat(opt.closure_bound), opt.cap);
        if (!nr.normal)
          bad.add(rs.name() + " F(" + vec_str(LatticeVec(A.begin(), A.end())) +
                  "; |tau|=" + std::to_string(tau.size()) + "): witness " +
                  vec_str(*nr.witness));
        ++faces;
      }
    }
  }
  res.notes.push_back("rank <= 4: " + std::to_string(faces) + " faces checked at bound " +
                      std::to_string(opt.closure_bound));
  // the four facets with proper generators
  std::vector<std::tuple<char, int, int>> exceptional = {
      {'B', 3, 3}, {'G', 2, 1}, {'E', 7, 2}, {'E', 8, 2}};
  for (auto [f, l, a] : exceptional) {
    if (opt.max_rank && l > opt.max_rank) {
      res.notes.push_back(std::string(1, f) + std::to_string(l) + ": skipped (max-rank)");
      continue;
    }
    RootSystem rs = RootSystem::build(f, l);
    NormalityResult nr = is_normal(MonoidCtx::facet(rs, a), Rat(opt.closure_bound), opt.cap);
    if (!nr.normal)
      bad.add(rs.name() + " F(a" + std::to_string(a) + "): witness " + vec_str(*nr.witness));
    else
      res.notes.push_back(rs.name() + " F(a" + std::to_string(a) + "): normal at bound " +
                          std::to_string(opt.closure_bound));
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_integral_closure(const Options& opt) {
  CheckResult res{5, "integral closure iff m_alpha = 1", false, {}};
  Failures bad(res.notes);
  for (auto [f, l] : types_up_to_rank4()) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(f, l);
    for (int a : maximal_roots(rs)) {
      IntegralClosureResult r =
          is_integrally_closed(MonoidCtx::facet(rs, a), Rat(opt.closure_bound), opt.cap);
      if (!r.matches_mark_prediction)
        bad.add(rs.name() + " F(a" + std::to_string(a) + "): closed=" +
                std::to_string(r.closed) + " but m=" + std::to_string(rs.marks()[a - 1]));
      if (!r.closed)
        res.notes.push_back(rs.name() + " F(a" + std::to_string(a) + "): not closed (m=" +
                            std::to_string(rs.marks()[a - 1]) + "), witness " +
                            vec_str(*r.witness));
    }
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_type_a(const Options& opt) {
  CheckResult res{6, "type A: length = positive length = horizontal tiling", false, {}};
  Failures bad(res.notes);
  for (int l = 1; l <= 5; ++l) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build('A', l);
    long long points = 0;
    box_walk(l, 0, 3, [&](const LatticeVec& g) {
      long long len = length_value(rs, g);
      long long pos = positive_length(rs, g);
      long long h = horizontal_length_typeA(rs, g);
      if (len != pos || pos != h)
        bad.add(rs.name() + " " + vec_str(g) + ": len " + std::to_string(len) + ", pos " +
                std::to_string(pos) + ", h " + std::to_string(h));
      ++points;
    });
    res.notes.push_back(rs.name() + ": " + std::to_string(points) + " points");
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_type_c(const Options& opt) {
  CheckResult res{7, "type C: length = positive length", false, {}};
  Failures bad(res.notes);
  for (int l = 2; l <= 4; ++l) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build('C', l);
    long long points = 0;
    box_walk(l, 0, 3, [&](const LatticeVec& g) {
      if (length_value(rs, g) != positive_length(rs, g))
        bad.add(rs.name() + " " + vec_str(g));
      ++points;
    });
    res.notes.push_back(rs.name() + ": " + std::to_string(points) + " points");
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_strictness(const Options& opt) {
  CheckResult res{8, "strict length inequality rows (alpha - beta)", false, {}};
  Failures bad(res.notes);
  struct Row {
    char f;
    int l;
    LatticeVec alpha, beta;
  };
  std::vector<Row> rows = {
      {'B', 3, {1, 1, 2}, {0, 1, 0}},
      {'B', 4, {0, 1, 1, 2}, {0, 0, 1, 0}},
      {'D', 4, {1, 1, 1, 1}, {0, 1, 0, 0}},
      {'E', 6, {0, 1, 1, 1, 1, 0}, {0, 0, 0, 1, 0, 0}},
      {'F', 4, {1, 1, 2, 0}, {0, 1, 0, 0}},
      {'G', 2, {3, 1}, {0, 1}},
  };
  for (const Row& row : rows) {
    if (opt.max_rank && row.l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(row.f, row.l);
    if (!rs.is_root(row.alpha) || !rs.is_root(row.beta)) {
      bad.add(rs.name() + ": table entries are not roots");
      continue;
    }
    LatticeVec g = sub(row.alpha, row.beta);
    long long len = length_value(rs, g);
    long long pos = positive_length(rs, g);
    bool oracle_ok = true;
    if (row.l <= 4) {
      BruteOracle oracle(rs);
      oracle_ok = oracle.brute_length(g) == 2 && oracle.brute_positive_length(g) == 3;
    }
    if (len != 2 || pos != 3 || !oracle_ok)
      bad.add(rs.name() + " " + vec_str(g) + ": len " + std::to_string(len) + ", pos " +
              std::to_string(pos));
    else
      res.notes.push_back(rs.name() + " gamma=" + vec_str(g) + ": length 2, positive length 3");
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_geometry(const Options& opt) {
  CheckResult res{9, "geometry: facet counts, half-spaces, barycenters, adjacency", false, {}};
  Failures bad(res.notes);

  std::map<std::string, std::size_t> expected_counts = {
      {"A2", 6}, {"A3", 14}, {"B3", 14}, {"C3", 8}, {"G2", 6}};
  for (auto [f, l] : types_up_to_rank4()) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(f, l);
    auto table = facet_table(rs);
    const auto& facets = table->facets();

    // facet count against the orbit-size arithmetic |W| / |W_{Delta - a}|
    Int predicted = 0;
    for (int a : maximal_roots(rs)) predicted += rs.weyl_order() / rs.parabolic_order(delta_minus(rs, a));
    if (Int(facets.size()) != predicted)
      bad.add(rs.name() + ": facet count " + std::to_string(facets.size()) +
              " != orbit arithmetic");
    auto it = expected_counts.find(rs.name());
    if (it != expected_counts.end()) {
      if (facets.size() != it->second)
        bad.add(rs.name() + ": facet count " + std::to_string(facets.size()) + " != " +
                std::to_string(it->second));
      else
        res.notes.push_back(rs.name() + ": " + std::to_string(facets.size()) + " facets");
    }

    // half-space certificate: every root in every half-space, tight set = V(F)
    for (std::size_t k = 0; k < facets.size(); ++k) {
      std::vector<LatticeVec> tight;
      for (const auto& b : rs.roots()) {
        Rat v = table->value(k, b);
        if (v > 1) bad.add(rs.name() + ": root outside half-space " + std::to_string(k));
        if (v == 1) tight.push_back(b);
      }
      auto vf = face_roots(rs, FaceSpec{{facets[k].alpha}, facets[k].tau});
      std::sort(tight.begin(), tight.end());
      if (tight != vf) bad.add(rs.name() + ": tightness set mismatch at facet " + std::to_string(k));
    }

    // barycenter stabilizers and the F(B) = F(A) criterion over all subsets
    for (int mask = 0; mask < (1 << l); ++mask) {
      std::vector<int> A;
      for (int i = 0; i < l; ++i)
        if (mask & (1 << i)) A.push_back(i + 1);
      ClosureData cd = closure_data(rs, A);
      if (!A.empty() && in_I(rs, A)) {
        if (stabilizer_simple_roots(rs, barycenter(rs, A)) != cd.stab)
          bad.add(rs.name() + ": barycenter stabilizer != A* for " +
                  vec_str(LatticeVec(A.begin(), A.end())));
      }
      auto va = face_roots(rs, FaceSpec{A, {}});
      for (int mask2 = 0; mask2 < (1 << l); ++mask2) {
        std::vector<int> B;
        for (int i = 0; i < l; ++i)
          if (mask2 & (1 << i)) B.push_back(i + 1);
        bool same = face_roots(rs, FaceSpec{B, {}}) == va;
        bool criterion =
            std::includes(B.begin(), B.end(), cd.boundary.begin(), cd.boundary.end()) &&
            std::includes(cd.closure.begin(), cd.closure.end(), B.begin(), B.end());
        if (same != criterion)
          bad.add(rs.name() + ": F(B)=F(A) criterion mismatch");
      }
    }

    // adjacency lists against geometric adjacency
    std::vector<std::set<LatticeVec>> vsets;
    for (const Facet& fc : facets) {
      auto v = face_roots(rs, FaceSpec{{fc.alpha}, fc.tau});
      vsets.emplace_back(v.begin(), v.end());
    }
    for (int a : maximal_roots(rs)) {
      std::set<RatVec> claimed;
      for (const auto& af : adjacent_facets(rs, a)) claimed.insert(af.facet.lambda);
      std::size_t self = 0;
      while (facets[self].alpha != a || !facets[self].tau.empty()) ++self;
      std::set<RatVec> geometric;
      for (std::size_t j = 0; j < facets.size(); ++j) {
        if (j == self) continue;
        std::vector<LatticeVec> common;
        for (const auto& b : vsets[self])
          if (vsets[j].count(b)) common.push_back(b);
        if (!common.empty() && rational_rank(common, l) == l - 1)
          geometric.insert(facets[j].lambda);
      }
      if (claimed != geometric)
        bad.add(rs.name() + " F(a" + std::to_string(a) + "): adjacency list mismatch");
    }
  }
  res.pass = bad.count == 0;
  return res;
}

CheckResult check_lattice(const Options& opt) {
  CheckResult res{10, "lattice suite: Z(V(A)), subface compatibility, min n Z", false, {}};
  Failures bad(res.notes);
  for (auto [f, l] : types_up_to_rank4()) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(f, l);
    auto faces = nonempty_subsets_in_I(rs);

    // Z(V(A)) = <Delta - A, beta_A>
    std::map<std::vector<int>, Hnf> zlat;
    for (const auto& A : faces) {
      ClosureData cd = closure_data(rs, A);
      std::vector<LatticeVec> gens;
      for (int i = 1; i <= l; ++i)
        if (std::find(A.begin(), A.end(), i) == A.end()) {
          LatticeVec e(l, 0);
          e[i - 1] = 1;
          gens.push_back(e);
        }
      gens.push_back(cd.beta);
      Hnf predicted = hermite_normal_form(gens, l);
      Hnf actual = hermite_normal_form(face_roots(rs, FaceSpec{A, {}}), l);
      if (!(predicted == actual))
        bad.add(rs.name() + ": Z(V(A)) != <Delta-A, beta_A> for " +
                vec_str(LatticeVec(A.begin(), A.end())));
      zlat.emplace(A, std::move(actual));
    }

    // subface compatibility: Z(V(F')) = Z(V(F)) n span(F')
    for (const auto& A : faces)
      for (const auto& B : faces) {
        if (A == B || !std::includes(B.begin(), B.end(), A.begin(), A.end())) continue;
        const Hnf& zA = zlat.at(A);
        auto vB = face_roots(rs, FaceSpec{B, {}});
        auto normals = span_normals(vB, l);
        // K * (basis of Z(V(A))) has integer kernel = coefficients of the
        // intersection lattice
        std::vector<LatticeVec> mrows;
        for (const auto& k : normals) {
          LatticeVec row(zA.cols.size());
          for (std::size_t c = 0; c < zA.cols.size(); ++c) {
            Int s = 0;
            for (int i = 0; i < l; ++i) s += Int(k[i]) * zA.cols[c][i];
            row[c] = static_cast<Coord>(s);
          }
          mrows.push_back(std::move(row));
        }
        std::vector<LatticeVec> ybasis = kernel_lattice(mrows, static_cast<int>(zA.cols.size()));
        std::vector<LatticeVec> xbasis;
        for (const auto& y : ybasis) {
          LatticeVec x(l, 0);
          for (std::size_t c = 0; c < zA.cols.size(); ++c)
            for (int i = 0; i < l; ++i) x[i] += static_cast<Coord>(Int(y[c]) * zA.cols[c][i]);
          xbasis.push_back(std::move(x));
        }
        if (!(hermite_normal_form(xbasis, l) == hermite_normal_form(vB, l)))
          bad.add(rs.name() + ": Z(V(F')) != Z(V(F)) n span(F') for " +
                  vec_str(LatticeVec(A.begin(), A.end())) + " < " +
                  vec_str(LatticeVec(B.begin(), B.end())));
      }

    // min(F) n Z(V(F)) = 0 for the facets
    for (int a : maximal_roots(rs)) {
      MonoidCtx ctx = MonoidCtx::facet(rs, a);
      for (const auto& g : ctx.minimal_elements(Rat(opt.closure_bound), opt.cap))
        if (ctx.in_zspan(g))
          bad.add(rs.name() + " F(a" + std::to_string(a) + "): minimal element in Z: " +
                  vec_str(g));
    }
  }
  // exceptional facets: the proper generators avoid Z(V(F))
  std::vector<std::tuple<char, int, int, int, int>> exceptional = {
      {'B', 3, 3, 3, 2}, {'G', 2, 1, 1, 1}, {'G', 2, 1, 1, 2},
      {'E', 7, 2, 2, 2}, {'E', 8, 2, 2, 1}, {'E', 8, 2, 2, 2}};
  for (auto [f, l, a, wi, mult] : exceptional) {
    if (opt.max_rank && l > opt.max_rank) continue;
    RootSystem rs = RootSystem::build(f, l);
    MonoidCtx ctx = MonoidCtx::facet(rs, a);
    LatticeVec g = weight_multiple(rs, wi, mult);
    if (ctx.in_zspan(g))
      bad.add(rs.name() + " F(a" + std::to_string(a) + "): generator " + vec_str(g) +
              " lies in Z(V(F))");
  }
  res.pass = bad.count == 0;
  return res;
}

std::vector<std::string> suite_names() {
  return {"length-oracle", "intro",      "theoremB",  "normality", "integral-closure",
          "typeA",         "typeC",      "strictness", "geometry",  "lattice",
          "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& opt) {
  std::vector<CheckResult> out;
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  if (want("length-oracle")) out.push_back(check_oracle_equality(opt));
  if (want("intro")) out.push_back(check_intro_example(opt));
  if (want("theoremB")) out.push_back(check_theorem_b(opt));
  if (want("normality")) out.push_back(check_normality(opt));
  if (want("integral-closure")) out.push_back(check_integral_closure(opt));
  if (want("typeA")) out.push_back(check_type_a(opt));
  if (want("typeC")) out.push_back(check_type_c(opt));
  if (want("strictness")) out.push_back(check_strictness(opt));
  if (want("geometry")) out.push_back(check_geometry(opt));
  if (want("lattice")) out.push_back(check_lattice(opt));
  if (out.empty()) throw InvalidInput("unknown suite: '" + suite + "'");
  return out;
}

} // namespace rootlen::verify
