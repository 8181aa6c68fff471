#include "rootlen/weyl.hpp"

#include "rootlen/errors.hpp"
#include "rootlen/polytope.hpp"

#include <doctest.h>

#include <random>

using namespace rootlen;

namespace {

// deterministic sample vectors with small rational entries
std::vector<RatVec> sample_vectors(const RootSystem& rs, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<RatVec> out;
  for (int k = 0; k < n; ++k) {
    RatVec v(rs.rank());
    for (auto& x : v) x = Rat(num(rng)) / Rat(den(rng));
    out.push_back(std::move(v));
  }
  return out;
}

WeylWord random_word(const RootSystem& rs, int len, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> letter(1, rs.rank());
  WeylWord w(len);
  for (auto& i : w) i = letter(rng);
  return w;
}

} // namespace

TEST_CASE("simple reflections are involutions and preserve the pairing") {
  for (const char* name : {"A3", "B3", "C4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    auto vs = sample_vectors(rs, 8, 11);
    for (int i = 1; i <= rs.rank(); ++i)
      for (std::size_t a = 0; a < vs.size(); ++a) {
        CHECK(reflect_simple(rs, i, reflect_simple(rs, i, vs[a])) == vs[a]);
        for (std::size_t b = a + 1; b < vs.size(); ++b)
          CHECK(rs.pairing(reflect_simple(rs, i, vs[a]), reflect_simple(rs, i, vs[b])) ==
                rs.pairing(vs[a], vs[b]));
      }
  }
}

TEST_CASE("A2 reflection arithmetic") {
  RootSystem rs = RootSystem::build('A', 2);
  RatVec a1{1, 0}, a2{0, 1};
  CHECK(reflect_simple(rs, 1, a1) == RatVec{-1, 0});
  CHECK(reflect_simple(rs, 1, a2) == RatVec{1, 1});
  // [1,2] acting on alpha2: s1(s2(alpha2)) = -alpha1 - alpha2
  CHECK(act_word(rs, {1, 2}, a2) == RatVec{-1, -1});
  CHECK(act_word(rs, {}, a2) == a2);
}

TEST_CASE("a word followed by its inverse is the identity") {
  for (const char* name : {"B3", "D4", "G2"}) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    for (unsigned seed = 0; seed < 4; ++seed) {
      WeylWord w = random_word(rs, 9, 100 + seed);
      for (const RatVec& v : sample_vectors(rs, 3, seed))
        CHECK(act_word(rs, word_inverse(w), act_word(rs, w, v)) == v);
    }
  }
}

TEST_CASE("B3: s3 fixes theta") {
  RootSystem rs = RootSystem::build('B', 3);
  CHECK(reflect_simple(rs, 3, rs.theta()) == rs.theta());
}

TEST_CASE("to_dominant basics") {
  RootSystem rs = RootSystem::build('A', 2);
  auto d = to_dominant(rs, LatticeVec{-1, 0});
  CHECK(d.vec == LatticeVec{1, 1}); // orbit of a root reaches theta
  CHECK(act_word(rs, d.word, LatticeVec{-1, 0}) == d.vec);

  auto fixed = to_dominant(rs, rs.theta());
  CHECK(fixed.word.empty());
  CHECK(fixed.vec == rs.theta());

  RootSystem b3 = RootSystem::build('B', 3);
  auto e = to_dominant(b3, LatticeVec{1, 0, 2});
  CHECK(e.vec == LatticeVec{2, 3, 4}); // coweight pairings (2,3,4)
  CHECK(act_word(b3, e.word, LatticeVec{1, 0, 2}) == e.vec);
}

TEST_CASE("to_dominant is invariant under precomposition with group elements") {
  for (const char* name : {"B3", "C3", "F4"}) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    for (unsigned seed = 0; seed < 6; ++seed) {
      RatVec v = sample_vectors(rs, 1, 200 + seed)[0];
      RatVec dom = to_dominant(rs, v).vec;
      WeylWord w = random_word(rs, 11, 300 + seed);
      CHECK(to_dominant(rs, act_word(rs, w, v)).vec == dom);
    }
  }
}

TEST_CASE("partial dominance on a subset only straightens the subset") {
  RootSystem rs = RootSystem::build('B', 3);
  std::vector<int> A{1, 2};
  for (unsigned seed = 0; seed < 5; ++seed) {
    RatVec v = sample_vectors(rs, 1, 400 + seed)[0];
    auto d = to_dominant(rs, v, A);
    for (int i : A) CHECK(rs.cartan_pair(d.vec, i) >= 0);
    for (int i : d.word) CHECK((i == 1 || i == 2));
    CHECK(act_word(rs, d.word, v) == d.vec);
  }
}

TEST_CASE("orbit sizes") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(orbit_with_words(a2, a2.coweight(1)).size() == 3);
  RootSystem g2 = RootSystem::build('G', 2);
  auto orb = orbit_with_words(g2, to_rat(g2.theta()));
  CHECK(orb.size() == 6); // the long roots
  for (const auto& e : orb) CHECK(act_word(g2, e.word, to_rat(g2.theta())) == e.vec);
}

TEST_CASE("orbit words are canonical: shortest, then lexicographically smallest") {
  RootSystem rs = RootSystem::build('B', 3);
  auto orb = orbit_with_words(rs, rs.coweight(3));
  CHECK(orb.size() == 8);
  for (const auto& e : orb) {
    CHECK(act_word(rs, e.word, rs.coweight(3)) == e.vec);
    // canonical words from a dominant start are reproduced by greedy descent
    CHECK(canonical_word_from_dominant(rs, e.vec) == e.word);
  }
}

TEST_CASE("orbit cap throws") {
  RootSystem rs = RootSystem::build('D', 4);
  CHECK_THROWS_AS(orbit_with_words(rs, parabolic_fixed_vector(rs, {}), 10), CapExceeded);
}

TEST_CASE("orbit index formula |orbit| * |W_{Delta - a}| = |W| for maximal roots") {
  std::vector<std::pair<char, int>> types;
  for (int l = 1; l <= 8; ++l) types.push_back({'A', l});
  for (int l = 2; l <= 8; ++l) types.push_back({'B', l});
  for (int l = 2; l <= 8; ++l) types.push_back({'C', l});
  for (int l = 4; l <= 8; ++l) types.push_back({'D', l});
  for (int l = 6; l <= 8; ++l) types.push_back({'E', l});
  types.push_back({'F', 4});
  types.push_back({'G', 2});
  for (auto [f, l] : types) {
    RootSystem rs = RootSystem::build(f, l);
    for (int a : maximal_roots(rs)) {
      RatVec lam = scale(rs.coweight(a), Rat(1) / Rat(rs.marks()[a - 1]));
      auto orb = orbit_with_words(rs, lam);
      CHECK_MESSAGE(Int(orb.size()) * rs.parabolic_order(delta_minus(rs, a)) == rs.weyl_order(),
                    rs.name());
    }
  }
}

TEST_CASE("E8 orbit of w^_2/3 has 17280 elements") {
  RootSystem rs = RootSystem::build('E', 8);
  RatVec lam = scale(rs.coweight(2), Rat(1, 3));
  CHECK(orbit_with_words(rs, lam).size() == 17280);
}

TEST_CASE("coset representatives") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(coset_reps(a2, {1, 2}).size() == 1); // A = Delta
  CHECK(coset_reps(a2, {2}).size() == 3);
  RootSystem b3 = RootSystem::build('B', 3);
  auto reps = coset_reps(b3, {1, 2});
  CHECK(reps.size() == 8);
  // distinct actions on the parabolic fixed vector
  RatVec x = parabolic_fixed_vector(b3, {1, 2});
  std::set<RatVec> images;
  for (const auto& w : reps) images.insert(act_word(b3, w, x));
  CHECK(images.size() == reps.size());
}

TEST_CASE("stabilizer of a dominant vector") {
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(stabilizer_simple_roots(a2, to_rat(a2.theta())).empty());
  RootSystem b3 = RootSystem::build('B', 3);
  CHECK(stabilizer_simple_roots(b3, b3.coweight(1)) == std::vector<int>{2, 3});
  CHECK_THROWS_AS(stabilizer_simple_roots(b3, to_rat(LatticeVec{-1, 0, 0})), InvalidInput);
  // barycenter of V({alpha1}) in A2 = alpha1 + alpha2/2, stabilizer {2}
  CHECK(stabilizer_simple_roots(a2, RatVec{1, Rat(1, 2)}) == std::vector<int>{2});
}

TEST_CASE("orbit witnesses from a non-dominant start") {
  RootSystem rs = RootSystem::build('B', 3);
  RatVec start = to_rat(LatticeVec{-1, 0, -2});
  auto orb = orbit_with_words(rs, start);
  CHECK(orb.size() == orbit_with_words(rs, to_dominant(rs, start).vec).size());
  for (const auto& e : orb) CHECK(act_word(rs, e.word, start) == e.vec);
}
