#include "rootlen/length.hpp"

#include "rootlen/errors.hpp"
#include "rootlen/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace rootlen;

TEST_CASE("worked length values") {
  RootSystem b3 = RootSystem::build('B', 3);
  CHECK(length_value(b3, {1, 0, 2}) == 2);
  RootSystem g2 = RootSystem::build('G', 2);
  CHECK(length_value(g2, {2, 1}) == 1); // omega_1 is a root
  CHECK(length_value(g2, {4, 2}) == 2); // ceil(4/3) = 2
  RootSystem e8 = RootSystem::build('E', 8);
  CHECK(length_value(e8, {5, 8, 10, 15, 12, 9, 6, 3}) == 3); // omega_2
}

TEST_CASE("length basics: zero, roots, attaining facets") {
  RootSystem rs = RootSystem::build('B', 3);
  CHECK(length_value(rs, {0, 0, 0}) == 0);
  for (const auto& b : rs.roots()) CHECK(length_value(rs, b) == 1);
  LengthResult r = length(rs, {1, 0, 2});
  CHECK(r.length == 2);
  CHECK(r.attaining == std::vector<int>{1, 3}); // dom = (2,3,4): 2/1 and 4/2
}

TEST_CASE("dominant shortcut equals the full facet enumeration on whole boxes") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                           "D4", "F4", "G2"}) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    auto table = facet_table(rs);
    const int l = rs.rank();
    LatticeVec g(l, -3);
    for (;;) {
      CHECK(length_value(rs, g) == length_via_facets(rs, *table, g));
      int i = 0;
      while (i < l && g[i] == 3) {
        g[i] = -3;
        ++i;
      }
      if (i == l) break;
      ++g[i];
    }
  }
}

TEST_CASE("length is Weyl invariant and subadditive; 1 exactly on roots") {
  for (const char* name : {"B3", "C4", "G2"}) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    std::mt19937 rng(23);
    std::uniform_int_distribution<Coord> coord(-4, 4);
    std::uniform_int_distribution<int> letter(1, rs.rank());
    for (int k = 0; k < 100; ++k) {
      LatticeVec g(rs.rank()), h(rs.rank());
      for (auto& c : g) c = coord(rng);
      for (auto& c : h) c = coord(rng);
      WeylWord w(9);
      for (auto& i : w) i = letter(rng);
      CHECK(length_value(rs, act_word(rs, w, g)) == length_value(rs, g));
      CHECK(length_value(rs, add(g, h)) <= length_value(rs, g) + length_value(rs, h));
      CHECK((length_value(rs, g) == 0) == is_zero(g));
      CHECK((length_value(rs, g) == 1) == rs.is_root(g));
    }
  }
}

TEST_CASE("every facet functional gives a lower bound") {
  RootSystem rs = RootSystem::build('B', 3);
  auto table = facet_table(rs);
  std::mt19937 rng(5);
  std::uniform_int_distribution<Coord> coord(-3, 3);
  for (int k = 0; k < 200; ++k) {
    LatticeVec g(rs.rank());
    for (auto& c : g) c = coord(rng);
    long long len = length_value(rs, g);
    for (std::size_t f = 0; f < table->facets().size(); ++f)
      CHECK(ceil_rat(table->value(f, g)) <= len);
  }
}

TEST_CASE("decompose returns |gamma| roots summing to gamma") {
  RootSystem b3 = RootSystem::build('B', 3);
  auto parts = decompose(b3, {1, 0, 2});
  CHECK(parts.size() == 2);
  LatticeVec sum(3, 0);
  for (const auto& p : parts) {
    CHECK(b3.is_root(p));
    sum = add(sum, p);
  }
  CHECK(sum == LatticeVec{1, 0, 2});

  // 2 omega_3 decomposes into two roots, e.g. (a1+2a2+2a3) + a3
  auto parts2 = decompose(b3, {1, 2, 3});
  CHECK(parts2.size() == 2);

  RootSystem e8 = RootSystem::build('E', 8);
  LatticeVec w2{5, 8, 10, 15, 12, 9, 6, 3};
  auto parts3 = decompose(e8, w2);
  CHECK(parts3.size() == 3);
  LatticeVec sum3(8, 0);
  for (const auto& p : parts3) {
    CHECK(e8.is_root(p));
    sum3 = add(sum3, p);
  }
  CHECK(sum3 == w2);
}

TEST_CASE("decomposition soundness on random vectors") {
  for (const char* name : {"A3", "B3", "F4"}) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    std::mt19937 rng(31);
    std::uniform_int_distribution<Coord> coord(-3, 3);
    for (int k = 0; k < 25; ++k) {
      LatticeVec g(rs.rank());
      for (auto& c : g) c = coord(rng);
      auto parts = decompose(rs, g);
      CHECK(static_cast<long long>(parts.size()) == length_value(rs, g));
      LatticeVec sum(rs.rank(), 0);
      for (const auto& p : parts) {
        CHECK(rs.is_root(p));
        sum = add(sum, p);
      }
      CHECK(sum == g);
    }
  }
}

TEST_CASE("positive length values") {
  RootSystem b3 = RootSystem::build('B', 3);
  CHECK(positive_length(b3, {1, 0, 2}) == 3);
  for (const auto& b : b3.positive_roots()) CHECK(positive_length(b3, b) == 1);
  CHECK(positive_length(b3, {0, 0, 0}) == 0);
  CHECK_THROWS_AS(positive_length(b3, {-1, 0, 0}), InvalidInput);

  RootSystem a6 = RootSystem::build('A', 6);
  CHECK(positive_length(a6, {2, 3, 3, 0, 4, 1}) == 7);
}

TEST_CASE("horizontal tiling formula, type A") {
  RootSystem a6 = RootSystem::build('A', 6);
  CHECK(horizontal_length_typeA(a6, {2, 3, 3, 0, 4, 1}) == 7);
  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(horizontal_length_typeA(a2, {2, 1}) == 2);
  for (const auto& b : a2.positive_roots()) CHECK(horizontal_length_typeA(a2, b) == 1);
  RootSystem b3 = RootSystem::build('B', 3);
  CHECK_THROWS_AS(horizontal_length_typeA(b3, {1, 0, 0}), InvalidInput);
}

TEST_CASE("dimension mismatch is rejected") {
  RootSystem rs = RootSystem::build('A', 2);
  CHECK_THROWS_AS(length_value(rs, {1, 0, 0}), InvalidInput);
}

TEST_CASE("B2 and C2 are the same system with indices swapped") {
  RootSystem b2 = RootSystem::build('B', 2);
  RootSystem c2 = RootSystem::build('C', 2);
  for (Coord a = -4; a <= 4; ++a)
    for (Coord b = -4; b <= 4; ++b) {
      CHECK(length_value(b2, {a, b}) == length_value(c2, {b, a}));
      if (a >= 0 && b >= 0)
        CHECK(positive_length(b2, {a, b}) == positive_length(c2, {b, a}));
    }
}

TEST_CASE("length is invariant under diagram automorphisms") {
  // type A reversal
  RootSystem a4 = RootSystem::build('A', 4);
  std::mt19937 rng(67);
  std::uniform_int_distribution<Coord> coord(-3, 3);
  for (int k = 0; k < 100; ++k) {
    LatticeVec g(4), rev(4);
    for (auto& c : g) c = coord(rng);
    for (int i = 0; i < 4; ++i) rev[i] = g[3 - i];
    CHECK(length_value(a4, g) == length_value(a4, rev));
  }
  // E6: 1<->6, 3<->5, fixing 2 and 4
  RootSystem e6 = RootSystem::build('E', 6);
  const int perm[7] = {0, 6, 2, 5, 4, 3, 1};
  for (int k = 0; k < 50; ++k) {
    LatticeVec g(6), pg(6);
    for (auto& c : g) c = coord(rng);
    for (int i = 1; i <= 6; ++i) pg[perm[i] - 1] = g[i - 1];
    CHECK(length_value(e6, g) == length_value(e6, pg));
  }
}

TEST_CASE("explicit generator partitions from the minimal-formula analysis") {
  // E7: 2 omega_2 = theta + (theta - a1 - a3) + theta_{E6} + (a2+...+a7)
  RootSystem e7 = RootSystem::build('E', 7);
  LatticeVec two_w2{4, 7, 8, 12, 9, 6, 3};
  std::vector<LatticeVec> parts = {
      e7.theta(), sub(sub(e7.theta(), {1, 0, 0, 0, 0, 0, 0}), {0, 0, 1, 0, 0, 0, 0}),
      {1, 2, 2, 3, 2, 1, 0}, {0, 1, 1, 1, 1, 1, 1}};
  LatticeVec sum(7, 0);
  for (const auto& p : parts) {
    CHECK(e7.is_root(p));
    sum = add(sum, p);
  }
  CHECK(sum == two_w2);
  CHECK(length_value(e7, two_w2) == 4); // ceil(7/2)

  // E8: omega_2 = theta + (theta - a8) + theta_{E6}; |2 omega_2| = ceil(16/3)
  RootSystem e8 = RootSystem::build('E', 8);
  LatticeVec w2{5, 8, 10, 15, 12, 9, 6, 3};
  std::vector<LatticeVec> parts8 = {e8.theta(), sub(e8.theta(), {0, 0, 0, 0, 0, 0, 0, 1}),
                                    {1, 2, 2, 3, 2, 1, 0, 0}};
  LatticeVec sum8(8, 0);
  for (const auto& p : parts8) {
    CHECK(e8.is_root(p));
    sum8 = add(sum8, p);
  }
  CHECK(sum8 == w2);
  CHECK(length_value(e8, w2) == 3);
  LatticeVec two_w2_8 = add(w2, w2);
  CHECK(length_value(e8, two_w2_8) == 6);
  // the pairing values behind "m_alpha does not divide": (w^_2, w_2) = 8
  CHECK(e8.pairing(e8.coweight(2), to_rat(w2)) == Rat(8));
}
