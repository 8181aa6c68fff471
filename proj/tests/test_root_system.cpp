#include "rootlen/root_system.hpp"

#include "rootlen/errors.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

using namespace rootlen;

namespace {

long long expected_root_count(char f, int l) {
  switch (f) {
    case 'A': return static_cast<long long>(l) * (l + 1);
    case 'B':
    case 'C': return 2LL * l * l;
    case 'D': return 2LL * l * (l - 1);
    case 'E': return l == 6 ? 72 : l == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return -1;
}

const std::vector<std::pair<char, int>>& all_types_rank8() {
  static std::vector<std::pair<char, int>> types = [] {
    std::vector<std::pair<char, int>> t;
    for (int l = 1; l <= 8; ++l) t.push_back({'A', l});
    for (int l = 2; l <= 8; ++l) t.push_back({'B', l});
    for (int l = 2; l <= 8; ++l) t.push_back({'C', l});
    for (int l = 4; l <= 8; ++l) t.push_back({'D', l});
    for (int l = 6; l <= 8; ++l) t.push_back({'E', l});
    t.push_back({'F', 4});
    t.push_back({'G', 2});
    return t;
  }();
  return types;
}

} // namespace

TEST_CASE("root counts match the closed forms") {
  for (auto [f, l] : all_types_rank8()) {
    RootSystem rs = RootSystem::build(f, l);
    CHECK_MESSAGE(static_cast<long long>(rs.roots().size()) == expected_root_count(f, l),
                  rs.name());
    CHECK(2 * rs.positive_roots().size() == rs.roots().size());
  }
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootSystem::build('D', 3), InvalidInput);
  CHECK_THROWS_AS(RootSystem::build('E', 9), InvalidInput);
  CHECK_THROWS_AS(RootSystem::build('F', 5), InvalidInput);
  CHECK_THROWS_AS(RootSystem::build('G', 3), InvalidInput);
  CHECK_THROWS_AS(RootSystem::build('H', 3), InvalidInput);
  CHECK_THROWS_AS(RootSystem::build('A', 0), InvalidInput);
  CHECK_THROWS_AS(parse_type_token("B"), InvalidInput);
  CHECK_THROWS_AS(parse_type_token("Bx"), InvalidInput);
  CHECK(parse_type_token("e7") == std::make_pair('E', 7));
}

TEST_CASE("reflection closure: simple reflections map roots to roots") {
  for (auto [f, l] : all_types_rank8()) {
    RootSystem rs = RootSystem::build(f, l);
    for (const auto& b : rs.roots())
      for (int i = 1; i <= l; ++i) {
        LatticeVec w = b;
        w[i - 1] -= rs.cartan_pair(b, i);
        CHECK(rs.is_root(w));
      }
  }
}

TEST_CASE("A2 basics") {
  RootSystem rs = RootSystem::build('A', 2);
  CHECK(rs.roots().size() == 6);
  CHECK(rs.theta() == LatticeVec{1, 1});
  CHECK(rs.marks() == LatticeVec{1, 1});
  CHECK_FALSE(rs.theta_short().has_value());
  // (alpha1, alpha2) = -1 under the long = 2 normalization
  LatticeVec a1{1, 0}, a2{0, 1};
  CHECK(rs.pairing(to_rat(a1), a2) == Rat(-1));
  CHECK(rs.coweight(1) == RatVec{Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("G2 basics") {
  RootSystem rs = RootSystem::build('G', 2);
  CHECK(rs.roots().size() == 12);
  CHECK(rs.marks() == LatticeVec{3, 2});
  CHECK(rs.theta_short().value() == LatticeVec{2, 1});
  CHECK(rs.coweight(1) == RatVec{Rat(6), Rat(3)});
  CHECK(rs.pairing(rs.coweight(1), rs.weight(1)) == Rat(2));
  // omega_1 = 2 alpha_1 + alpha_2 is a (short) root
  CHECK(rs.is_root(LatticeVec{2, 1}));
  CHECK_FALSE(rs.is_long(LatticeVec{2, 1}));
  CHECK(rs.norm2(LatticeVec{1, 0}) == Rat(2, 3));
}

TEST_CASE("B3 basics") {
  RootSystem rs = RootSystem::build('B', 3);
  CHECK(rs.roots().size() == 18);
  CHECK(rs.theta() == LatticeVec{1, 2, 2});
  CHECK(rs.theta_short().value() == LatticeVec{1, 1, 1});
  CHECK_FALSE(rs.is_root(LatticeVec{0, -1, 1}));
  CHECK(rs.affine_node_neighbors() == std::vector<int>{2});
}

TEST_CASE("E7 coweight pairing from the minimal-element analysis") {
  RootSystem rs = RootSystem::build('E', 7);
  RatVec two_w2 = scale(rs.weight(2), Rat(2));
  CHECK(rs.pairing(rs.coweight(2), two_w2) == Rat(7));
}

TEST_CASE("coweights are dual to the simple roots and pair to the marks") {
  for (auto [f, l] : all_types_rank8()) {
    RootSystem rs = RootSystem::build(f, l);
    for (int i = 1; i <= l; ++i) {
      CHECK(rs.pairing(rs.coweight(i), rs.theta()) == Rat(rs.marks()[i - 1]));
      for (int j = 1; j <= l; ++j) {
        LatticeVec e(l, 0);
        e[j - 1] = 1;
        CHECK(rs.pairing(rs.coweight(i), e) == Rat(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("root lengths take only the classified values") {
  for (auto [f, l] : all_types_rank8()) {
    RootSystem rs = RootSystem::build(f, l);
    for (const auto& b : rs.roots()) {
      Rat n = rs.norm2(b);
      bool ok = n == Rat(2) || (f == 'G' ? n == Rat(2, 3) : n == Rat(1));
      CHECK_MESSAGE(ok, rs.name());
    }
  }
}

TEST_CASE("Gram matrices are symmetric positive definite") {
  for (auto [f, l] : all_types_rank8()) {
    RootSystem rs = RootSystem::build(f, l);
    const auto& g = rs.gram();
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) CHECK(g[i][j] == g[j][i]);
    // leading principal minors > 0 by fraction-free elimination
    std::vector<RatVec> m = g;
    for (int k = 0; k < l; ++k) {
      Rat minor = 1;
      std::vector<RatVec> mm(m.begin(), m.begin() + k + 1);
      for (auto& row : mm) row.resize(k + 1);
      for (int c = 0; c <= k; ++c) {
        int p = c;
        while (p <= k && mm[p][c] == 0) ++p;
        REQUIRE(p <= k);
        if (p != c) {
          std::swap(mm[p], mm[c]);
          minor = -minor;
        }
        minor *= mm[c][c];
        for (int r = c + 1; r <= k; ++r) {
          Rat fac = mm[r][c] / mm[c][c];
          for (int cc = c; cc <= k; ++cc) mm[r][cc] -= fac * mm[c][cc];
        }
      }
      CHECK(minor > 0);
    }
  }
}

TEST_CASE("marks of the maximal roots match the classification table") {
  // type -> 1-based maximal root index -> m_alpha
  std::map<std::string, std::map<int, long long>> expected = {
      {"A5", {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}},
      {"B5", {{1, 1}, {5, 2}}},
      {"C5", {{5, 1}}},
      {"D5", {{1, 1}, {4, 1}, {5, 1}}},
      {"E6", {{1, 1}, {6, 1}}},
      {"E7", {{2, 2}, {7, 1}}},
      {"E8", {{1, 2}, {2, 3}}},
      {"F4", {{4, 2}}},
      {"G2", {{1, 3}}},
  };
  for (const auto& [name, mm] : expected) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    for (const auto& [a, m] : mm) CHECK(rs.marks()[a - 1] == m);
  }
}

TEST_CASE("committed fixture matches the built Cartan data bit-exactly") {
  std::ifstream in(std::string(ROOTLEN_SOURCE_DIR) + "/data/cartan_bourbaki.txt");
  REQUIRE(in.good());
  std::string line;
  int blocks = 0;
  while (std::getline(in, line)) {
    if (line.rfind("type ", 0) != 0) continue;
    auto [f, l] = parse_type_token(line.substr(5));
    RootSystem rs = RootSystem::build(f, l);
    std::getline(in, line);
    REQUIRE(line == "cartan");
    for (int i = 0; i < l; ++i) {
      std::getline(in, line);
      std::istringstream row(line);
      for (int j = 0; j < l; ++j) {
        int v;
        row >> v;
        CHECK_MESSAGE(v == rs.cartan()[i][j], rs.name());
      }
    }
    std::getline(in, line);
    REQUIRE(line.rfind("affine ", 0) == 0);
    std::istringstream aff(line.substr(7));
    std::vector<int> nodes;
    for (int v; aff >> v;) nodes.push_back(v);
    CHECK_MESSAGE(nodes == rs.affine_node_neighbors(), rs.name());
    ++blocks;
  }
  CHECK(blocks == 32);
}

TEST_CASE("parabolic subgroup orders classify correctly") {
  RootSystem e8 = RootSystem::build('E', 8);
  CHECK(e8.weyl_order() == Int(696729600));
  CHECK(e8.parabolic_order({1, 3, 4, 5, 6, 7, 8}) == Int(40320));     // A7
  CHECK(e8.parabolic_order({2, 3, 4, 5, 6, 7, 8}) == Int(322560));    // D7
  CHECK(e8.parabolic_order({1, 2, 3, 4, 5, 6, 7}) == Int(2903040));   // E7
  CHECK(e8.parabolic_order({1, 2, 3, 4, 5, 6}) == Int(51840));        // E6
  CHECK(e8.parabolic_order({1, 3}) == Int(6));                        // A2
  CHECK(e8.parabolic_order({2, 3}) == Int(4));                        // A1 x A1
  RootSystem f4 = RootSystem::build('F', 4);
  CHECK(f4.parabolic_order({1, 2, 3, 4}) == Int(1152));
  CHECK(f4.parabolic_order({2, 3}) == Int(8));   // B2
  CHECK(f4.parabolic_order({1, 2, 3}) == Int(48));
  RootSystem b5 = RootSystem::build('B', 5);
  CHECK(b5.parabolic_order({2, 3, 4, 5}) == Int(384)); // B4
  CHECK(b5.parabolic_order({1, 2, 3, 4}) == Int(120)); // A4
}

TEST_CASE("zero is never a root") {
  for (const char* name : {"A2", "B3", "G2"}) {
    RootSystem rs = RootSystem::build(name[0], name[1] - '0');
    CHECK_FALSE(rs.is_root(LatticeVec(rs.rank(), 0)));
  }
}
