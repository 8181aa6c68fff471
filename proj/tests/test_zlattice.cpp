#include "rootlen/zlattice.hpp"

#include "rootlen/root_system.hpp"

#include <doctest.h>

#include <random>

using namespace rootlen;

TEST_CASE("HNF membership on a sublattice of index 2") {
  // <(1,0,0), (0,1,0), (0,1,2)>: exactly the vectors with even last coordinate
  std::vector<LatticeVec> gens{{1, 0, 0}, {0, 1, 0}, {0, 1, 2}};
  Hnf h = hermite_normal_form(gens, 3);
  CHECK(h.cols.size() == 3);
  CHECK(in_lattice(h, {1, 2, 2}));
  CHECK(in_lattice(h, {0, 0, -4}));
  CHECK_FALSE(in_lattice(h, {0, 0, 1}));
  CHECK_FALSE(in_lattice(h, {1, 2, 3}));
}

TEST_CASE("HNF is a canonical form: shuffled generators agree") {
  std::mt19937 rng(7);
  std::vector<LatticeVec> gens{{2, 1, 0, 3}, {0, 4, -1, 1}, {1, 1, 1, 1}, {3, 0, 0, 2}};
  Hnf h0 = hermite_normal_form(gens, 4);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(gens.begin(), gens.end(), rng);
    // also mix in random integer combinations, which keep the lattice fixed
    std::uniform_int_distribution<int> coef(-2, 2);
    std::vector<LatticeVec> mixed = gens;
    for (std::size_t i = 1; i < mixed.size(); ++i) {
      int c = coef(rng);
      for (int j = 0; j < 4; ++j) mixed[i][j] += c * mixed[i - 1][j];
    }
    CHECK(hermite_normal_form(mixed, 4) == h0);
  }
}

TEST_CASE("HNF of rank-deficient generators") {
  std::vector<LatticeVec> gens{{1, 1}, {2, 2}, {-3, -3}};
  Hnf h = hermite_normal_form(gens, 2);
  CHECK(h.cols.size() == 1);
  CHECK(in_lattice(h, {5, 5}));
  CHECK_FALSE(in_lattice(h, {1, 0}));
  CHECK_FALSE(in_lattice(h, {2, 3}));
}

TEST_CASE("membership catches vectors outside the rational span") {
  std::vector<LatticeVec> gens{{1, 0, 1}};
  Hnf h = hermite_normal_form(gens, 3);
  CHECK(in_lattice(h, {3, 0, 3}));
  CHECK_FALSE(in_lattice(h, {1, 0, 0}));
}

TEST_CASE("rational rank and span normals") {
  std::vector<LatticeVec> vecs{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
  CHECK(rational_rank(vecs, 3) == 2);
  auto normals = span_normals(vecs, 3);
  CHECK(normals.size() == 1);
  for (const auto& v : vecs) {
    Coord dot = 0;
    for (int i = 0; i < 3; ++i) dot += normals[0][i] * v[i];
    CHECK(dot == 0);
  }
}

TEST_CASE("root lattice of any system is the full integer lattice") {
  RootSystem rs = RootSystem::build('F', 4);
  Hnf h = hermite_normal_form(rs.roots(), 4);
  CHECK(h.cols.size() == 4);
  for (std::size_t c = 0; c < h.cols.size(); ++c) CHECK(h.cols[c][h.pivot_rows[c]] == 1);
}

TEST_CASE("kernel lattice is the full integer kernel") {
  // rows (1,1,2): kernel = {y : y1 + y2 + 2 y3 = 0}, e.g. (1,-1,0), (0,2,-1)
  std::vector<LatticeVec> rows{{1, 1, 2}};
  auto k = kernel_lattice(rows, 3);
  CHECK(k.size() == 2);
  for (const auto& y : k) CHECK(y[0] + y[1] + 2 * y[2] == 0);
  // the kernel contains (0,2,-1), which is not an integer combination of
  // naively cleared rational kernel vectors unless the lattice is saturated
  Hnf h = hermite_normal_form(k, 3);
  CHECK(in_lattice(h, {0, 2, -1}));
  CHECK(in_lattice(h, {1, -1, 0}));
  CHECK_FALSE(in_lattice(h, {1, 0, 0}));

  // zero-row input: kernel is everything
  CHECK(kernel_lattice({}, 2).size() == 2);
}
