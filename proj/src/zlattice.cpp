#include "rootlen/zlattice.hpp"

#include "rootlen/errors.hpp"

#include <algorithm>

namespace rootlen {

Hnf hermite_normal_form(const std::vector<LatticeVec>& gens, int dim) {
  std::vector<std::vector<Int>> cols;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != dim) throw InvalidInput("generator dimension mismatch");
    cols.emplace_back(g.begin(), g.end());
  }
  Hnf h;
  h.dim = dim;
  std::size_t c = 0; // next pivot column slot
  for (int row = 0; row < dim && c < cols.size(); ++row) {
    // gcd-reduce columns c.. until at most one has a nonzero entry at `row`
    for (;;) {
      std::size_t best = cols.size();
      for (std::size_t j = c; j < cols.size(); ++j)
        if (cols[j][row] != 0 &&
            (best == cols.size() ||
             boost::multiprecision::abs(cols[j][row]) < boost::multiprecision::abs(cols[best][row])))
          best = j;
      if (best == cols.size()) break; // all zero at this row
      std::swap(cols[c], cols[best]);
      bool others = false;
      for (std::size_t j = c + 1; j < cols.size(); ++j) {
        if (cols[j][row] == 0) continue;
        Int q = cols[j][row] / cols[c][row]; // truncated division
        if (q != 0)
          for (int i = 0; i < dim; ++i) cols[j][i] -= q * cols[c][i];
        if (cols[j][row] != 0) others = true;
      }
      if (!others) break;
    }
    if (cols[c][row] == 0) continue; // no pivot in this row
    if (cols[c][row] < 0)
      for (int i = 0; i < dim; ++i) cols[c][i] = -cols[c][i];
    // reduce the pivot row entries of the earlier columns into [0, pivot)
    for (std::size_t k = 0; k < c; ++k) {
      Int q = cols[k][row] / cols[c][row];
      if (cols[k][row] - q * cols[c][row] < 0) --q;
      if (q != 0)
        for (int i = 0; i < dim; ++i) cols[k][i] -= q * cols[c][i];
    }
    h.pivot_rows.push_back(row);
    ++c;
  }
  cols.resize(c);
  h.cols = std::move(cols);
  return h;
}

bool in_lattice(const Hnf& h, const LatticeVec& v) {
  if (static_cast<int>(v.size()) != h.dim) throw InvalidInput("dimension mismatch");
  std::vector<Int> r(v.begin(), v.end());
  // Columns right of a pivot column are zero in its pivot row, so a single
  // left-to-right substitution decides membership.
  for (std::size_t c = 0; c < h.cols.size(); ++c) {
    int row = h.pivot_rows[c];
    const Int& p = h.cols[c][row];
    if (r[row] % p != 0) return false;
    Int q = r[row] / p;
    if (q != 0)
      for (int i = 0; i < h.dim; ++i) r[i] -= q * h.cols[c][i];
  }
  return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

namespace {

// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rat pv = m[r][col];
    for (auto& x : m[r]) x /= pv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t k = 0; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  return pivots;
}

} // namespace

int rational_rank(const std::vector<LatticeVec>& vecs, int dim) {
  std::vector<std::vector<Rat>> m;
  for (const auto& v : vecs) {
    if (static_cast<int>(v.size()) != dim) throw InvalidInput("dimension mismatch");
    m.emplace_back(v.begin(), v.end());
  }
  return static_cast<int>(rref(m).size());
}

std::vector<LatticeVec> kernel_lattice(const std::vector<LatticeVec>& rows, int ncols) {
  const int m = static_cast<int>(rows.size());
  // column reduction of (rows) with the same unimodular operations applied to
  // an identity block; columns that end up zero give a kernel lattice basis
  std::vector<std::vector<Int>> mc(ncols, std::vector<Int>(m, 0));
  std::vector<std::vector<Int>> uc(ncols, std::vector<Int>(ncols, 0));
  for (int j = 0; j < ncols; ++j) {
    uc[j][j] = 1;
    for (int i = 0; i < m; ++i) mc[j][i] = rows[i][j];
  }
  std::size_t c = 0;
  for (int row = 0; row < m && c < mc.size(); ++row) {
    for (;;) {
      std::size_t best = mc.size();
      for (std::size_t j = c; j < mc.size(); ++j)
        if (mc[j][row] != 0 &&
            (best == mc.size() ||
             boost::multiprecision::abs(mc[j][row]) < boost::multiprecision::abs(mc[best][row])))
          best = j;
      if (best == mc.size()) break;
      std::swap(mc[c], mc[best]);
      std::swap(uc[c], uc[best]);
      bool others = false;
      for (std::size_t j = c + 1; j < mc.size(); ++j) {
        if (mc[j][row] == 0) continue;
        Int q = mc[j][row] / mc[c][row];
        if (q != 0) {
          for (int i = 0; i < m; ++i) mc[j][i] -= q * mc[c][i];
          for (int i = 0; i < ncols; ++i) uc[j][i] -= q * uc[c][i];
        }
        if (mc[j][row] != 0) others = true;
      }
      if (!others) break;
    }
    if (mc[c][row] != 0) ++c;
  }
  std::vector<LatticeVec> kernel;
  for (std::size_t j = c; j < mc.size(); ++j) {
    bool zero = true;
    for (int i = 0; i < m; ++i) zero = zero && mc[j][i] == 0;
    if (!zero) throw InvalidInput("column reduction left a nonzero non-pivot column");
    LatticeVec y(ncols);
    for (int i = 0; i < ncols; ++i) y[i] = static_cast<Coord>(uc[j][i]);
    kernel.push_back(std::move(y));
  }
  return kernel;
}

std::vector<LatticeVec> span_normals(const std::vector<LatticeVec>& vecs, int dim) {
  // kernel of the matrix with rows = vecs, cleared to integer vectors
  std::vector<std::vector<Rat>> m;
  for (const auto& v : vecs) m.emplace_back(v.begin(), v.end());
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(dim, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<LatticeVec> normals;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RatVec k(dim, 0);
    k[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -m[r][free];
    Int den = 1;
    for (const Rat& x : k) den = boost::multiprecision::lcm(den, rat_den(x));
    LatticeVec ki(dim);
    for (int i = 0; i < dim; ++i) ki[i] = static_cast<Coord>(Int(rat_num(k[i]) * (den / rat_den(k[i]))));
    normals.push_back(std::move(ki));
  }
  return normals;
}

} // namespace rootlen
