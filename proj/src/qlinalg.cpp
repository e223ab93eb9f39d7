#include "parker/qlinalg.hpp"

namespace parker::qlinalg {

namespace {

// Reduces `a` to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = a.size();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const mpq_class s = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= s;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<Vector> solve(Matrix a, Vector b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

std::vector<Vector> kernel(Matrix a, std::size_t cols) {
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(Matrix a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  return rref(a, cols).size();
}

}  // namespace parker::qlinalg
