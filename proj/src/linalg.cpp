#include "sonc/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace sonc {

Mat transpose(const Mat& m) {
  Mat t(cols(m), RatVec(rows(m)));
  for (std::size_t i = 0; i < rows(m); ++i)
    for (std::size_t j = 0; j < cols(m); ++j) t[j][i] = m[i][j];
  return t;
}

namespace {

// Row echelon reduction; returns pivot columns in order.
std::vector<std::size_t> echelon(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols(m) && r < rows(m); ++c) {
    std::size_t p = r;
    while (p < rows(m) && m[p][c].is_zero()) ++p;
    if (p == rows(m)) continue;
    std::swap(m[p], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols(m); ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows(m); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols(m); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Mat m) { return echelon(m).size(); }

std::vector<RatVec> kernel_basis(const Mat& m) {
  Mat a = m;
  std::size_t n = cols(m);
  std::vector<std::size_t> pivots = echelon(a);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(n, Rat(0));
    v[f] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(Mat m, RatVec b) {
  if (rows(m) != b.size()) throw std::invalid_argument("solve: size mismatch");
  std::size_t n = cols(m);
  for (std::size_t i = 0; i < rows(m); ++i) m[i].push_back(b[i]);
  std::vector<std::size_t> pivots = echelon(m);
  // Inconsistent if a pivot landed in the appended column.
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  RatVec x(n, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
  return x;
}

Rat dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec scale(const RatVec& a, const Rat& s) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

}  // namespace sonc
