#include "sonc/simplex_lp.hpp"

#include <cassert>
#include <stdexcept>

namespace sonc {

namespace {

// Dictionary-style tableau: rows[i] holds the coefficients of all columns
// plus rhs at the end; basis[i] is the basic column of row i.
struct Tableau {
  Mat rows;
  RatVec obj;  // reduced costs, maximization; obj.back() = current -value
  std::vector<std::size_t> basis;
  std::size_t ncols;

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = Rat(1) / rows[r][c];
    for (Rat& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Rat f = rows[i][c];
      for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (!obj[c].is_zero()) {
      Rat f = obj[c];
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Returns false when unbounded.
  bool run() {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (obj[j].sign() > 0) { enter = j; break; }  // Bland
      if (enter == ncols) return true;
      std::size_t leave = rows.size();
      Rat best(0);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter].sign() <= 0) continue;
        Rat ratio = rows[i][ncols] / rows[i][enter];
        if (leave == rows.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult lp_maximize(const Mat& A, const RatVec& b, const RatVec& c) {
  std::size_t m = A.size();
  std::size_t n = c.size();
  for (const auto& row : A) assert(row.size() == n);

  // Free x -> u - w with u, w >= 0; one slack per row; artificials where
  // the rhs had to be negated.
  std::size_t struct_cols = 2 * n + m;
  std::vector<std::size_t> art_cols;
  Tableau t;
  t.basis.resize(m);
  std::size_t total = struct_cols;
  std::vector<bool> need_art(m, false);
  for (std::size_t i = 0; i < m; ++i)
    if (b[i].sign() < 0) {
      need_art[i] = true;
      ++total;
    }
  t.ncols = total;
  t.rows.assign(m, RatVec(total + 1, Rat(0)));
  std::size_t art = struct_cols;
  for (std::size_t i = 0; i < m; ++i) {
    Rat s = need_art[i] ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = s * A[i][j];
      t.rows[i][n + j] = -s * A[i][j];
    }
    t.rows[i][2 * n + i] = s;  // slack
    t.rows[i][total] = s * b[i];
    if (need_art[i]) {
      t.rows[i][art] = Rat(1);
      t.basis[i] = art;
      art_cols.push_back(art);
      ++art;
    } else {
      t.basis[i] = 2 * n + i;
    }
  }

  if (!art_cols.empty()) {
    // Phase 1: maximize -(sum of artificials).
    t.obj.assign(total + 1, Rat(0));
    for (std::size_t ac : art_cols) t.obj[ac] = Rat(-1);
    for (std::size_t i = 0; i < m; ++i)
      if (need_art[i])
        for (std::size_t j = 0; j <= total; ++j) t.obj[j] += t.rows[i][j];
    bool ok = t.run();
    assert(ok);
    (void)ok;
    if (t.obj[total].sign() != 0) return {LPResult::Status::Infeasible, Rat(0), {}};
    // Pivot remaining artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < struct_cols) continue;
      std::size_t c2 = total;
      for (std::size_t j = 0; j < struct_cols; ++j)
        if (!t.rows[i][j].is_zero()) { c2 = j; break; }
      if (c2 != total) t.pivot(i, c2);
    }
    // Rows still carrying a basic artificial are redundant (all structural
    // coefficients zero, rhs zero after a feasible phase 1): drop them,
    // then drop the artificial columns.
    Mat kept;
    std::vector<std::size_t> kept_basis;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (t.basis[i] >= struct_cols) continue;
      RatVec row(t.rows[i].begin(), t.rows[i].begin() + struct_cols);
      row.push_back(t.rows[i][total]);
      kept.push_back(std::move(row));
      kept_basis.push_back(t.basis[i]);
    }
    t.rows = std::move(kept);
    t.basis = std::move(kept_basis);
    t.ncols = struct_cols;
  }

  // Phase 2 objective in terms of the current basis.
  std::size_t w = t.ncols;
  t.obj.assign(w + 1, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    t.obj[j] = c[j];
    t.obj[n + j] = -c[j];
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    Rat f = t.obj[t.basis[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= w; ++j) t.obj[j] -= f * t.rows[i][j];
  }

  if (!t.run()) return {LPResult::Status::Unbounded, Rat(0), {}};

  RatVec x(n, Rat(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    std::size_t bcol = t.basis[i];
    if (bcol < n)
      x[bcol] += t.rows[i][t.ncols];
    else if (bcol < 2 * n)
      x[bcol - n] -= t.rows[i][t.ncols];
  }
  Rat val = dot(c, x);
  return {LPResult::Status::Optimal, val, x};
}

bool lp_feasible(const Mat& A, const RatVec& b, const Mat& E, const RatVec& f) {
  Mat all = A;
  RatVec rhs = b;
  for (std::size_t i = 0; i < E.size(); ++i) {
    all.push_back(E[i]);
    rhs.push_back(f[i]);
    all.push_back(scale(E[i], Rat(-1)));
    rhs.push_back(-f[i]);
  }
  std::size_t n = all.empty() ? 0 : all[0].size();
  LPResult r = lp_maximize(all, rhs, RatVec(n, Rat(0)));
  return r.status == LPResult::Status::Optimal;
}

}  // namespace sonc
