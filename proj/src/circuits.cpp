#include "sonc/circuits.hpp"

#include <algorithm>
#include <functional>

#include "sonc/simplex_lp.hpp"

namespace sonc {

RatVec Circuit::full_vector(std::size_t d_plus_1) const {
  RatVec v(d_plus_1, Rat(0));
  for (std::size_t k = 0; k < support.size(); ++k) v[support[k]] = kernel_vec[k];
  return v;
}

namespace {

Mat restricted_matrix(const SupportSet& A, const std::vector<std::size_t>& cols_idx) {
  Mat m(rows(A.matrix), RatVec(cols_idx.size()));
  for (std::size_t r = 0; r < rows(A.matrix); ++r)
    for (std::size_t k = 0; k < cols_idx.size(); ++k) m[r][k] = A.matrix[r][cols_idx[k]];
  return m;
}

Circuit make_circuit(const SupportSet& A, std::vector<std::size_t> support, RatVec v) {
  int neg = 0, pos = 0;
  for (const Rat& x : v) (x.sign() < 0 ? neg : pos)++;
  if (pos == 1 && neg != 1) {
    // Flip so the single-entry side is negative.
    for (Rat& x : v) x = -x;
    std::swap(neg, pos);
  }
  Circuit c;
  c.support = std::move(support);
  c.simplicial = (neg == 1);
  if (c.simplicial) {
    std::size_t ni = 0;
    while (v[ni].sign() >= 0) ++ni;
    Rat s = Rat(-1) / v[ni];
    for (Rat& x : v) x *= s;
    c.interior_index = c.support[ni];
  } else {
    std::size_t f = 0;
    while (v[f].is_zero()) ++f;
    Rat s = Rat(1) / v[f];
    for (Rat& x : v) x *= s;
    neg = pos = 0;
    for (const Rat& x : v) (x.sign() < 0 ? neg : pos)++;
  }
  c.signature = {neg, pos};
  c.kernel_vec = v;
  c.integer_vec = primitive_integer_form(v);
  std::vector<Point> pts;
  for (std::size_t id : c.support) pts.push_back(A.points[id]);
  c.dim = affine_dim(pts);
  return c;
}

void subsets_of_size(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k == 0 || k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const SupportSet& A) {
  std::size_t r = rank(A.matrix);
  std::vector<Circuit> out;
  for (std::size_t size = 2; size <= r + 1 && size <= A.count(); ++size) {
    subsets_of_size(A.count(), size, [&](const std::vector<std::size_t>& idx) {
      Mat m = restricted_matrix(A, idx);
      std::vector<RatVec> ker = kernel_basis(m);
      if (ker.size() != 1) return;
      for (const Rat& x : ker[0])
        if (x.is_zero()) return;  // not fully supported
      out.push_back(make_circuit(A, idx, ker[0]));
    });
  }
  std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.support < b.support; });
  return out;
}

RatVec barycentric_vector(const Circuit& c) {
  if (!c.simplicial) throw DomainError("NotSimplicial", "barycentric vector requires a simplicial circuit");
  return c.kernel_vec;
}

bool is_edge_generator(const SupportSet& A, const Circuit& c) {
  if (!c.simplicial) throw DomainError("NotSimplicial", "edge generator test requires a simplicial circuit");
  std::vector<Point> pts;
  for (std::size_t id : c.support) pts.push_back(A.points[id]);
  for (std::size_t i = 0; i < A.count(); ++i) {
    if (std::binary_search(c.support.begin(), c.support.end(), i)) continue;
    if (in_convex_hull(pts, A.points[i])) return false;
  }
  return true;
}

ReznickCone reznick_cone(const SupportSet& A) {
  ReznickCone rc;
  for (Circuit& c : enumerate_circuits(A))
    if (c.simplicial) rc.circuits.push_back(std::move(c));
  Mat span;
  for (const Circuit& c : rc.circuits) {
    span.push_back(c.full_vector(A.count()));
    if (is_edge_generator(A, c)) rc.edge_generators.push_back(c);
  }
  rc.dim = span.empty() ? 0 : static_cast<int>(rank(span));
  return rc;
}

Circuit simplicial_circuit_through(const SupportSet& A, std::size_t interior, std::size_t vertex) {
  if (interior >= A.count() || vertex >= A.count() || interior == vertex)
    throw DomainError("BadIndex", "need two distinct valid point indices");
  if (!in_relative_interior(A.points, A.points[interior]))
    throw DomainError("NotInteriorPoint", "base point must lie in the relative interior of N(A)");

  const Point& a0 = A.points[interior];
  const Point& a1 = A.points[vertex];
  RatVec v = sub(a0, a1);

  // Exit point of the ray a1 + t v through the boundary, beyond a0 (t > 1).
  std::vector<Face> lattice = newton_faces(A);
  int k = affine_dim(A.points);
  std::optional<Rat> tmax;
  for (const Face& f : lattice) {
    if (f.dim != k - 1) continue;
    Rat dv = dot(f.normal, v);
    if (dv.sign() <= 0) continue;
    Rat t = (f.offset - dot(f.normal, a1)) / dv;
    if (!tmax || t < *tmax) tmax = t;
  }
  if (!tmax || *tmax <= Rat(1)) throw DomainError("Internal", "ray exit not found beyond the interior point");
  Point exit_pt = add(a1, scale(v, *tmax));

  // Smallest face containing the exit point.
  const Face* F = nullptr;
  for (const Face& f : lattice) {
    std::vector<Point> fp;
    for (std::size_t id : f.vertex_indices) fp.push_back(A.points[id]);
    if (in_convex_hull(fp, exit_pt)) {
      F = &f;
      break;  // lattice is sorted by dimension
    }
  }
  if (!F) throw DomainError("Internal", "exit point not on any face");

  // Convex representation of the exit point over A cap F; a basic LP solution
  // automatically has affinely independent support.
  std::size_t fcount = F->vertex_indices.size();
  Mat eq;  // sum lambda = 1 ; sum lambda alpha = exit
  RatVec rhs;
  {
    RatVec row(fcount, Rat(1));
    eq.push_back(row);
    rhs.push_back(Rat(1));
    for (int coord = 0; coord < A.n; ++coord) {
      RatVec r(fcount);
      for (std::size_t j = 0; j < fcount; ++j) r[j] = A.points[F->vertex_indices[j]][coord];
      eq.push_back(r);
      rhs.push_back(exit_pt[coord]);
    }
  }
  Mat ineq;  // lambda >= 0
  RatVec ib;
  for (std::size_t j = 0; j < fcount; ++j) {
    RatVec r(fcount, Rat(0));
    r[j] = Rat(-1);
    ineq.push_back(r);
    ib.push_back(Rat(0));
  }
  Mat all = ineq;
  RatVec ball = ib;
  for (std::size_t i = 0; i < eq.size(); ++i) {
    all.push_back(eq[i]);
    ball.push_back(rhs[i]);
    all.push_back(scale(eq[i], Rat(-1)));
    ball.push_back(-rhs[i]);
  }
  LPResult lp = lp_maximize(all, ball, RatVec(fcount, Rat(0)));
  if (lp.status != LPResult::Status::Optimal) throw DomainError("Internal", "no convex representation on the face");

  Rat delta0 = Rat(1) / *tmax;
  Rat delta1 = Rat(1) - delta0;

  std::vector<std::pair<std::size_t, Rat>> weights;  // positive coefficients, global index
  weights.emplace_back(vertex, delta1);
  for (std::size_t j = 0; j < fcount; ++j)
    if (lp.x[j].sign() > 0) weights.emplace_back(F->vertex_indices[j], delta0 * lp.x[j]);
  std::sort(weights.begin(), weights.end());

  std::vector<std::size_t> support;
  RatVec kv;
  bool placed = false;
  for (std::size_t t = 0; t <= weights.size(); ++t) {
    bool put_interior = !placed && (t == weights.size() || weights[t].first > interior);
    if (put_interior) {
      support.push_back(interior);
      kv.push_back(Rat(-1));
      placed = true;
    }
    if (t < weights.size()) {
      support.push_back(weights[t].first);
      kv.push_back(weights[t].second);
    }
  }

  // Verify the kernel property exactly, then re-derive flags through the
  // canonical constructor path.
  RatVec prod(rows(A.matrix), Rat(0));
  for (std::size_t r2 = 0; r2 < rows(A.matrix); ++r2)
    for (std::size_t j = 0; j < support.size(); ++j) prod[r2] += A.matrix[r2][support[j]] * kv[j];
  for (const Rat& x : prod)
    if (!x.is_zero()) throw DomainError("Internal", "constructed vector is not in the kernel");
  Circuit canon = make_circuit(A, support, kv);
  if (!canon.simplicial || canon.interior_index != interior)
    throw DomainError("Internal", "construction did not yield a simplicial circuit with the requested interior");
  return canon;
}

}  // namespace sonc
