#include "sonc/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

#include "sonc/simplex_lp.hpp"

namespace sonc {

namespace {

struct SpanSetup {
  AffineSpan span;
  std::vector<RatVec> coords;  // span coordinates per point
  int k = 0;
};

SpanSetup make_span(const SupportSet& A) {
  SpanSetup s;
  s.span = affine_span_basis(A.points);
  s.k = static_cast<int>(s.span.directions.size());
  for (const Point& p : A.points) s.coords.push_back(*coords_in_span(s.span, p));
  return s;
}

bool affinely_independent(const std::vector<RatVec>& pts) {
  if (pts.empty()) return true;
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  return diffs.empty() || rank(diffs) == diffs.size();
}

void subsets_of_size(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k == 0 || k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
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

RegularSubdivision subdivide(const SupportSet& A, const WeightVector& omega) {
  if (A.n > 3) throw DomainError("AmbientDimTooLarge", "subdivide supports n <= 3");
  if (omega.w.size() != A.count()) throw DomainError("BadWeights", "weight vector length must be d+1");

  SpanSetup s = make_span(A);
  RegularSubdivision out;
  out.dim = s.k;
  out.witness = omega;

  if (s.k == 0) {
    out.cells.push_back(SubCell{{0}, {0}});
    return out;
  }

  std::set<std::vector<std::size_t>> seen;
  subsets_of_size(A.count(), static_cast<std::size_t>(s.k) + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> base;
    for (std::size_t id : idx) base.push_back(s.coords[id]);
    if (!affinely_independent(base)) return;
    // Affine h with h(base_j) = omega_j: unknowns (v, c).
    Mat m;
    RatVec rhs;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      RatVec row = base[j];
      row.push_back(Rat(1));
      m.push_back(std::move(row));
      rhs.push_back(omega.w[idx[j]]);
    }
    std::optional<RatVec> vc = solve(m, rhs);
    if (!vc) return;
    RatVec v(vc->begin(), vc->end() - 1);
    Rat c = vc->back();
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < A.count(); ++i) {
      Rat diff = dot(v, s.coords[i]) + c - omega.w[i];
      if (diff.sign() < 0) return;  // a point above: not an upper-hull facet
      if (diff.is_zero()) on.push_back(i);
    }
    std::vector<RatVec> on_pts;
    for (std::size_t id : on) on_pts.push_back(s.coords[id]);
    Mat dirs;
    for (std::size_t i = 1; i < on_pts.size(); ++i) dirs.push_back(sub(on_pts[i], on_pts[0]));
    int dim_on = dirs.empty() ? 0 : static_cast<int>(rank(dirs));
    if (dim_on != s.k) return;
    if (!seen.insert(on).second) return;
    SubCell cell;
    cell.on = on;
    for (std::size_t i = 0; i < A.count(); ++i)
      if (in_convex_hull(on_pts, s.coords[i])) cell.points.push_back(i);
    out.cells.push_back(std::move(cell));
  });

  std::sort(out.cells.begin(), out.cells.end(),
            [](const SubCell& a, const SubCell& b) { return a.points < b.points; });
  return out;
}

SubdivisionFaces subdivision_faces(const SupportSet& A, const RegularSubdivision& sub) {
  std::map<std::vector<std::size_t>, std::pair<int, std::vector<std::size_t>>> acc;  // pts -> (dim, cells)
  for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
    std::vector<Point> pts;
    for (std::size_t id : sub.cells[ci].points) pts.push_back(A.points[id]);
    for (const Face& f : hull_face_lattice(pts)) {
      std::vector<std::size_t> glob;
      for (std::size_t loc : f.vertex_indices) glob.push_back(sub.cells[ci].points[loc]);
      std::sort(glob.begin(), glob.end());
      auto& slot = acc[glob];
      slot.first = f.dim;
      slot.second.push_back(ci);
    }
  }
  SubdivisionFaces out;
  for (auto& [pts, info] : acc) {
    out.faces.push_back(ComplexFace{pts, info.first});
    std::sort(info.second.begin(), info.second.end());
    info.second.erase(std::unique(info.second.begin(), info.second.end()), info.second.end());
    out.in_cells.push_back(info.second);
    const SubCell& any_cell = sub.cells[info.second.front()];
    std::vector<std::size_t> on;
    for (std::size_t i : any_cell.on)
      if (std::binary_search(pts.begin(), pts.end(), i)) on.push_back(i);
    out.on_sets.push_back(std::move(on));
  }
  return out;
}

std::vector<ComplexFace> SoncComplex::maximal_cells() const {
  std::vector<ComplexFace> out;
  for (const ComplexFace& f : cells) {
    bool maximal = true;
    for (const ComplexFace& g : cells) {
      if (f.points == g.points) continue;
      if (std::includes(g.points.begin(), g.points.end(), f.points.begin(), f.points.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

SoncComplex sonc_complex(const SupportSet& A, const RegularSubdivision& sub) {
  SubdivisionFaces sf = subdivision_faces(A, sub);
  std::vector<std::size_t> carriers;
  for (std::size_t i = 0; i < sf.faces.size(); ++i) {
    std::vector<Point> pts;
    for (std::size_t id : sf.faces[i].points) pts.push_back(A.points[id]);
    for (std::size_t j : sf.faces[i].points)
      if (in_relative_interior(pts, A.points[j])) {
        carriers.push_back(i);
        break;
      }
  }
  SoncComplex gamma;
  for (const ComplexFace& f : sf.faces) {
    bool inside = false;
    for (std::size_t c : carriers) {
      const auto& cp = sf.faces[c].points;
      if (std::includes(cp.begin(), cp.end(), f.points.begin(), f.points.end())) {
        inside = true;
        break;
      }
    }
    if (inside) gamma.cells.push_back(f);
  }
  std::sort(gamma.cells.begin(), gamma.cells.end());
  return gamma;
}

TropicalComplex tropical_complex(const SupportSet& A, const WeightVector& omega) {
  if (A.n > 3) throw DomainError("AmbientDimTooLarge", "tropical_complex supports n <= 3");
  RegularSubdivision subdiv = subdivide(A, omega);
  SubdivisionFaces sf = subdivision_faces(A, subdiv);

  TropicalComplex M;
  M.lineality = orthogonal_complement_of_span(A.points, A.n);

  // One dual vertex per top cell, from the exact equal-value system.
  std::vector<RatVec> vert(subdiv.cells.size());
  for (std::size_t ci = 0; ci < subdiv.cells.size(); ++ci) {
    const std::vector<std::size_t>& on = subdiv.cells[ci].on;
    Mat m;
    RatVec rhs;
    std::size_t i0 = on.front();
    for (std::size_t t = 1; t < on.size(); ++t) {
      m.push_back(sub(A.points[on[t]], A.points[i0]));
      rhs.push_back(omega.w[i0] - omega.w[on[t]]);
    }
    std::optional<RatVec> x;
    if (m.empty())
      x = RatVec(A.n, Rat(0));
    else
      x = solve(m, rhs);
    if (!x) throw DomainError("Internal", "dual vertex system inconsistent");
    vert[ci] = *x;
    // The vertex must see every other point strictly below the tied value.
    Rat top = omega.w[i0] + dot(*x, A.points[i0]);
    for (std::size_t i = 0; i < A.count(); ++i) {
      Rat val = omega.w[i] + dot(*x, A.points[i]);
      bool tied = std::binary_search(on.begin(), on.end(), i);
      if (tied ? val != top : val >= top)
        throw DomainError("Internal", "dual vertex fails the max-attainment check");
    }
  }
  M.vertices = vert;

  std::vector<Face> hull = hull_face_lattice(A.points);
  int k = subdiv.dim;

  for (std::size_t fi = 0; fi < sf.faces.size(); ++fi) {
    TropCell cell;
    cell.indicator = sf.on_sets[fi];
    std::set<RatVec> vs;
    for (std::size_t ci : sf.in_cells[fi]) vs.insert(vert[ci]);
    cell.vertices.assign(vs.begin(), vs.end());
    // Rays: outward normals of the Newton-polytope facets containing the face.
    std::set<RatVec> rays;
    for (const Face& hf : hull) {
      if (hf.dim != k - 1) continue;
      if (std::includes(hf.vertex_indices.begin(), hf.vertex_indices.end(), sf.faces[fi].points.begin(),
                        sf.faces[fi].points.end()))
        rays.insert(hf.normal);
    }
    cell.rays.assign(rays.begin(), rays.end());
    Mat dirs;
    for (std::size_t t = 1; t < cell.vertices.size(); ++t) dirs.push_back(sub(cell.vertices[t], cell.vertices[0]));
    for (const RatVec& r : cell.rays) dirs.push_back(r);
    for (const RatVec& l : M.lineality) dirs.push_back(l);
    cell.dim = dirs.empty() ? 0 : static_cast<int>(rank(dirs));
    M.cells.push_back(std::move(cell));
  }
  return M;
}

bool check_duality(const SupportSet& A, const RegularSubdivision& sub, const TropicalComplex& M) {
  SubdivisionFaces sf = subdivision_faces(A, sub);
  if (sf.faces.size() != M.cells.size()) return false;

  // Each tropical cell's indicator must saturate to exactly one face, and
  // the correspondence must be a bijection.
  std::vector<std::vector<std::size_t>> face_pts;
  for (const ComplexFace& f : sf.faces) face_pts.push_back(f.points);
  std::vector<std::vector<std::size_t>> cell_sats;
  for (const TropCell& c : M.cells) {
    std::vector<Point> pts;
    for (std::size_t id : c.indicator) pts.push_back(A.points[id]);
    std::vector<std::size_t> sat;
    for (std::size_t i = 0; i < A.count(); ++i)
      if (in_convex_hull(pts, A.points[i])) sat.push_back(i);
    cell_sats.push_back(std::move(sat));
  }
  std::vector<std::vector<std::size_t>> a = face_pts, b = cell_sats;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;  // duplicates break bijectivity

  // Inclusion order reverses, checked on the V-representations.
  for (std::size_t i = 0; i < M.cells.size(); ++i)
    for (std::size_t j = 0; j < M.cells.size(); ++j) {
      if (i == j) continue;
      bool lam_inc = std::includes(cell_sats[j].begin(), cell_sats[j].end(), cell_sats[i].begin(),
                                   cell_sats[i].end());
      if (!lam_inc) continue;
      // lambda_i subset lambda_j must give mu_j subset mu_i.
      for (const RatVec& v : M.cells[j].vertices)
        if (std::find(M.cells[i].vertices.begin(), M.cells[i].vertices.end(), v) == M.cells[i].vertices.end())
          return false;
      for (const RatVec& r : M.cells[j].rays)
        if (std::find(M.cells[i].rays.begin(), M.cells[i].rays.end(), r) == M.cells[i].rays.end()) return false;
    }

  // Vertex systems against the witness weights, when available.
  if (sub.witness) {
    const RatVec& w = sub.witness->w;
    for (const RatVec& x : M.vertices) {
      Rat top;
      bool first = true;
      for (std::size_t i = 0; i < A.count(); ++i) {
        Rat val = w[i] + dot(x, A.points[i]);
        if (first || val > top) top = val;
        first = false;
      }
      // The vertex must realize the maximum at least (k+1) times.
      std::size_t ties = 0;
      for (std::size_t i = 0; i < A.count(); ++i)
        if (w[i] + dot(x, A.points[i]) == top) ++ties;
      if (ties < static_cast<std::size_t>(sub.dim) + 1) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Regularity certification and enumeration
// ---------------------------------------------------------------------------

namespace {

struct CellGeom {
  std::vector<std::size_t> points;            // sorted, saturated
  std::vector<std::size_t> corners_ccw;       // polygon corners (k=2) or endpoints (k=1)
  Rat area;                                   // shoelace area in span coords (k=2), length (k=1)
};

Rat shoelace(const std::vector<RatVec>& poly) {
  Rat s(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const RatVec& p = poly[i];
    const RatVec& q = poly[(i + 1) % poly.size()];
    s += p[0] * q[1] - q[0] * p[1];
  }
  return s / Rat(2);
}

Rat cross2s(const RatVec& o, const RatVec& a, const RatVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Convex clip of polygon P (ccw corner coords) by polygon Q (ccw corner coords).
std::vector<RatVec> convex_clip(std::vector<RatVec> P, const std::vector<RatVec>& Q) {
  for (std::size_t e = 0; e < Q.size() && !P.empty(); ++e) {
    const RatVec& a = Q[e];
    const RatVec& b = Q[(e + 1) % Q.size()];
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < P.size(); ++i) {
      const RatVec& cur = P[i];
      const RatVec& nxt = P[(i + 1) % P.size()];
      Rat sc = cross2s(a, b, cur);
      Rat sn = cross2s(a, b, nxt);
      if (sc.sign() >= 0) out.push_back(cur);
      if ((sc.sign() > 0 && sn.sign() < 0) || (sc.sign() < 0 && sn.sign() > 0)) {
        Rat t = sc / (sc - sn);
        RatVec mid(2);
        mid[0] = cur[0] + t * (nxt[0] - cur[0]);
        mid[1] = cur[1] + t * (nxt[1] - cur[1]);
        out.push_back(std::move(mid));
      }
    }
    P = std::move(out);
  }
  std::vector<RatVec> dedup;
  for (const RatVec& p : P)
    if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(p);
  return dedup;
}

// Distinct extreme points of a zero-area clip result (point or segment).
std::vector<RatVec> segment_extremes(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return pts;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i] < pts[lo]) lo = i;
    if (pts[hi] < pts[i]) hi = i;
  }
  if (pts[lo] == pts[hi]) return {pts[lo]};
  return {pts[lo], pts[hi]};
}

struct EnumContext {
  const SupportSet* A;
  SpanSetup span;
  std::vector<CellGeom> candidates;
  std::vector<RatVec> hull_ccw;                       // corner coords of N(A), ccw
  std::vector<std::pair<std::size_t, std::size_t>> boundary_fragments;  // minimal, ccw oriented
};

std::vector<std::size_t> polygon_corners(const EnumContext& ctx, const std::vector<std::size_t>& pts) {
  std::vector<RatVec> coords;
  for (std::size_t id : pts) coords.push_back(ctx.span.coords[id]);
  // Corner cycle relative to local indexing, mapped back to point ids.
  std::vector<std::size_t> local;
  {
    // hull corners ccw over the local coords
    std::vector<std::size_t> idx(coords.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      if (coords[x][0] != coords[y][0]) return coords[x][0] < coords[y][0];
      return coords[x][1] < coords[y][1];
    });
    auto build = [&](bool lower) {
      std::vector<std::size_t> chain;
      for (std::size_t t = 0; t < idx.size(); ++t) {
        std::size_t i = lower ? idx[t] : idx[idx.size() - 1 - t];
        while (chain.size() >= 2 &&
               cross2s(coords[chain[chain.size() - 2]], coords[chain.back()], coords[i]).sign() <= 0)
          chain.pop_back();
        chain.push_back(i);
      }
      return chain;
    };
    std::vector<std::size_t> lo2 = build(true), hi2 = build(false);
    lo2.pop_back();
    hi2.pop_back();
    local = lo2;
    local.insert(local.end(), hi2.begin(), hi2.end());
  }
  std::vector<std::size_t> out;
  for (std::size_t l : local) out.push_back(pts[l]);
  return out;
}

bool collinear_within(const EnumContext& ctx, std::size_t a, std::size_t b, std::size_t p, std::size_t q) {
  // Is segment [p,q] contained in segment [a,b] (all span coords)?
  const RatVec &A2 = ctx.span.coords[a], &B2 = ctx.span.coords[b];
  const RatVec &P2 = ctx.span.coords[p], &Q2 = ctx.span.coords[q];
  if (!cross2s(A2, B2, P2).is_zero() || !cross2s(A2, B2, Q2).is_zero()) return false;
  RatVec d = sub(B2, A2);
  Rat len2 = dot(d, d);
  Rat tp = dot(sub(P2, A2), d), tq = dot(sub(Q2, A2), d);
  return tp >= Rat(0) && tp <= len2 && tq >= Rat(0) && tq <= len2;
}

// Face-to-face compatibility of two candidate cells.
bool cells_compatible(const EnumContext& ctx, const CellGeom& P, const CellGeom& Q) {
  std::vector<RatVec> pc, qc;
  for (std::size_t id : P.corners_ccw) pc.push_back(ctx.span.coords[id]);
  for (std::size_t id : Q.corners_ccw) qc.push_back(ctx.span.coords[id]);
  std::vector<RatVec> X = convex_clip(pc, qc);
  if (X.empty()) return true;
  // Interior overlap?
  if (X.size() >= 3) {
    // area of the clip polygon (order may be scrambled by dedupe; recompute hull order)
    std::vector<RatVec> ordered = X;
    std::sort(ordered.begin(), ordered.end(), [](const RatVec& x, const RatVec& y) {
      if (x[0] != y[0]) return x[0] < y[0];
      return x[1] < y[1];
    });
    // brute force: any triple with nonzero area means 2-dim intersection
    for (std::size_t i = 0; i < ordered.size(); ++i)
      for (std::size_t j = i + 1; j < ordered.size(); ++j)
        for (std::size_t l = j + 1; l < ordered.size(); ++l)
          if (!cross2s(ordered[i], ordered[j], ordered[l]).is_zero()) return false;
  }
  std::vector<RatVec> ext = segment_extremes(X);
  // The intersection must be a face (vertex or full edge) of both cells.
  auto is_face_of = [&](const CellGeom& C, const std::vector<RatVec>& corners) {
    std::size_t m = C.corners_ccw.size();
    if (ext.size() == 1) {
      for (std::size_t id : C.corners_ccw)
        if (ctx.span.coords[id] == ext[0]) return true;
      return false;
    }
    for (std::size_t t = 0; t < m; ++t) {
      const RatVec& u = corners[t];
      const RatVec& v = corners[(t + 1) % m];
      if ((u == ext[0] && v == ext[1]) || (u == ext[1] && v == ext[0])) return true;
    }
    return false;
  };
  return is_face_of(P, pc) && is_face_of(Q, qc);
}

struct Frontier {
  std::set<std::pair<std::size_t, std::size_t>> open_interior;  // placed directed edges waiting for a partner
  std::set<std::pair<std::size_t, std::size_t>> needed_boundary;  // ccw fragments still uncovered
};

bool on_hull_boundary(const EnumContext& ctx, std::size_t a, std::size_t b) {
  // Segment [a,b] on the boundary of N(A)?
  std::size_t m = ctx.hull_ccw.size();
  const RatVec &A2 = ctx.span.coords[a], &B2 = ctx.span.coords[b];
  for (std::size_t t = 0; t < m; ++t) {
    const RatVec& u = ctx.hull_ccw[t];
    const RatVec& v = ctx.hull_ccw[(t + 1) % m];
    if (!cross2s(u, v, A2).is_zero() || !cross2s(u, v, B2).is_zero()) continue;
    RatVec d = sub(v, u);
    Rat len2 = dot(d, d);
    Rat ta = dot(sub(A2, u), d), tb = dot(sub(B2, u), d);
    if (ta >= Rat(0) && ta <= len2 && tb >= Rat(0) && tb <= len2) return true;
  }
  return false;
}

// Apply a cell placement to the frontier; returns false if it conflicts.
bool apply_cell(const EnumContext& ctx, const CellGeom& cell, Frontier& fr) {
  std::size_t m = cell.corners_ccw.size();
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t a = cell.corners_ccw[t];
    std::size_t b = cell.corners_ccw[(t + 1) % m];
    if (on_hull_boundary(ctx, a, b)) {
      // Decompose into minimal boundary fragments and consume them.
      std::vector<std::pair<std::size_t, std::size_t>> covered;
      for (const auto& frag : ctx.boundary_fragments)
        if (collinear_within(ctx, a, b, frag.first, frag.second)) covered.push_back(frag);
      if (covered.empty()) return false;
      for (const auto& frag : covered) {
        if (!fr.needed_boundary.count(frag)) return false;  // double cover
        fr.needed_boundary.erase(frag);
      }
    } else {
      auto rev = std::make_pair(b, a);
      if (fr.open_interior.count(rev))
        fr.open_interior.erase(rev);
      else if (fr.open_interior.count({a, b}))
        return false;  // same oriented edge twice
      else
        fr.open_interior.insert({a, b});
    }
  }
  return true;
}

void search(const EnumContext& ctx, std::vector<std::size_t>& placed, Frontier fr,
            std::set<std::vector<std::vector<std::size_t>>>& results) {
  if (fr.open_interior.empty() && fr.needed_boundary.empty()) {
    std::vector<std::vector<std::size_t>> complex_cells;
    for (std::size_t ci : placed) complex_cells.push_back(ctx.candidates[ci].points);
    std::sort(complex_cells.begin(), complex_cells.end());
    results.insert(complex_cells);
    return;
  }

  std::vector<std::size_t> options;
  if (!fr.open_interior.empty()) {
    auto slot = *fr.open_interior.begin();
    auto want = std::make_pair(slot.second, slot.first);
    for (std::size_t ci = 0; ci < ctx.candidates.size(); ++ci) {
      const CellGeom& cg = ctx.candidates[ci];
      std::size_t m = cg.corners_ccw.size();
      for (std::size_t t = 0; t < m; ++t)
        if (cg.corners_ccw[t] == want.first && cg.corners_ccw[(t + 1) % m] == want.second) {
          options.push_back(ci);
          break;
        }
    }
  } else {
    auto frag = *fr.needed_boundary.begin();
    for (std::size_t ci = 0; ci < ctx.candidates.size(); ++ci) {
      const CellGeom& cg = ctx.candidates[ci];
      std::size_t m = cg.corners_ccw.size();
      for (std::size_t t = 0; t < m; ++t) {
        std::size_t a = cg.corners_ccw[t];
        std::size_t b = cg.corners_ccw[(t + 1) % m];
        if (on_hull_boundary(ctx, a, b) && collinear_within(ctx, a, b, frag.first, frag.second)) {
          options.push_back(ci);
          break;
        }
      }
    }
  }

  for (std::size_t ci : options) {
    if (std::find(placed.begin(), placed.end(), ci) != placed.end()) continue;
    bool ok = true;
    for (std::size_t pj : placed)
      if (!cells_compatible(ctx, ctx.candidates[ci], ctx.candidates[pj])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    Frontier next = fr;
    if (!apply_cell(ctx, ctx.candidates[ci], next)) continue;
    placed.push_back(ci);
    search(ctx, placed, std::move(next), results);
    placed.pop_back();
  }
}

// LP-based regularity certificate over span coordinates.
std::optional<WeightVector> regularity_witness(const SupportSet& A, const SpanSetup& span,
                                               const std::vector<std::vector<std::size_t>>& cells,
                                               const std::vector<std::vector<std::size_t>>& corner_sets) {
  int k = span.k;
  std::size_t nc = cells.size();
  std::size_t nvars = nc * (k + 1) + 1;  // per cell: v (k), c; plus slack s
  std::size_t s_col = nvars - 1;
  auto h_row = [&](std::size_t cell, const RatVec& y, Rat sign_) {
    RatVec row(nvars, Rat(0));
    for (int j = 0; j < k; ++j) row[cell * (k + 1) + j] = sign_ * y[j];
    row[cell * (k + 1) + k] = sign_;
    return row;
  };

  Mat ineq;
  RatVec rhs;
  for (std::size_t i = 0; i < A.count(); ++i) {
    std::vector<std::size_t> vcells;  // cells where point i is a corner
    std::vector<std::size_t> incells;
    for (std::size_t c = 0; c < nc; ++c) {
      if (std::binary_search(cells[c].begin(), cells[c].end(), i)) incells.push_back(c);
      if (std::find(corner_sets[c].begin(), corner_sets[c].end(), i) != corner_sets[c].end()) vcells.push_back(c);
    }
    if (vcells.empty()) continue;
    const RatVec& y = span.coords[i];
    // Equal heights at shared corners.
    for (std::size_t t = 1; t < vcells.size(); ++t) {
      RatVec row = h_row(vcells[0], y, Rat(1));
      RatVec row2 = h_row(vcells[t], y, Rat(-1));
      for (std::size_t j = 0; j < nvars; ++j) row[j] += row2[j];
      ineq.push_back(row);
      rhs.push_back(Rat(0));
      ineq.push_back(scale(row, Rat(-1)));
      rhs.push_back(Rat(0));
    }
    // Strictly below every foreign cell's plane.
    for (std::size_t c = 0; c < nc; ++c) {
      if (std::binary_search(cells[c].begin(), cells[c].end(), i)) continue;
      RatVec row = h_row(vcells[0], y, Rat(1));
      RatVec row2 = h_row(c, y, Rat(-1));
      for (std::size_t j = 0; j < nvars; ++j) row[j] += row2[j];
      row[s_col] += Rat(1);
      ineq.push_back(row);
      rhs.push_back(Rat(0));
    }
  }
  {
    RatVec row(nvars, Rat(0));
    row[s_col] = Rat(1);
    ineq.push_back(row);
    rhs.push_back(Rat(1));
  }
  RatVec obj(nvars, Rat(0));
  obj[s_col] = Rat(1);
  LPResult lp = lp_maximize(ineq, rhs, obj);
  if (lp.status != LPResult::Status::Optimal || lp.value.sign() <= 0) return std::nullopt;

  WeightVector w;
  w.w.assign(A.count(), Rat(0));
  for (std::size_t i = 0; i < A.count(); ++i) {
    std::size_t c = nc;
    for (std::size_t cc = 0; cc < nc; ++cc)
      if (std::binary_search(cells[cc].begin(), cells[cc].end(), i)) {
        c = cc;
        break;
      }
    if (c == nc) return std::nullopt;  // cells do not cover the point
    Rat val = lp.x[c * (k + 1) + k];
    for (int j = 0; j < k; ++j) val += lp.x[c * (k + 1) + j] * span.coords[i][j];
    w.w[i] = val;
  }
  return w;
}

std::vector<std::size_t> saturate(const SupportSet& A, const SpanSetup& span, const std::vector<std::size_t>& S) {
  std::vector<RatVec> pts;
  for (std::size_t id : S) pts.push_back(span.coords[id]);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.count(); ++i)
    if (in_convex_hull(pts, span.coords[i])) out.push_back(i);
  return out;
}

}  // namespace

std::optional<WeightVector> is_regular(const SupportSet& A, const std::vector<std::vector<std::size_t>>& cells_in) {
  SpanSetup span = make_span(A);
  int k = span.k;

  if (cells_in.empty()) throw DomainError("InvalidSubdivision", "no cells");
  std::vector<std::vector<std::size_t>> cells = cells_in;
  for (auto& c : cells) std::sort(c.begin(), c.end());

  if (k == 0) {
    if (cells.size() != 1 || cells[0] != std::vector<std::size_t>{0})
      throw DomainError("InvalidSubdivision", "a point has only the trivial subdivision");
    return WeightVector{RatVec(1, Rat(0))};
  }

  // Structural validation: saturation, dimension, coverage, face-to-face.
  std::vector<CellGeom> geoms;
  Rat total(0);
  for (const auto& c : cells) {
    for (std::size_t id : c)
      if (id >= A.count()) throw DomainError("InvalidSubdivision", "point index out of range");
    if (saturate(A, span, c) != c) throw DomainError("InvalidSubdivision", "cell point set is not saturated");
    std::vector<RatVec> pts;
    for (std::size_t id : c) pts.push_back(span.coords[id]);
    Mat dirs;
    for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
    int dim_c = dirs.empty() ? 0 : static_cast<int>(rank(dirs));
    if (dim_c != k) throw DomainError("InvalidSubdivision", "cell is not top-dimensional");
    CellGeom g;
    g.points = c;
    if (k == 2) {
      EnumContext tmp;
      tmp.A = &A;
      tmp.span = span;
      g.corners_ccw = polygon_corners(tmp, c);
      std::vector<RatVec> cs;
      for (std::size_t id : g.corners_ccw) cs.push_back(span.coords[id]);
      g.area = shoelace(cs);
    } else {
      // k == 1: endpoints by span coordinate.
      std::size_t lo = c[0], hi = c[0];
      for (std::size_t id : c) {
        if (span.coords[id][0] < span.coords[lo][0]) lo = id;
        if (span.coords[id][0] > span.coords[hi][0]) hi = id;
      }
      g.corners_ccw = {lo, hi};
      g.area = span.coords[hi][0] - span.coords[lo][0];
    }
    total += g.area;
    geoms.push_back(std::move(g));
  }

  if (k == 2) {
    EnumContext ctx;
    ctx.A = &A;
    ctx.span = span;
    std::vector<std::size_t> all(A.count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> hull_corner_ids = polygon_corners(ctx, all);
    std::vector<RatVec> hull_cs;
    for (std::size_t id : hull_corner_ids) hull_cs.push_back(span.coords[id]);
    if (total != shoelace(hull_cs)) throw DomainError("InvalidSubdivision", "cells do not cover N(A)");
    for (std::size_t i = 0; i < geoms.size(); ++i)
      for (std::size_t j = i + 1; j < geoms.size(); ++j)
        if (!cells_compatible(ctx, geoms[i], geoms[j]))
          throw DomainError("InvalidSubdivision", "cells are not face-to-face");
  } else {
    Rat lo = span.coords[0][0], hi = span.coords[0][0];
    for (const RatVec& c : span.coords) {
      if (c[0] < lo) lo = c[0];
      if (c[0] > hi) hi = c[0];
    }
    if (total != hi - lo) throw DomainError("InvalidSubdivision", "cells do not cover N(A)");
    for (std::size_t i = 0; i < geoms.size(); ++i)
      for (std::size_t j = i + 1; j < geoms.size(); ++j) {
        Rat alo = span.coords[geoms[i].corners_ccw[0]][0], ahi = span.coords[geoms[i].corners_ccw[1]][0];
        Rat blo = span.coords[geoms[j].corners_ccw[0]][0], bhi = span.coords[geoms[j].corners_ccw[1]][0];
        Rat ilo = std::max(alo, blo), ihi = std::min(ahi, bhi);
        if (ilo < ihi) throw DomainError("InvalidSubdivision", "interval cells overlap");
      }
  }

  std::vector<std::vector<std::size_t>> corner_sets;
  for (const CellGeom& g : geoms) corner_sets.push_back(g.corners_ccw);
  return regularity_witness(A, span, cells, corner_sets);
}

std::vector<RegularSubdivision> enumerate_regular_subdivisions(const SupportSet& A) {
  if (A.n > 2) throw DomainError("TooLarge", "enumeration supports n <= 2");
  if (A.count() > 10) throw DomainError("TooLarge", "enumeration supports at most 10 points");

  SpanSetup span = make_span(A);
  std::vector<std::vector<std::vector<std::size_t>>> complexes;

  if (span.k == 0) {
    complexes.push_back({{0}});
  } else if (span.k == 1) {
    std::vector<std::size_t> order(A.count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return span.coords[a][0] < span.coords[b][0]; });
    std::size_t inner = order.size() - 2;
    for (std::size_t mask = 0; mask < (1u << inner); ++mask) {
      std::vector<std::size_t> breaks;  // positions in `order`
      breaks.push_back(0);
      for (std::size_t t = 0; t < inner; ++t)
        if (mask & (1u << t)) breaks.push_back(t + 1);
      breaks.push_back(order.size() - 1);
      std::vector<std::vector<std::size_t>> cells;
      for (std::size_t t = 0; t + 1 < breaks.size(); ++t) {
        std::vector<std::size_t> cell(order.begin() + breaks[t], order.begin() + breaks[t + 1] + 1);
        std::sort(cell.begin(), cell.end());
        cells.push_back(std::move(cell));
      }
      std::sort(cells.begin(), cells.end());
      complexes.push_back(std::move(cells));
    }
  } else {
    EnumContext ctx;
    ctx.A = &A;
    ctx.span = span;
    // Candidate cells: saturated, full-dimensional subsets.
    std::set<std::vector<std::size_t>> cand_seen;
    for (std::size_t mask = 1; mask < (1u << A.count()); ++mask) {
      std::vector<std::size_t> S;
      for (std::size_t i = 0; i < A.count(); ++i)
        if (mask & (1u << i)) S.push_back(i);
      if (S.size() < 3) continue;
      std::vector<RatVec> pts;
      for (std::size_t id : S) pts.push_back(span.coords[id]);
      Mat dirs;
      for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
      if (static_cast<int>(rank(dirs)) != 2) continue;
      std::vector<std::size_t> sat = saturate(A, span, S);
      if (sat != S) continue;
      if (!cand_seen.insert(sat).second) continue;
      CellGeom g;
      g.points = sat;
      g.corners_ccw = polygon_corners(ctx, sat);
      std::vector<RatVec> cs;
      for (std::size_t id : g.corners_ccw) cs.push_back(span.coords[id]);
      g.area = shoelace(cs);
      ctx.candidates.push_back(std::move(g));
    }
    // Boundary fragments of N(A).
    std::vector<std::size_t> all(A.count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> hull_ids = polygon_corners(ctx, all);
    for (std::size_t id : hull_ids) ctx.hull_ccw.push_back(span.coords[id]);
    std::size_t m = hull_ids.size();
    for (std::size_t t = 0; t < m; ++t) {
      std::size_t a = hull_ids[t], b = hull_ids[(t + 1) % m];
      // All points on the closed segment, ordered from a to b.
      RatVec d = sub(span.coords[b], span.coords[a]);
      std::vector<std::pair<Rat, std::size_t>> line;
      for (std::size_t i = 0; i < A.count(); ++i) {
        if (!cross2s(span.coords[a], span.coords[b], span.coords[i]).is_zero()) continue;
        Rat tpos = dot(sub(span.coords[i], span.coords[a]), d);
        if (tpos < Rat(0) || tpos > dot(d, d)) continue;
        line.emplace_back(tpos, i);
      }
      std::sort(line.begin(), line.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      for (std::size_t t2 = 0; t2 + 1 < line.size(); ++t2)
        ctx.boundary_fragments.emplace_back(line[t2].second, line[t2 + 1].second);
    }

    Frontier fr;
    for (const auto& frag : ctx.boundary_fragments) fr.needed_boundary.insert(frag);
    std::vector<std::size_t> placed;
    std::set<std::vector<std::vector<std::size_t>>> results;
    search(ctx, placed, fr, results);
    complexes.assign(results.begin(), results.end());
  }

  std::vector<RegularSubdivision> out;
  for (const auto& cells : complexes) {
    std::optional<WeightVector> w = is_regular(A, cells);
    if (!w) continue;
    RegularSubdivision sub = subdivide(A, *w);
    std::vector<std::vector<std::size_t>> got;
    for (const SubCell& c : sub.cells) got.push_back(c.points);
    std::sort(got.begin(), got.end());
    if (got != cells) throw DomainError("Internal", "witness does not reproduce the enumerated subdivision");
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace sonc
