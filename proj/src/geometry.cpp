#include "sonc/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sonc {

SupportSet::SupportSet(int ambient_dim, std::vector<Point> pts) : n(ambient_dim), points(std::move(pts)) {
  if (points.empty()) throw DomainError("EmptySupport", "support set needs at least one point");
  for (const Point& p : points)
    if (static_cast<int>(p.size()) != n)
      throw DomainError("BadPoint", "point dimension does not match ambient dimension");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw DomainError("DuplicatePoint", "support points must be pairwise distinct");
  matrix.assign(1 + n, RatVec(points.size(), Rat(0)));
  for (std::size_t j = 0; j < points.size(); ++j) {
    matrix[0][j] = Rat(1);
    for (int i = 0; i < n; ++i) matrix[1 + i][j] = points[j][i];
  }
}

SupportSet support_from_ints(int n, const std::vector<std::vector<long>>& pts) {
  std::vector<Point> ps;
  ps.reserve(pts.size());
  for (const auto& row : pts) {
    Point p;
    p.reserve(row.size());
    for (long x : row) p.push_back(Rat(x));
    ps.push_back(std::move(p));
  }
  return SupportSet(n, std::move(ps));
}

Dims dims(const SupportSet& A) {
  int dim = static_cast<int>(rank(A.matrix)) - 1;
  return Dims{dim, A.d() - dim};
}

int affine_dim(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  if (diffs.empty()) return 0;
  return static_cast<int>(rank(diffs));
}

AffineSpan affine_span_basis(const std::vector<Point>& pts) {
  if (pts.empty()) throw DomainError("EmptyInput", "affine_span_basis needs a nonempty list");
  AffineSpan s;
  s.base = pts[0];
  Mat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  // Echelon-select an independent subset, keeping original difference vectors.
  Mat acc;
  for (const RatVec& dv : diffs) {
    acc.push_back(dv);
    if (rank(acc) < acc.size())
      acc.pop_back();
    else
      s.directions.push_back(dv);
  }
  return s;
}

std::vector<RatVec> orthogonal_complement_of_span(const std::vector<Point>& pts, int ambient_dim) {
  AffineSpan s = affine_span_basis(pts);
  if (s.directions.empty()) {
    std::vector<RatVec> full;
    for (int i = 0; i < ambient_dim; ++i) {
      RatVec e(ambient_dim, Rat(0));
      e[i] = Rat(1);
      full.push_back(std::move(e));
    }
    return full;
  }
  return kernel_basis(s.directions);
}

std::optional<RatVec> coords_in_span(const AffineSpan& span, const Point& p) {
  RatVec rhs = sub(p, span.base);
  if (span.directions.empty()) {
    for (const Rat& x : rhs)
      if (!x.is_zero()) return std::nullopt;
    return RatVec{};
  }
  Mat cols = transpose(span.directions);
  std::optional<RatVec> c = solve(cols, rhs);
  if (!c) return std::nullopt;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < span.directions.size(); ++j) acc += span.directions[j][i] * (*c)[j];
    if (acc != rhs[i]) return std::nullopt;
  }
  return c;
}

namespace {

std::optional<RatVec> span_coords(const AffineSpan& s, const Point& p) { return coords_in_span(s, p); }

// Ambient functional w with <w, base + B c> = const + <v, c> on the span.
RatVec lift_functional(const AffineSpan& s, const RatVec& v) {
  std::size_t k = s.directions.size();
  std::size_t amb = s.base.size();
  Mat gram(k, RatVec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(s.directions[i], s.directions[j]);
  std::optional<RatVec> y = solve(gram, v);
  if (!y) throw DomainError("Internal", "gram system unsolvable");
  RatVec w(amb, Rat(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < amb; ++i) w[i] += (*y)[j] * s.directions[j][i];
  return w;
}

Rat cross2(const RatVec& o, const RatVec& a, const RatVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

RatVec cross3(const RatVec& a, const RatVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

struct SpanFace {
  std::vector<std::size_t> on;  // indices into the point list
  RatVec v;                     // functional in span coordinates
  Rat offset;
  int dim;
};

std::vector<std::size_t> equality_set(const std::vector<RatVec>& pts, const RatVec& v, const Rat& offset) {
  std::vector<std::size_t> on;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (dot(v, pts[i]) == offset) on.push_back(i);
  return on;
}

// Corner sequence of a 2-D hull, counterclockwise, distinct corners only.
std::vector<std::size_t> hull_corners_ccw(const std::vector<RatVec>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
    return pts[a][1] < pts[b][1];
  });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  auto build = [&](bool lower) {
    std::vector<std::size_t> chain;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      std::size_t i = lower ? idx[t] : idx[idx.size() - 1 - t];
      while (chain.size() >= 2 && cross2(pts[chain[chain.size() - 2]], pts[chain.back()], pts[i]).sign() <= 0)
        chain.pop_back();
      chain.push_back(i);
    }
    return chain;
  };
  std::vector<std::size_t> lo = build(true), hi = build(false);
  lo.pop_back();
  hi.pop_back();
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

// Face lattice of a polygon given in 2-D coordinates.
std::vector<SpanFace> polygon_faces(const std::vector<RatVec>& pts) {
  std::vector<SpanFace> faces;
  std::vector<std::size_t> corners = hull_corners_ccw(pts);
  std::size_t m = corners.size();
  std::vector<SpanFace> edges;
  for (std::size_t t = 0; t < m; ++t) {
    const RatVec& a = pts[corners[t]];
    const RatVec& b = pts[corners[(t + 1) % m]];
    RatVec e = sub(b, a);
    RatVec nv{e[1], -e[0]};  // outward for a ccw polygon
    Rat off = dot(nv, a);
    SpanFace f;
    f.v = nv;
    f.offset = off;
    f.on = equality_set(pts, nv, off);
    f.dim = 1;
    edges.push_back(std::move(f));
  }
  for (std::size_t t = 0; t < m; ++t) {
    const SpanFace& e_prev = edges[(t + m - 1) % m];
    const SpanFace& e_next = edges[t];
    SpanFace f;
    f.v = add(e_prev.v, e_next.v);
    f.offset = e_prev.offset + e_next.offset;
    f.on = equality_set(pts, f.v, f.offset);
    f.dim = 0;
    faces.push_back(std::move(f));
  }
  for (SpanFace& e : edges) faces.push_back(std::move(e));
  return faces;
}

std::vector<SpanFace> polytope3_faces(const std::vector<RatVec>& pts) {
  std::vector<SpanFace> facets;
  std::set<std::vector<std::size_t>> seen;
  std::size_t npts = pts.size();
  for (std::size_t i = 0; i < npts; ++i)
    for (std::size_t j = i + 1; j < npts; ++j)
      for (std::size_t l = j + 1; l < npts; ++l) {
        RatVec nv = cross3(sub(pts[j], pts[i]), sub(pts[l], pts[i]));
        bool zero = nv[0].is_zero() && nv[1].is_zero() && nv[2].is_zero();
        if (zero) continue;
        Rat off = dot(nv, pts[i]);
        bool above = false, below = false;
        for (const RatVec& p : pts) {
          int s = (dot(nv, p) - off).sign();
          if (s > 0) above = true;
          if (s < 0) below = true;
        }
        if (above && below) continue;
        RatVec v = nv;
        Rat o = off;
        if (above) {
          v = scale(nv, Rat(-1));
          o = -off;
        }
        SpanFace f;
        f.v = v;
        f.offset = o;
        f.on = equality_set(pts, v, o);
        f.dim = 2;
        if (seen.insert(f.on).second) facets.push_back(std::move(f));
      }

  std::vector<SpanFace> faces = facets;
  // Edges and vertices from in-plane polygon structure of each facet.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> edge_sets;  // on-set -> incident facets
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    std::vector<Point> sub_pts;
    for (std::size_t id : facets[fi].on) sub_pts.push_back(pts[id]);
    AffineSpan plane = affine_span_basis(sub_pts);
    std::vector<RatVec> plane_coords;
    for (const Point& p : sub_pts) plane_coords.push_back(*span_coords(plane, p));
    for (const SpanFace& pf : polygon_faces(plane_coords)) {
      if (pf.dim != 1) continue;
      std::vector<std::size_t> glob;
      for (std::size_t loc : pf.on) glob.push_back(facets[fi].on[loc]);
      std::sort(glob.begin(), glob.end());
      edge_sets[glob].push_back(fi);
    }
  }
  std::set<std::vector<std::size_t>> vertex_sets;
  for (const auto& [on, inc] : edge_sets) {
    SpanFace e;
    e.on = on;
    e.dim = 1;
    e.v = RatVec(3, Rat(0));
    e.offset = Rat(0);
    for (std::size_t fi : inc) {
      e.v = add(e.v, facets[fi].v);
      e.offset += facets[fi].offset;
    }
    faces.push_back(e);
    // Polytope edge endpoints double as vertex candidates.
    std::vector<Point> ep;
    for (std::size_t id : on) ep.push_back(pts[id]);
    AffineSpan line = affine_span_basis(ep);
    std::vector<Rat> ts;
    for (const Point& p : ep) ts.push_back((*span_coords(line, p))[0]);
    Rat lo = ts[0], hi = ts[0];
    for (const Rat& t : ts) {
      if (t < lo) lo = t;
      if (t > hi) hi = t;
    }
    for (const Rat& extreme : {lo, hi}) {
      std::vector<std::size_t> vs;
      for (std::size_t k = 0; k < on.size(); ++k)
        if (ts[k] == extreme) vs.push_back(on[k]);
      std::sort(vs.begin(), vs.end());
      vertex_sets.insert(vs);
    }
  }
  for (const auto& vs : vertex_sets) {
    SpanFace v;
    v.on = vs;
    v.dim = 0;
    v.v = RatVec(3, Rat(0));
    v.offset = Rat(0);
    for (const SpanFace& fc : facets) {
      bool contains = std::includes(fc.on.begin(), fc.on.end(), vs.begin(), vs.end());
      if (contains) {
        v.v = add(v.v, fc.v);
        v.offset += fc.offset;
      }
    }
    faces.push_back(v);
  }
  return faces;
}

}  // namespace

std::vector<Face> hull_face_lattice(const std::vector<Point>& pts) {
  if (pts.empty()) return {};
  int amb = static_cast<int>(pts[0].size());
  if (amb > 3) throw DomainError("AmbientDimTooLarge", "hull lattice limited to ambient dimension 3");
  AffineSpan span = affine_span_basis(pts);
  int k = static_cast<int>(span.directions.size());

  std::vector<RatVec> coords;
  for (const Point& p : pts) coords.push_back(*span_coords(span, p));

  std::vector<SpanFace> span_faces;
  if (k == 1) {
    Rat lo = coords[0][0], hi = coords[0][0];
    for (const RatVec& c : coords) {
      if (c[0] < lo) lo = c[0];
      if (c[0] > hi) hi = c[0];
    }
    SpanFace fmin{equality_set(coords, {Rat(-1)}, -lo), {Rat(-1)}, -lo, 0};
    span_faces.push_back(fmin);
    if (hi != lo) {
      SpanFace fmax{equality_set(coords, {Rat(1)}, hi), {Rat(1)}, hi, 0};
      span_faces.push_back(fmax);
    }
  } else if (k == 2) {
    span_faces = polygon_faces(coords);
  } else if (k == 3) {
    span_faces = polytope3_faces(coords);
  }

  // The polytope itself.
  {
    SpanFace top;
    for (std::size_t i = 0; i < pts.size(); ++i) top.on.push_back(i);
    top.v = RatVec(k, Rat(0));
    top.offset = Rat(0);
    top.dim = k;
    span_faces.push_back(top);
  }

  std::vector<Face> out;
  std::set<std::vector<std::size_t>> seen;
  for (const SpanFace& sf : span_faces) {
    std::vector<std::size_t> on = sf.on;
    std::sort(on.begin(), on.end());
    if (!seen.insert(on).second) continue;
    Face f;
    f.vertex_indices = on;
    f.normal = k == 0 ? RatVec(amb, Rat(0)) : lift_functional(span, sf.v);
    Rat off(0);
    if (!f.normal.empty()) off = dot(f.normal, pts[on[0]]);
    f.offset = off;
    std::vector<Point> face_pts;
    for (std::size_t id : on) face_pts.push_back(pts[id]);
    f.dim = affine_dim(face_pts);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return out;
}

std::vector<Face> newton_faces(const SupportSet& A) {
  if (A.n > 3) throw DomainError("AmbientDimTooLarge", "newton_faces supports n <= 3");
  return hull_face_lattice(A.points);
}

std::vector<std::size_t> relint_members(const SupportSet& A, const Face& F) {
  std::vector<Point> face_pts;
  for (std::size_t id : F.vertex_indices) face_pts.push_back(A.points[id]);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.points.size(); ++i)
    if (in_relative_interior(face_pts, A.points[i])) out.push_back(i);
  return out;
}

bool in_convex_hull(const std::vector<Point>& hull_pts, const Point& p) {
  if (hull_pts.empty()) return false;
  AffineSpan span = affine_span_basis(hull_pts);
  if (!span_coords(span, p)) return false;
  if (span.directions.empty()) return p == hull_pts[0];
  std::vector<Face> faces = hull_face_lattice(hull_pts);
  int k = static_cast<int>(span.directions.size());
  for (const Face& f : faces) {
    if (f.dim != k - 1) continue;
    if (dot(f.normal, p) > f.offset) return false;
  }
  return true;
}

bool in_relative_interior(const std::vector<Point>& hull_pts, const Point& p) {
  if (hull_pts.empty()) return false;
  AffineSpan span = affine_span_basis(hull_pts);
  if (!span_coords(span, p)) return false;
  if (span.directions.empty()) return p == hull_pts[0];
  std::vector<Face> faces = hull_face_lattice(hull_pts);
  int k = static_cast<int>(span.directions.size());
  for (const Face& f : faces) {
    if (f.dim != k - 1) continue;
    if (dot(f.normal, p) >= f.offset) return false;
  }
  return true;
}

}  // namespace sonc
