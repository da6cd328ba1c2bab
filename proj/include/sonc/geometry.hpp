#pragma once

#include <cstddef>
#include <vector>

#include "sonc/errors.hpp"
#include "sonc/linalg.hpp"
#include "sonc/rational.hpp"

namespace sonc {

using Point = RatVec;

// Ordered exponent configuration together with its lifted matrix
// (top row all ones, then the coordinates column by column).
struct SupportSet {
  int n = 0;                  // ambient dimension
  std::vector<Point> points;  // d+1 pairwise distinct points
  Mat matrix;                 // (1+n) x (d+1)

  SupportSet() = default;
  SupportSet(int ambient_dim, std::vector<Point> pts);

  std::size_t count() const { return points.size(); }
  int d() const { return static_cast<int>(points.size()) - 1; }
};

SupportSet support_from_ints(int n, const std::vector<std::vector<long>>& pts);

struct Dims {
  int dim;
  int codim;
};

Dims dims(const SupportSet& A);

// A face of the Newton polytope. `vertex_indices` lists every point of A
// lying on the face (not only corners). The functional supports the face:
// <normal, p> <= offset for all points, equality exactly on the face.
struct Face {
  std::vector<std::size_t> vertex_indices;
  RatVec normal;
  Rat offset;
  int dim = 0;
};

// Complete face lattice of N(A), the polytope itself included, sorted by
// (dim, vertex_indices). Requires n <= 3.
std::vector<Face> newton_faces(const SupportSet& A);

// Indices of points of A in the relative interior of F.
std::vector<std::size_t> relint_members(const SupportSet& A, const Face& F);

struct AffineSpan {
  Point base;
  std::vector<RatVec> directions;  // exact basis of the direction space
};

AffineSpan affine_span_basis(const std::vector<Point>& pts);

// Coordinates of p relative to the span basis, or nullopt when p lies
// outside the affine span.
std::optional<RatVec> coords_in_span(const AffineSpan& span, const Point& p);

// Exact convex-position predicates used across the library.
bool in_convex_hull(const std::vector<Point>& hull_pts, const Point& p);
bool in_relative_interior(const std::vector<Point>& hull_pts, const Point& p);

int affine_dim(const std::vector<Point>& pts);

// Basis of the orthogonal complement of the direction space of Aff(pts)
// inside the ambient space.
std::vector<RatVec> orthogonal_complement_of_span(const std::vector<Point>& pts, int ambient_dim);

// Face lattice of conv(pts) for an arbitrary point list (ambient dim of the
// points <= 3). Indices refer to positions in `pts`.
std::vector<Face> hull_face_lattice(const std::vector<Point>& pts);

}  // namespace sonc
