#pragma once

#include <optional>
#include <vector>

#include "sonc/geometry.hpp"

namespace sonc {

struct WeightVector {
  RatVec w;  // length d+1
};

// Top-dimensional cell of a regular subdivision. `points` is geometric
// (every point of A inside the cell); `on` is the subset actually lifted
// onto the corresponding upper-hull facet.
struct SubCell {
  std::vector<std::size_t> points;
  std::vector<std::size_t> on;
};

struct RegularSubdivision {
  std::vector<SubCell> cells;  // canonical order (sorted by point set)
  std::optional<WeightVector> witness;
  int dim = 0;  // dimension of the cells = dim(A)
};

// Any face of the subdivision's cell complex, as its geometric point set.
struct ComplexFace {
  std::vector<std::size_t> points;
  int dim = 0;

  friend bool operator==(const ComplexFace& a, const ComplexFace& b) { return a.points == b.points; }
  friend bool operator<(const ComplexFace& a, const ComplexFace& b) { return a.points < b.points; }
};

struct SubdivisionFaces {
  std::vector<ComplexFace> faces;                        // sorted by point set
  std::vector<std::vector<std::size_t>> in_cells;        // indices of top cells containing the face
  std::vector<std::vector<std::size_t>> on_sets;         // lifted on-set of the dual hull face
};

struct SoncComplex {
  std::vector<ComplexFace> cells;  // closed under faces, sorted

  bool empty() const { return cells.empty(); }
  std::vector<ComplexFace> maximal_cells() const;
};

// Cell of the dual tropical complex. V-representation: convex hull of
// `vertices` plus the cone over `rays` (plus the complex-wide lineality).
struct TropCell {
  std::vector<std::size_t> indicator;  // point indices attaining the max
  int dim = 0;
  std::vector<RatVec> vertices;
  std::vector<RatVec> rays;
};

struct TropicalComplex {
  std::vector<TropCell> cells;
  std::vector<RatVec> vertices;    // the duals of the top cells
  std::vector<RatVec> lineality;   // nonzero only for degenerate supports
};

// Linearity domains of the concave majorant induced by the weights.
RegularSubdivision subdivide(const SupportSet& A, const WeightVector& omega);

SubdivisionFaces subdivision_faces(const SupportSet& A, const RegularSubdivision& sub);

SoncComplex sonc_complex(const SupportSet& A, const RegularSubdivision& sub);

TropicalComplex tropical_complex(const SupportSet& A, const WeightVector& omega);

bool check_duality(const SupportSet& A, const RegularSubdivision& sub, const TropicalComplex& M);

// Exact witness weights for a candidate subdivision given by its top cells
// (point index sets), or nullopt when the subdivision is not regular.
// Throws InvalidSubdivision when the cells do not form a subdivision.
std::optional<WeightVector> is_regular(const SupportSet& A, const std::vector<std::vector<std::size_t>>& cells);

// Every regular subdivision of N(A), each with a stored witness.
// Requires n <= 2 and at most 10 points.
std::vector<RegularSubdivision> enumerate_regular_subdivisions(const SupportSet& A);

}  // namespace sonc
