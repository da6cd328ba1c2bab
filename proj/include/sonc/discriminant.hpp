#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sonc/expsum.hpp"
#include "sonc/rng.hpp"
#include "sonc/subdivision.hpp"

namespace sonc {

// Lattice directions shared by a pair of top cells; z_i^u = z_j^u must hold
// exactly for every u in the basis.
struct GluingRelation {
  std::size_t cell_i;
  std::size_t cell_j;
  std::vector<RatVec> lattice_basis;  // primitive integer direction vectors
};

struct LambdaChart {
  SupportSet A;
  RegularSubdivision sub;
  std::vector<Circuit> circuits;           // simplicial circuits inside some top cell
  std::vector<std::size_t> circuit_cell;   // assigned top cell per circuit (first containing)
  std::vector<ComplexFace> minimal_cells;  // minimal subdivision face containing each circuit
  std::vector<std::size_t> a_lambda;       // points covered by some chart circuit
  std::vector<std::size_t> monomials;      // complement of a_lambda
  std::vector<GluingRelation> relations;
};

LambdaChart build_chart(const SupportSet& A, const RegularSubdivision& sub);

// Integer basis of the solution space of the gluing relations, as exponent
// vectors of length (#cells * n): every choice of positive scalars rho_t
// gives exact toric cell points z_cell = prod_t rho_t^{B_t[cell block]}.
std::vector<RatVec> chart_param_basis(const LambdaChart& chart);

std::vector<ToricPoint> sample_chart_points(const LambdaChart& chart, Rng& rng);

struct HKSample {
  std::vector<Rat> t;
  std::vector<ToricPoint> z_cells;
  std::vector<std::pair<std::size_t, Rat>> monomials;
  RatVec a;
};

HKSample hk_sample(const LambdaChart& chart, const std::vector<Rat>& t,
                   const std::vector<ToricPoint>& z_cells,
                   const std::vector<std::pair<std::size_t, Rat>>& monomials);

struct ImplicitPolynomial {
  std::string name;
  std::size_t num_vars;
  std::vector<std::pair<long, std::vector<unsigned>>> terms;  // coefficient, exponents

  Rat eval(const RatVec& a) const;
};

Rat verify_vanishing(const ImplicitPolynomial& D, const HKSample& s);

// The worked 6-point planar example: support, chart weights and the explicit
// boundary polynomials D0..D5.
SupportSet example85_support();
SupportSet motzkin_support();
WeightVector example85_weights(int which);  // 0..5
std::vector<ImplicitPolynomial> example85_discriminants();

struct BoundarySample {
  SoncDecomposition dec;
  ExponentialSum assembled;                 // float coefficients in log mode, exact in toric mode
  TropicalComplex M;
  bool toric = false;
  std::vector<ToricPoint> cell_loci;        // toric mode: locus per top cell
  std::vector<std::size_t> used_circuits;   // indices into the chart circuit list
};

// Boundary point of the sonc cone along the tropical arrangement of
// subdivide(A, omega): agiform loci sit on the dual tropical vertices.
// `t` is indexed by the chart's circuit list; positive weight on a circuit
// outside every cell raises CircuitNotInCell.
BoundarySample boundary_sample(const SupportSet& A, const WeightVector& omega, const std::vector<Rat>& t);

// Exact variant: loci are rational toric points realizing the same dual
// arrangement combinatorics (z_cell = sigma * rho^(q x_cell)), so the
// assembled sum and its vanishing at the cell loci are exact.
BoundarySample boundary_sample_toric(const SupportSet& A, const WeightVector& omega, const std::vector<Rat>& t,
                                     const ToricPoint& sigma, const Rat& rho);

// Sum of the sample's terms supported inside the given top cell.
ExponentialSum cell_truncation(const LambdaChart& chart, const BoundarySample& s, std::size_t cell);

struct CodimReport {
  int expected;               // parameter count n + m (+ free monomials)
  std::vector<int> observed;  // numeric Jacobian rank per probe point
};

CodimReport codim_probe(const LambdaChart& chart, int num_points, std::uint64_t seed);

}  // namespace sonc
