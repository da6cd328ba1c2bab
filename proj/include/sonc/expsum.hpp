#pragma once

#include <optional>
#include <vector>

#include "sonc/circuits.hpp"
#include "sonc/geometry.hpp"

namespace sonc {

// Point on the positive orthant, exact coordinates.
struct ToricPoint {
  RatVec z;

  ToricPoint() = default;
  explicit ToricPoint(RatVec coords);
};

// z^alpha for a rational exponent vector. Exact when every coordinate power
// has an exact rational value; otherwise NonIntegralSupport.
Rat toric_pow(const ToricPoint& z, const Point& alpha);

// f = sum a_alpha e^<x,alpha>, identified with its coefficient vector.
// Exact mode carries rationals, float mode doubles.
struct ExponentialSum {
  SupportSet support;
  RatVec coeffs;                 // exact mode
  std::vector<double> fcoeffs;   // float mode
  bool exact = true;

  ExponentialSum() = default;
  ExponentialSum(SupportSet A, RatVec exact_coeffs);
  ExponentialSum(SupportSet A, std::vector<double> float_coeffs);

  double coeff_as_double(std::size_t i) const { return exact ? coeffs[i].to_double() : fcoeffs[i]; }
};

// Scaled agiform t * <phi_A(x - w), c> on a simplicial circuit. The locus is
// stored either as an exact toric point z = e^w or as an exact log vector w.
struct Agiform {
  SupportSet support;
  Circuit circuit;
  Rat t;
  bool toric = true;
  ToricPoint z;  // toric mode
  RatVec w;      // log mode

  Agiform(SupportSet A, Circuit c, Rat scale, ToricPoint locus);
  static Agiform log_mode(SupportSet A, Circuit c, Rat scale, RatVec w);
};

struct SoncDecomposition {
  std::vector<Agiform> terms;
  std::vector<std::pair<std::size_t, Rat>> monomials;  // (point index, coefficient >= 0)
};

// Coefficient vector of an agiform in toric mode: t * c_alpha * z^-alpha on
// the circuit support, zero elsewhere.
ExponentialSum agiform_coeffs(const Agiform& g);

// Exact evaluation at a positive point.
Rat eval(const ExponentialSum& f, const ToricPoint& z);

// Exact directional derivative d/ds f(z * e^{s v}) at s = 0.
Rat directional_derivative(const ExponentialSum& f, const ToricPoint& z, const RatVec& v);

struct SingularLocus {
  std::vector<double> point;       // log coordinates of the locus
  std::vector<RatVec> directions;  // exact basis of Aff(c)^perp
};

SingularLocus singular_locus(const Agiform& g);

ExponentialSum assemble(const SupportSet& A, const SoncDecomposition& dec);

struct MinSearchConfig {
  int grid_per_axis = 41;
  double log_range = 4.0;
  int descent_steps = 200;
  double step_tol = 1e-12;
};

struct MinReport {
  double min_found;
  std::vector<double> argmin;  // log coordinates
};

// Grid search over log space refined by backtracking gradient descent.
// A report, not a certificate.
MinReport check_nonneg_numeric(const ExponentialSum& f, const MinSearchConfig& cfg = {});

double eval_double(const ExponentialSum& f, const std::vector<double>& w);

}  // namespace sonc
