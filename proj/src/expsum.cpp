#include "sonc/expsum.hpp"

#include <cmath>

namespace sonc {

ToricPoint::ToricPoint(RatVec coords) : z(std::move(coords)) {
  for (const Rat& x : z)
    if (x.sign() <= 0) throw DomainError("NotPositive", "toric points have strictly positive coordinates");
}

Rat toric_pow(const ToricPoint& z, const Point& alpha) {
  if (z.z.size() != alpha.size()) throw DomainError("BadPoint", "dimension mismatch in toric power");
  Rat acc(1);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const Rat& e = alpha[i];
    if (e.is_zero()) continue;
    if (e.is_integer()) {
      acc *= z.z[i].pow(e.num().get_si());
      continue;
    }
    // z_i^(p/q): exact only when z_i is a perfect q-th power.
    unsigned long q = e.den().get_ui();
    Rat root;
    if (!z.z[i].nth_root(q, root))
      throw DomainError("NonIntegralSupport",
                        "exact evaluation with fractional exponents needs perfect-power coordinates");
    acc *= root.pow(e.num().get_si());
  }
  return acc;
}

ExponentialSum::ExponentialSum(SupportSet A, RatVec exact_coeffs)
    : support(std::move(A)), coeffs(std::move(exact_coeffs)), exact(true) {
  if (coeffs.size() != support.count())
    throw DomainError("BadCoeffs", "coefficient vector length must be d+1");
}

ExponentialSum::ExponentialSum(SupportSet A, std::vector<double> float_coeffs)
    : support(std::move(A)), fcoeffs(std::move(float_coeffs)), exact(false) {
  if (fcoeffs.size() != support.count())
    throw DomainError("BadCoeffs", "coefficient vector length must be d+1");
}

Agiform::Agiform(SupportSet A, Circuit c, Rat scale, ToricPoint locus)
    : support(std::move(A)), circuit(std::move(c)), t(std::move(scale)), toric(true), z(std::move(locus)) {
  if (!circuit.simplicial) throw DomainError("NotSimplicial", "agiforms live on simplicial circuits");
  if (t.sign() < 0) throw DomainError("NegativeScale", "agiform scale must be nonnegative");
  if (static_cast<int>(z.z.size()) != support.n) throw DomainError("BadPoint", "locus dimension mismatch");
}

Agiform Agiform::log_mode(SupportSet A, Circuit c, Rat scale, RatVec w) {
  if (!c.simplicial) throw DomainError("NotSimplicial", "agiforms live on simplicial circuits");
  if (scale.sign() < 0) throw DomainError("NegativeScale", "agiform scale must be nonnegative");
  if (static_cast<int>(w.size()) != A.n) throw DomainError("BadPoint", "locus dimension mismatch");
  Agiform g(std::move(A), std::move(c), std::move(scale), ToricPoint(RatVec(w.size(), Rat(1))));
  g.toric = false;
  g.w = std::move(w);
  return g;
}

ExponentialSum agiform_coeffs(const Agiform& g) {
  if (!g.toric) throw DomainError("NotExactMode", "agiform_coeffs needs a toric (exact) locus");
  RatVec a(g.support.count(), Rat(0));
  for (std::size_t k = 0; k < g.circuit.support.size(); ++k) {
    std::size_t idx = g.circuit.support[k];
    Point neg_alpha = scale(g.support.points[idx], Rat(-1));
    a[idx] = g.t * g.circuit.kernel_vec[k] * toric_pow(g.z, neg_alpha);
  }
  return ExponentialSum(g.support, std::move(a));
}

Rat eval(const ExponentialSum& f, const ToricPoint& z) {
  if (!f.exact) throw DomainError("NotExactMode", "exact eval needs exact coefficients");
  Rat s(0);
  for (std::size_t i = 0; i < f.support.count(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    s += f.coeffs[i] * toric_pow(z, f.support.points[i]);
  }
  return s;
}

Rat directional_derivative(const ExponentialSum& f, const ToricPoint& z, const RatVec& v) {
  if (!f.exact) throw DomainError("NotExactMode", "exact derivative needs exact coefficients");
  Rat s(0);
  for (std::size_t i = 0; i < f.support.count(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    s += f.coeffs[i] * dot(f.support.points[i], v) * toric_pow(z, f.support.points[i]);
  }
  return s;
}

SingularLocus singular_locus(const Agiform& g) {
  if (g.t.sign() == 0) throw DomainError("ZeroScale", "the zero agiform has no singular locus");
  SingularLocus s;
  if (g.toric) {
    for (const Rat& zi : g.z.z) s.point.push_back(std::log(zi.to_double()));
  } else {
    for (const Rat& wi : g.w) s.point.push_back(wi.to_double());
  }
  std::vector<Point> pts;
  for (std::size_t id : g.circuit.support) pts.push_back(g.support.points[id]);
  s.directions = orthogonal_complement_of_span(pts, g.support.n);
  return s;
}

ExponentialSum assemble(const SupportSet& A, const SoncDecomposition& dec) {
  RatVec a(A.count(), Rat(0));
  for (const Agiform& g : dec.terms) {
    if (!g.toric) throw DomainError("NotExactMode", "assemble needs toric (exact) loci");
    ExponentialSum part = agiform_coeffs(g);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += part.coeffs[i];
  }
  for (const auto& [idx, t] : dec.monomials) {
    if (t.sign() < 0) throw DomainError("NegativeScale", "monomial coefficients must be nonnegative");
    a[idx] += t;
  }
  return ExponentialSum(A, std::move(a));
}

double eval_double(const ExponentialSum& f, const std::vector<double>& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.support.count(); ++i) {
    double e = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) e += w[j] * f.support.points[i][j].to_double();
    s += f.coeff_as_double(i) * std::exp(e);
  }
  return s;
}

namespace {

std::vector<double> gradient(const ExponentialSum& f, const std::vector<double>& w) {
  std::vector<double> g(w.size(), 0.0);
  for (std::size_t i = 0; i < f.support.count(); ++i) {
    double e = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) e += w[j] * f.support.points[i][j].to_double();
    double term = f.coeff_as_double(i) * std::exp(e);
    for (std::size_t j = 0; j < w.size(); ++j) g[j] += term * f.support.points[i][j].to_double();
  }
  return g;
}

}  // namespace

MinReport check_nonneg_numeric(const ExponentialSum& f, const MinSearchConfig& cfg) {
  int n = f.support.n;
  if (n > 3) throw DomainError("AmbientDimTooLarge", "numeric search supports n <= 3");
  std::vector<double> w(n, 0.0), best_w(n, 0.0);
  double best = eval_double(f, best_w);

  // Grid pass.
  long total = 1;
  for (int i = 0; i < n; ++i) total *= cfg.grid_per_axis;
  for (long cell = 0; cell < total; ++cell) {
    long rem = cell;
    for (int i = 0; i < n; ++i) {
      int k = static_cast<int>(rem % cfg.grid_per_axis);
      rem /= cfg.grid_per_axis;
      w[i] = cfg.grid_per_axis == 1
                 ? 0.0
                 : -cfg.log_range + 2.0 * cfg.log_range * k / (cfg.grid_per_axis - 1);
    }
    double v = eval_double(f, w);
    if (v < best || (v == best && w < best_w)) {
      best = v;
      best_w = w;
    }
  }

  // Backtracking descent from the best grid point.
  std::vector<double> cur = best_w;
  double cur_v = best;
  for (int it = 0; it < cfg.descent_steps; ++it) {
    std::vector<double> g = gradient(f, cur);
    double gn2 = 0.0;
    for (double x : g) gn2 += x * x;
    if (gn2 == 0.0) break;
    double eta = 1.0;
    bool moved = false;
    while (eta >= cfg.step_tol) {
      std::vector<double> nxt(cur.size());
      for (std::size_t j = 0; j < cur.size(); ++j) nxt[j] = cur[j] - eta * g[j];
      double nv = eval_double(f, nxt);
      if (nv < cur_v - 1e-4 * eta * gn2) {
        cur = nxt;
        cur_v = nv;
        moved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!moved) break;
  }
  if (cur_v < best) {
    best = cur_v;
    best_w = cur;
  }
  return MinReport{best, best_w};
}

}  // namespace sonc
