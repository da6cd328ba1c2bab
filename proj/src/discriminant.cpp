#include "sonc/discriminant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace sonc {

namespace {

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

LambdaChart build_chart(const SupportSet& A, const RegularSubdivision& sub) {
  LambdaChart ch;
  ch.A = A;
  ch.sub = sub;

  SubdivisionFaces sf = subdivision_faces(A, sub);
  for (Circuit& c : enumerate_circuits(A)) {
    if (!c.simplicial) continue;
    std::size_t cell = sub.cells.size();
    for (std::size_t ci = 0; ci < sub.cells.size(); ++ci)
      if (subset_of(c.support, sub.cells[ci].points)) {
        cell = ci;
        break;
      }
    if (cell == sub.cells.size()) continue;
    // Minimal face containing the circuit (faces are sorted by point set,
    // so scan for the smallest by dimension).
    const ComplexFace* best = nullptr;
    for (const ComplexFace& f : sf.faces)
      if (subset_of(c.support, f.points) && (!best || f.dim < best->dim)) best = &f;
    ch.circuit_cell.push_back(cell);
    ch.minimal_cells.push_back(*best);
    ch.circuits.push_back(std::move(c));
  }

  std::set<std::size_t> covered;
  for (const Circuit& c : ch.circuits)
    for (std::size_t id : c.support) covered.insert(id);
  ch.a_lambda.assign(covered.begin(), covered.end());
  for (std::size_t i = 0; i < A.count(); ++i)
    if (!covered.count(i)) ch.monomials.push_back(i);

  for (std::size_t i = 0; i < sub.cells.size(); ++i)
    for (std::size_t j = i + 1; j < sub.cells.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(sub.cells[i].points.begin(), sub.cells[i].points.end(),
                            sub.cells[j].points.begin(), sub.cells[j].points.end(),
                            std::back_inserter(common));
      if (common.size() < 2) continue;
      std::vector<Point> pts;
      for (std::size_t id : common) pts.push_back(A.points[id]);
      GluingRelation rel;
      rel.cell_i = i;
      rel.cell_j = j;
      for (const RatVec& dir : affine_span_basis(pts).directions)
        rel.lattice_basis.push_back(primitive_integer_form(dir));
      ch.relations.push_back(std::move(rel));
    }
  return ch;
}

std::vector<RatVec> chart_param_basis(const LambdaChart& chart) {
  std::size_t k = chart.sub.cells.size();
  std::size_t n = static_cast<std::size_t>(chart.A.n);
  Mat rows;
  for (const GluingRelation& rel : chart.relations)
    for (const RatVec& u : rel.lattice_basis) {
      RatVec row(k * n, Rat(0));
      for (std::size_t j = 0; j < n; ++j) {
        row[rel.cell_i * n + j] = u[j];
        row[rel.cell_j * n + j] = -u[j];
      }
      rows.push_back(std::move(row));
    }
  std::vector<RatVec> basis;
  if (rows.empty()) {
    for (std::size_t i = 0; i < k * n; ++i) {
      RatVec e(k * n, Rat(0));
      e[i] = Rat(1);
      basis.push_back(std::move(e));
    }
  } else {
    basis = kernel_basis(rows);
  }
  for (RatVec& b : basis) b = primitive_integer_form(b);
  return basis;
}

std::vector<ToricPoint> sample_chart_points(const LambdaChart& chart, Rng& rng) {
  std::size_t k = chart.sub.cells.size();
  std::size_t n = static_cast<std::size_t>(chart.A.n);
  std::vector<RatVec> basis = chart_param_basis(chart);
  std::vector<RatVec> vals(k, RatVec(n, Rat(1)));
  for (const RatVec& b : basis) {
    Rat rho = rng.positive_rat(7);
    if (rho == Rat(1)) rho = Rat(2);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t j = 0; j < n; ++j) {
        long e = b[c * n + j].num().get_si();
        if (e != 0) vals[c][j] *= rho.pow(e);
      }
  }
  std::vector<ToricPoint> out;
  for (RatVec& v : vals) out.push_back(ToricPoint(std::move(v)));
  return out;
}

HKSample hk_sample(const LambdaChart& chart, const std::vector<Rat>& t,
                   const std::vector<ToricPoint>& z_cells,
                   const std::vector<std::pair<std::size_t, Rat>>& monomials) {
  if (t.size() != chart.circuits.size())
    throw DomainError("BadCoeffs", "one scale per chart circuit expected");
  for (const Rat& tc : t)
    if (tc.sign() < 0) throw DomainError("NegativeScale", "positive chart needs t >= 0");
  if (z_cells.size() != chart.sub.cells.size())
    throw DomainError("BadCoeffs", "one toric point per top cell expected");
  for (const GluingRelation& rel : chart.relations)
    for (const RatVec& u : rel.lattice_basis) {
      Rat lhs = toric_pow(z_cells[rel.cell_i], u);
      Rat rhs = toric_pow(z_cells[rel.cell_j], u);
      if (lhs != rhs) {
        std::string msg = "cells " + std::to_string(rel.cell_i) + "," + std::to_string(rel.cell_j) + " violate u=(";
        for (std::size_t j = 0; j < u.size(); ++j) msg += (j ? "," : "") + u[j].str();
        msg += ")";
        throw DomainError("RelationViolated", msg);
      }
    }
  std::set<std::size_t> allowed(chart.monomials.begin(), chart.monomials.end());
  for (const auto& [idx, val] : monomials) {
    if (!allowed.count(idx)) throw DomainError("BadIndex", "monomial index outside the chart complement");
    if (val.sign() < 0) throw DomainError("NegativeScale", "positive chart needs monomial coefficients >= 0");
  }

  HKSample s;
  s.t = t;
  s.z_cells = z_cells;
  s.monomials = monomials;
  s.a.assign(chart.A.count(), Rat(0));
  for (std::size_t q = 0; q < chart.circuits.size(); ++q) {
    const Circuit& c = chart.circuits[q];
    const ToricPoint& z = z_cells[chart.circuit_cell[q]];
    for (std::size_t pos = 0; pos < c.support.size(); ++pos) {
      std::size_t idx = c.support[pos];
      s.a[idx] += t[q] * c.kernel_vec[pos] * toric_pow(z, scale(chart.A.points[idx], Rat(-1)));
    }
  }
  for (const auto& [idx, val] : monomials) s.a[idx] += val;
  return s;
}

Rat ImplicitPolynomial::eval(const RatVec& a) const {
  if (a.size() != num_vars) throw DomainError("BadCoeffs", "wrong number of coordinates");
  Rat acc(0);
  for (const auto& [coef, exps] : terms) {
    Rat m(coef);
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i]) m *= a[i].pow(exps[i]);
    acc += m;
  }
  return acc;
}

Rat verify_vanishing(const ImplicitPolynomial& D, const HKSample& s) { return D.eval(s.a); }

SupportSet example85_support() {
  return support_from_ints(2, {{0, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}});
}

SupportSet motzkin_support() {
  return support_from_ints(2, {{0, 0}, {4, 2}, {2, 4}, {2, 2}});
}

WeightVector example85_weights(int which) {
  auto mk = [](std::initializer_list<Rat> xs) {
    WeightVector w;
    w.w.assign(xs);
    return w;
  };
  switch (which) {
    case 0: return mk({Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    case 1: return mk({Rat(0), Rat(0), Rat(-2), Rat(0), Rat(-1), Rat(0)});
    case 2: return mk({Rat(0), Rat(-2), Rat(-3), Rat(0), Rat(0), Rat(0)});
    case 3: return mk({Rat(0), Rat(0), Rat(0), Rat(0), Rat(-1), Rat(-2)});
    case 4: return mk({Rat(0), Rat(0), Rat(-2), Rat(1, 2), Rat(-1), Rat(0)});
    case 5: return mk({Rat(0), Rat(-2), Rat(-3), Rat(1, 2), Rat(0), Rat(0)});
    default: throw DomainError("BadIndex", "example chart index must be 0..5");
  }
}

std::vector<ImplicitPolynomial> example85_discriminants() {
  using T = std::pair<long, std::vector<unsigned>>;
  std::vector<ImplicitPolynomial> out;
  out.push_back(ImplicitPolynomial{
      "D0", 6,
      {T{-1, {0, 0, 1, 6, 0, 0}}, T{1, {0, 1, 0, 5, 1, 0}}, T{1, {1, 0, 0, 3, 3, 0}},
       T{-1, {0, 2, 0, 4, 0, 1}}, T{-36, {1, 0, 1, 3, 1, 1}}, T{30, {1, 1, 0, 2, 2, 1}},
       T{27, {2, 0, 0, 0, 4, 1}}, T{72, {1, 1, 1, 2, 0, 2}}, T{-96, {1, 2, 0, 1, 1, 2}},
       T{-216, {2, 0, 1, 0, 2, 2}}, T{64, {1, 3, 0, 0, 0, 3}}, T{432, {2, 0, 2, 0, 0, 3}}}});
  out.push_back(ImplicitPolynomial{"D1", 6,
                                   {T{-1, {0, 0, 2, 4, 0, 0}}, T{4, {1, 1, 0, 0, 4, 0}},
                                    T{-32, {1, 1, 1, 0, 2, 1}}, T{64, {1, 1, 2, 0, 0, 2}}}});
  out.push_back(ImplicitPolynomial{
      "D2", 6, {T{1, {0, 0, 2, 3, 0, 0}}, T{4, {0, 3, 0, 0, 1, 1}}, T{27, {1, 0, 2, 0, 1, 1}}}});
  out.push_back(ImplicitPolynomial{"D3", 6,
                                   {T{27, {1, 0, 0, 0, 4, 0}}, T{-216, {1, 0, 1, 0, 2, 1}},
                                    T{64, {0, 3, 0, 0, 0, 2}}, T{432, {1, 0, 2, 0, 0, 2}}}});
  out.push_back(ImplicitPolynomial{"D4", 6, {T{1, {0, 0, 0, 0, 2, 0}}, T{-4, {0, 0, 1, 0, 0, 1}}}});
  // The printed facet polynomial for the bottom edge does not vanish on its
  // chart; the cuspidal cubic relation below is the one the samples satisfy.
  out.push_back(ImplicitPolynomial{"D5", 6, {T{4, {0, 3, 0, 0, 0, 0}}, T{27, {1, 0, 2, 0, 0, 0}}}});
  return out;
}

namespace {

BoundarySample make_boundary_sample(const SupportSet& A, const WeightVector& omega, const std::vector<Rat>& t,
                                    const ToricPoint* sigma, const Rat* rho) {
  RegularSubdivision sub = subdivide(A, omega);
  LambdaChart chart = build_chart(A, sub);
  TropicalComplex M = tropical_complex(A, omega);

  // t is indexed by the full simplicial circuit list of A.
  std::vector<Circuit> all_simplicial;
  for (Circuit& c : enumerate_circuits(A))
    if (c.simplicial) all_simplicial.push_back(std::move(c));
  if (t.size() != all_simplicial.size())
    throw DomainError("BadCoeffs", "one scale per simplicial circuit expected");

  BoundarySample out;
  out.M = M;
  out.toric = sigma != nullptr;

  std::vector<ToricPoint> cell_loci;
  if (out.toric) {
    // z_cell = sigma * rho^(q * x_cell) with q clearing all denominators.
    RatVec flat;
    for (const RatVec& x : M.vertices)
      for (const Rat& xi : x) flat.push_back(xi);
    mpz_class q = common_denominator(flat);
    for (const RatVec& x : M.vertices) {
      RatVec z(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) {
        mpz_class e = x[j].num() * (q / x[j].den());
        z[j] = sigma->z[j] * rho->pow(e.get_si());
      }
      cell_loci.push_back(ToricPoint(std::move(z)));
    }
    out.cell_loci = cell_loci;
  }

  for (std::size_t i = 0; i < all_simplicial.size(); ++i) {
    if (t[i].sign() < 0) throw DomainError("NegativeScale", "boundary samples need t >= 0");
    if (t[i].sign() == 0) continue;
    const Circuit& c = all_simplicial[i];
    std::size_t q = chart.circuits.size();
    for (std::size_t j = 0; j < chart.circuits.size(); ++j)
      if (chart.circuits[j].support == c.support) {
        q = j;
        break;
      }
    if (q == chart.circuits.size())
      throw DomainError("CircuitNotInCell", "circuit with positive weight lies in no cell of the subdivision");
    std::size_t cell = chart.circuit_cell[q];
    if (out.toric) {
      out.dec.terms.push_back(Agiform(A, c, t[i], cell_loci[cell]));
    } else {
      out.dec.terms.push_back(Agiform::log_mode(A, c, t[i], M.vertices[cell]));
    }
    out.used_circuits.push_back(q);
  }

  if (out.toric) {
    out.assembled = assemble(A, out.dec);
  } else {
    std::vector<double> coeffs(A.count(), 0.0);
    for (const Agiform& g : out.dec.terms)
      for (std::size_t pos = 0; pos < g.circuit.support.size(); ++pos) {
        std::size_t idx = g.circuit.support[pos];
        double e = 0.0;
        for (int j = 0; j < A.n; ++j) e -= g.w[j].to_double() * A.points[idx][j].to_double();
        coeffs[idx] += g.t.to_double() * g.circuit.kernel_vec[pos].to_double() * std::exp(e);
      }
    out.assembled = ExponentialSum(A, std::move(coeffs));
  }
  return out;
}

}  // namespace

BoundarySample boundary_sample(const SupportSet& A, const WeightVector& omega, const std::vector<Rat>& t) {
  return make_boundary_sample(A, omega, t, nullptr, nullptr);
}

BoundarySample boundary_sample_toric(const SupportSet& A, const WeightVector& omega, const std::vector<Rat>& t,
                                     const ToricPoint& sigma, const Rat& rho) {
  if (rho <= Rat(1)) throw DomainError("BadCoeffs", "toric realization needs rho > 1");
  return make_boundary_sample(A, omega, t, &sigma, &rho);
}

ExponentialSum cell_truncation(const LambdaChart& chart, const BoundarySample& s, std::size_t cell) {
  if (!s.toric) throw DomainError("NotExactMode", "cell truncation is an exact-mode operation");
  SoncDecomposition part;
  for (const Agiform& g : s.dec.terms)
    if (subset_of(g.circuit.support, chart.sub.cells[cell].points)) part.terms.push_back(g);
  return assemble(chart.A, part);
}

// ---------------------------------------------------------------------------
// Numeric codimension probe
// ---------------------------------------------------------------------------

namespace {

// Singular values of a small dense matrix: Jacobi eigensolver on J^T J.
std::vector<double> singular_values(const std::vector<std::vector<double>>& J) {
  std::size_t m = J.size(), p = m ? J[0].size() : 0;
  std::vector<std::vector<double>> S(p, std::vector<double>(p, 0.0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < m; ++r) acc += J[r][i] * J[r][j];
      S[i][j] = acc;
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) off += S[i][j] * S[i][j];
    if (off < 1e-30) break;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        if (std::abs(S[i][j]) < 1e-300) continue;
        double theta = (S[j][j] - S[i][i]) / (2.0 * S[i][j]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (std::size_t k = 0; k < p; ++k) {
          double a = S[i][k], b = S[j][k];
          S[i][k] = c * a - s * b;
          S[j][k] = s * a + c * b;
        }
        for (std::size_t k = 0; k < p; ++k) {
          double a = S[k][i], b = S[k][j];
          S[k][i] = c * a - s * b;
          S[k][j] = s * a + c * b;
        }
      }
  }
  std::vector<double> sv;
  for (std::size_t i = 0; i < p; ++i) sv.push_back(std::sqrt(std::max(0.0, S[i][i])));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

}  // namespace

CodimReport codim_probe(const LambdaChart& chart, int num_points, std::uint64_t seed) {
  std::size_t n = static_cast<std::size_t>(chart.A.n);
  std::size_t nc = chart.sub.cells.size();
  std::size_t nt = chart.circuits.size();
  std::size_t nm = chart.monomials.size();

  std::vector<RatVec> basis = chart_param_basis(chart);
  std::vector<std::vector<double>> B;
  for (const RatVec& b : basis) {
    std::vector<double> row;
    for (const Rat& x : b) row.push_back(x.to_double());
    B.push_back(std::move(row));
  }
  std::size_t nb = B.size();
  std::size_t np = nt + nb + nm;

  CodimReport rep;
  // Expected independent parameters: inclusion-exclusion of (n_I + m_I)
  // over the circuit-carrying top cells, plus the free monomials.
  {
    std::vector<std::size_t> carriers;
    for (std::size_t q = 0; q < nt; ++q) carriers.push_back(chart.circuit_cell[q]);
    std::sort(carriers.begin(), carriers.end());
    carriers.erase(std::unique(carriers.begin(), carriers.end()), carriers.end());
    long n_ie = 0, m_ie = 0;
    std::size_t kk = carriers.size();
    for (std::size_t mask = 1; mask < (1u << kk); ++mask) {
      std::vector<std::size_t> common;
      bool first = true;
      int bits = 0;
      for (std::size_t b = 0; b < kk; ++b) {
        if (!(mask & (1u << b))) continue;
        ++bits;
        const auto& pts = chart.sub.cells[carriers[b]].points;
        if (first) {
          common = pts;
          first = false;
        } else {
          std::vector<std::size_t> tmp;
          std::set_intersection(common.begin(), common.end(), pts.begin(), pts.end(), std::back_inserter(tmp));
          common = std::move(tmp);
        }
      }
      if (common.empty()) continue;
      std::vector<Point> pts;
      for (std::size_t id : common) pts.push_back(chart.A.points[id]);
      long nI = affine_dim(pts);
      long mI = static_cast<long>(common.size()) - 1 - nI;
      int sign = (bits % 2 == 1) ? 1 : -1;
      n_ie += sign * nI;
      m_ie += sign * mI;
    }
    rep.expected = static_cast<int>(n_ie + m_ie + static_cast<long>(nm));
  }

  auto phi = [&](const std::vector<double>& par) {
    std::vector<std::vector<double>> w(nc, std::vector<double>(n, 0.0));
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t j = 0; j < n; ++j) w[c][j] += par[nt + b] * B[b][c * n + j];
    std::vector<double> a(chart.A.count(), 0.0);
    for (std::size_t q = 0; q < nt; ++q) {
      const Circuit& c = chart.circuits[q];
      const std::vector<double>& wq = w[chart.circuit_cell[q]];
      for (std::size_t pos = 0; pos < c.support.size(); ++pos) {
        std::size_t idx = c.support[pos];
        double e = 0.0;
        for (std::size_t j = 0; j < n; ++j) e -= wq[j] * chart.A.points[idx][j].to_double();
        a[idx] += par[q] * c.kernel_vec[pos].to_double() * std::exp(e);
      }
    }
    for (std::size_t u = 0; u < nm; ++u) a[chart.monomials[u]] += par[nt + nb + u];
    return a;
  };

  Rng rng(seed);
  for (int pt = 0; pt < num_points; ++pt) {
    std::vector<double> par(np);
    for (std::size_t q = 0; q < nt; ++q) par[q] = 0.5 + 1.5 * rng.uniform();
    for (std::size_t b = 0; b < nb; ++b) par[nt + b] = -0.5 + rng.uniform();
    for (std::size_t u = 0; u < nm; ++u) par[nt + nb + u] = 0.5 + 1.5 * rng.uniform();

    const double h = 1e-5;
    std::vector<std::vector<double>> Jt;  // one row per parameter (transposed J)
    for (std::size_t col = 0; col < np; ++col) {
      std::vector<double> lo = par, hi = par;
      lo[col] -= h;
      hi[col] += h;
      std::vector<double> flo = phi(lo), fhi = phi(hi);
      std::vector<double> row(flo.size());
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = (fhi[i] - flo[i]) / (2.0 * h);
      Jt.push_back(std::move(row));
    }
    // singular_values expects rows x cols; ranks of J and J^T agree.
    std::vector<double> sv = singular_values(Jt);
    int rank_j = 0;
    for (double s : sv)
      if (s > 1e-6) ++rank_j;
    rep.observed.push_back(rank_j);
  }
  return rep;
}

}  // namespace sonc
