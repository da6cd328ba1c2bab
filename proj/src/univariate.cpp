#include "sonc/univariate.hpp"

#include <algorithm>
#include <map>

#include "sonc/errors.hpp"

namespace sonc {

std::vector<int> StratumLabel::indices() const {
  std::vector<int> idx;
  for (const auto& g : groups) idx.insert(idx.end(), g.begin(), g.end());
  return idx;
}

int StratumLabel::ambient_dim() const { return static_cast<int>(indices().size() + groups.size()); }

bool StratumLabel::valid(int m) const {
  std::vector<int> idx = indices();
  if (!std::is_sorted(idx.begin(), idx.end())) return false;
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
  for (int i : idx)
    if (i < 1 || i > m) return false;
  for (const auto& g : groups)
    if (g.empty()) return false;
  // Adjacent integers must not straddle a bar.
  std::size_t pos = 0;
  for (std::size_t t = 0; t + 1 < groups.size(); ++t) {
    pos += groups[t].size();
    if (idx[pos] == idx[pos - 1] + 1) return false;
  }
  return true;
}

std::string StratumLabel::str() const {
  std::string s = "{";
  for (std::size_t t = 0; t < groups.size(); ++t) {
    if (t) s += "|";
    for (std::size_t j = 0; j < groups[t].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(groups[t][j]);
    }
  }
  s += "}";
  return s;
}

std::vector<StratumLabel> enumerate_labels(int d, bool slice) {
  if (d < 2) throw DomainError("BadIndex", "enumerate_labels needs d >= 2");
  int m = d - 1;
  std::vector<StratumLabel> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 1; i <= m; ++i)
      if (mask & (1u << (i - 1))) idx.push_back(i);
    if (slice) {
      if (idx.empty() || idx.front() != 1 || idx.back() != m) continue;
    }
    if (idx.empty()) {
      out.push_back(StratumLabel{});
      continue;
    }
    // Split points between non-adjacent consecutive entries.
    std::vector<std::size_t> splittable;
    for (std::size_t t = 0; t + 1 < idx.size(); ++t)
      if (idx[t + 1] > idx[t] + 1) splittable.push_back(t);
    for (unsigned smask = 0; smask < (1u << splittable.size()); ++smask) {
      StratumLabel l;
      std::vector<int> cur;
      for (std::size_t t = 0; t < idx.size(); ++t) {
        cur.push_back(idx[t]);
        bool cut = false;
        for (std::size_t u = 0; u < splittable.size(); ++u)
          if (splittable[u] == t && (smask & (1u << u))) cut = true;
        if (cut) {
          l.groups.push_back(cur);
          cur.clear();
        }
      }
      l.groups.push_back(cur);
      out.push_back(std::move(l));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int label_dimension(const StratumLabel& label, bool slice) {
  return label.ambient_dim() - (slice ? 2 : 0);
}

namespace {

std::vector<StratumLabel> deletion_moves(const StratumLabel& l) {
  std::vector<StratumLabel> out;
  // Bar deletions: merge two neighbouring groups.
  for (std::size_t t = 0; t + 1 < l.groups.size(); ++t) {
    StratumLabel nl;
    for (std::size_t u = 0; u < l.groups.size(); ++u) {
      if (u == t) {
        std::vector<int> merged = l.groups[t];
        merged.insert(merged.end(), l.groups[t + 1].begin(), l.groups[t + 1].end());
        nl.groups.push_back(std::move(merged));
      } else if (u != t + 1) {
        nl.groups.push_back(l.groups[u]);
      }
    }
    out.push_back(std::move(nl));
  }
  // Index deletions.
  for (std::size_t t = 0; t < l.groups.size(); ++t)
    for (std::size_t j = 0; j < l.groups[t].size(); ++j) {
      StratumLabel nl = l;
      nl.groups[t].erase(nl.groups[t].begin() + j);
      if (nl.groups[t].empty()) nl.groups.erase(nl.groups.begin() + t);
      out.push_back(std::move(nl));
    }
  return out;
}

}  // namespace

std::optional<std::size_t> StrataPoset::find(const StratumLabel& l) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  return std::nullopt;
}

bool StrataPoset::below(const StratumLabel& a, const StratumLabel& b) const {
  auto ia = find(a), ib = find(b);
  if (!ia || !ib) return false;
  return leq[*ia][*ib];
}

StrataPoset build_poset(const std::vector<StratumLabel>& labels) {
  StrataPoset p;
  p.labels = labels;
  std::sort(p.labels.begin(), p.labels.end());
  p.labels.erase(std::unique(p.labels.begin(), p.labels.end()), p.labels.end());
  std::map<StratumLabel, std::size_t> id;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    id[p.labels[i]] = i;
    p.dims.push_back(p.labels[i].ambient_dim());
  }
  std::size_t nn = p.labels.size();
  std::vector<std::vector<bool>> step(nn, std::vector<bool>(nn, false));
  for (std::size_t i = 0; i < nn; ++i)
    for (const StratumLabel& mv : deletion_moves(p.labels[i])) {
      auto it = id.find(mv);
      if (it != id.end()) step[it->second][i] = true;  // mv lies in the closure of labels[i]
    }
  // Reflexive-transitive closure.
  p.leq.assign(nn, std::vector<bool>(nn, false));
  for (std::size_t i = 0; i < nn; ++i) p.leq[i][i] = true;
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      if (step[i][j]) p.leq[i][j] = true;
  for (std::size_t k = 0; k < nn; ++k)
    for (std::size_t i = 0; i < nn; ++i)
      for (std::size_t j = 0; j < nn; ++j)
        if (p.leq[i][k] && p.leq[k][j]) p.leq[i][j] = true;
  // Covers: transitive reduction of the strict order.
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) {
      if (i == j || !p.leq[i][j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < nn; ++k) {
        if (k == i || k == j) continue;
        if (p.leq[i][k] && p.leq[k][j]) {
          direct = false;
          break;
        }
      }
      if (direct) p.covers.emplace_back(i, j);
    }
  return p;
}

Codim1Count codim1_count(int d) {
  if (d < 3) throw DomainError("BadIndex", "codim1_count needs d >= 3");
  long cnt = 0;
  for (const StratumLabel& l : enumerate_labels(d, false))
    if (l.ambient_dim() == d) ++cnt;
  return Codim1Count{cnt, cnt + 2};
}

QuarticRegion quartic_boundary_test(const Rat& w1, const Rat& w3) {
  if (w1.sign() <= 0 || w3.sign() <= 0) throw DomainError("NotPositive", "quartic test needs positive w1, w3");
  return w1 * w3 >= Rat(1) ? QuarticRegion::Boundary : QuarticRegion::Interior;
}

std::optional<StratumLabel> classify_decomposition(std::vector<UnivariateTerm> terms) {
  for (const UnivariateTerm& t : terms)
    if (t.scale.sign() <= 0) throw DomainError("NegativeScale", "classification expects positive scales");
  std::sort(terms.begin(), terms.end(),
            [](const UnivariateTerm& a, const UnivariateTerm& b) { return a.circuit_index < b.circuit_index; });
  for (std::size_t i = 0; i + 1 < terms.size(); ++i)
    if (terms[i].circuit_index == terms[i + 1].circuit_index)
      throw DomainError("BadIndex", "duplicate circuit index");

  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (terms[i + 1].locus < terms[i].locus) return std::nullopt;  // ordering violated
    if (terms[i + 1].circuit_index == terms[i].circuit_index + 1 && terms[i].locus != terms[i + 1].locus)
      return std::nullopt;  // overlapping circuits force equal loci
  }
  StratumLabel l;
  std::vector<int> cur;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && terms[i].locus != terms[i - 1].locus) {
      l.groups.push_back(cur);
      cur.clear();
    }
    cur.push_back(terms[i].circuit_index);
  }
  if (!cur.empty()) l.groups.push_back(cur);
  return l;
}

// ---------------------------------------------------------------------------
// Exact univariate polynomials and the Sturm oracle
// ---------------------------------------------------------------------------

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
  return poly_trim(d);
}

Rat poly_eval(const Poly& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

namespace {

Poly poly_rem(Poly a, const Poly& b) {
  a = poly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = poly_trim(a);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  a = poly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a = poly_trim(a);
  }
  if (!a.empty()) throw DomainError("Internal", "inexact polynomial division");
  return poly_trim(q);
}

Poly poly_monic(Poly p) {
  p = poly_trim(p);
  if (p.empty()) return p;
  Rat inv = Rat(1) / p.back();
  for (Rat& c : p) c *= inv;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  a = poly_trim(a);
  b = poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

// Yun's square-free decomposition: p = prod f_k^k (up to a constant).
std::vector<Poly> squarefree_factors(const Poly& p) {
  std::vector<Poly> factors;
  Poly a = poly_trim(p);
  if (a.size() <= 1) return factors;
  Poly d = poly_derivative(a);
  Poly g = poly_gcd(a, d);
  Poly w = poly_div_exact(a, g);
  Poly y = poly_div_exact(d, g);
  for (;;) {
    Poly wd = poly_derivative(w);
    Poly z(std::max(y.size(), wd.size()), Rat(0));
    for (std::size_t i = 0; i < y.size(); ++i) z[i] += y[i];
    for (std::size_t i = 0; i < wd.size(); ++i) z[i] -= wd[i];
    z = poly_trim(z);
    if (z.empty()) {
      factors.push_back(poly_monic(w));
      break;
    }
    Poly f = poly_gcd(w, z);
    factors.push_back(f);
    w = poly_div_exact(w, f);
    y = poly_div_exact(z, f);
  }
  return factors;  // factors[k-1] collects the multiplicity-k part
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
  int last = 0, var = 0;
  for (const Poly& p : chain) {
    int s = poly_eval(p, x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

long count_roots_positive(const Poly& o) {
  // o squarefree with o(0) != 0; counts distinct roots in (0, inf).
  if (o.size() <= 1) return 0;
  std::vector<Poly> chain{poly_trim(o), poly_derivative(o)};
  while (!chain.back().empty()) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (Rat& c : r) c = -c;
    chain.push_back(poly_trim(r));
  }
  chain.pop_back();
  // Cauchy bound: all roots have |z| <= 1 + max |a_i / a_n|.
  Rat bound(1);
  for (std::size_t i = 0; i + 1 < o.size(); ++i) {
    Rat q = (o[i] / o.back()).abs();
    if (q > bound) bound = q;
  }
  bound += Rat(1);
  return sign_variations(chain, Rat(0)) - sign_variations(chain, bound);
}

}  // namespace

bool sturm_nonneg_halfline(const Poly& p_in) {
  Poly p = poly_trim(p_in);
  if (p.empty()) return true;  // zero polynomial
  // Strip powers of z; they do not affect the sign on z > 0.
  std::size_t low = 0;
  while (p[low].is_zero()) ++low;
  p.erase(p.begin(), p.begin() + low);

  if (p.back().sign() < 0) return false;  // negative at infinity
  if (p.front().sign() < 0) return false;  // negative near zero

  std::vector<Poly> factors = squarefree_factors(p);
  Poly odd{Rat(1)};
  for (std::size_t k = 0; k < factors.size(); ++k)
    if (k % 2 == 0) odd = poly_mul(odd, factors[k]);  // multiplicity k+1 odd
  if (count_roots_positive(odd) > 0) return false;
  // No sign changes on (0, inf): the endpoint signs decide, and both are
  // nonnegative here.
  return true;
}

}  // namespace sonc
