#include "sonc/equality.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sonc {

std::vector<std::vector<std::size_t>> affine_symmetries(const SupportSet& A) {
  AffineSpan span = affine_span_basis(A.points);
  std::size_t k = span.directions.size();
  std::vector<RatVec> coords;
  for (const Point& p : A.points) coords.push_back(*coords_in_span(span, p));

  // Affine frame: k+1 points with affinely independent coordinates.
  std::vector<std::size_t> frame{0};
  Mat dirs;
  for (std::size_t i = 1; i < A.count() && frame.size() < k + 1; ++i) {
    dirs.push_back(sub(coords[i], coords[frame[0]]));
    if (rank(dirs) == dirs.size())
      frame.push_back(i);
    else
      dirs.pop_back();
  }

  std::vector<std::vector<std::size_t>> syms;
  std::vector<std::size_t> image(frame.size());
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == frame.size()) {
      // Solve the affine map sending frame -> image over span coordinates,
      // coordinate by coordinate (k matrix entries plus a constant each).
      std::vector<RatVec> rowsys;
      for (std::size_t t = 0; t < frame.size(); ++t) {
        RatVec row = coords[frame[t]];
        row.push_back(Rat(1));
        rowsys.push_back(row);
      }
      // image coordinates per output coordinate j
      std::vector<RatVec> maps;  // each: k coefficients + constant
      for (std::size_t j = 0; j < k; ++j) {
        RatVec rhs;
        for (std::size_t t = 0; t < frame.size(); ++t) rhs.push_back(coords[image[t]][j]);
        std::optional<RatVec> sol = solve(rowsys, rhs);
        if (!sol) return;
        maps.push_back(*sol);
      }
      std::vector<std::size_t> perm(A.count());
      std::map<RatVec, std::size_t> lookup;
      for (std::size_t i = 0; i < A.count(); ++i) lookup[coords[i]] = i;
      for (std::size_t i = 0; i < A.count(); ++i) {
        RatVec img(k);
        for (std::size_t j = 0; j < k; ++j) {
          Rat acc = maps[j][k];
          for (std::size_t u = 0; u < k; ++u) acc += maps[j][u] * coords[i][u];
          img[j] = acc;
        }
        auto it = lookup.find(img);
        if (it == lookup.end()) return;
        perm[i] = it->second;
      }
      std::set<std::size_t> hit(perm.begin(), perm.end());
      if (hit.size() != A.count()) return;
      syms.push_back(perm);
      return;
    }
    for (std::size_t cand = 0; cand < A.count(); ++cand) {
      bool used = false;
      for (std::size_t u = 0; u < pos; ++u)
        if (image[u] == cand) used = true;
      if (used) continue;
      image[pos] = cand;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(syms.begin(), syms.end());
  syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
  return syms;
}

EqualityReport check_equality(const SupportSet& A) {
  if (A.n > 2) throw DomainError("TooLarge", "equality check supports n <= 2");
  if (A.count() > 10) throw DomainError("TooLarge", "equality check supports at most 10 points");

  EqualityReport rep;
  int k = dims(A).dim;

  rep.generic = true;
  for (const Circuit& c : enumerate_circuits(A)) {
    if (!c.simplicial) continue;
    if (c.dim != k) {
      rep.generic = false;
      rep.non_fulldim.push_back(c);
    }
  }

  // Census of distinct sonc-complexes across all regular subdivisions.
  std::map<std::vector<ComplexFace>, CensusEntry> census;
  for (const RegularSubdivision& sub : enumerate_regular_subdivisions(A)) {
    SoncComplex gamma = sonc_complex(A, sub);
    if (census.count(gamma.cells)) continue;
    CensusEntry e;
    e.complex = gamma;
    for (const SubCell& c : sub.cells) e.witness_cells.push_back(c.points);
    e.witness = *sub.witness;
    census.emplace(gamma.cells, std::move(e));
  }
  for (auto& [key, entry] : census) rep.census.push_back(entry);
  rep.census_raw = static_cast<long>(rep.census.size());

  // Symmetry-reduced count.
  std::vector<std::vector<std::size_t>> syms = affine_symmetries(A);
  rep.symmetry_order = static_cast<long>(syms.size());
  std::set<std::vector<ComplexFace>> reps;
  for (const CensusEntry& e : rep.census) {
    std::vector<ComplexFace> best = e.complex.cells;
    for (const auto& perm : syms) {
      std::vector<ComplexFace> relabeled;
      for (const ComplexFace& f : e.complex.cells) {
        ComplexFace nf;
        nf.dim = f.dim;
        for (std::size_t id : f.points) nf.points.push_back(perm[id]);
        std::sort(nf.points.begin(), nf.points.end());
        relabeled.push_back(std::move(nf));
      }
      std::sort(relabeled.begin(), relabeled.end());
      if (relabeled < best) best = relabeled;
    }
    reps.insert(best);
  }
  rep.census_up_to_symmetry = static_cast<long>(reps.size());

  for (std::size_t i = 0; i < rep.census.size(); ++i) {
    const CensusEntry& e = rep.census[i];
    if (e.complex.empty()) continue;
    if (e.complex.maximal_cells().size() > 1) rep.multi_maximal.push_back(i);
  }

  if (!rep.generic)
    rep.verdict = Verdict::PreconditionViolated;
  else
    rep.verdict = rep.multi_maximal.empty() ? Verdict::Equal : Verdict::NotEqual;
  return rep;
}

}  // namespace sonc
