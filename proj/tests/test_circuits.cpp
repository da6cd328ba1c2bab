#include <doctest.h>

#include <algorithm>
#include <set>

#include "sonc/circuits.hpp"
#include "sonc/simplex_lp.hpp"

using namespace sonc;

namespace {

SupportSet ex85() { return support_from_ints(2, {{0, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}}); }
SupportSet motzkin() { return support_from_ints(2, {{0, 0}, {4, 2}, {2, 4}, {2, 2}}); }
SupportSet line(int d) {
  std::vector<std::vector<long>> pts;
  for (int i = 0; i <= d; ++i) pts.push_back({i});
  return support_from_ints(1, pts);
}

std::vector<long> int_full_vector(const Circuit& c, std::size_t len) {
  std::vector<long> v(len, 0);
  for (std::size_t k = 0; k < c.support.size(); ++k) v[c.support[k]] = c.integer_vec[k].num().get_si();
  return v;
}

// Independent brute-force oracle: circuits are the minimally dependent
// subsets, found by rank computations alone.
std::vector<std::vector<std::size_t>> circuit_supports_oracle(const SupportSet& A) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t n = A.count();
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) S.push_back(i);
    if (S.size() < 2) continue;
    Mat m(rows(A.matrix), RatVec(S.size()));
    for (std::size_t r = 0; r < rows(A.matrix); ++r)
      for (std::size_t k = 0; k < S.size(); ++k) m[r][k] = A.matrix[r][S[k]];
    bool dependent = rank(m) < S.size();
    if (!dependent) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < S.size() && minimal; ++drop) {
      Mat m2(rows(A.matrix), RatVec(S.size() - 1));
      std::size_t col = 0;
      for (std::size_t k = 0; k < S.size(); ++k) {
        if (k == drop) continue;
        for (std::size_t r = 0; r < rows(A.matrix); ++r) m2[r][col] = A.matrix[r][S[k]];
        ++col;
      }
      if (rank(m2) < S.size() - 1) minimal = false;
    }
    if (minimal) out.push_back(S);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("circuits of the 6-point planar example match the printed matrix") {
  SupportSet A = ex85();
  std::vector<Circuit> cs = enumerate_circuits(A);
  std::vector<std::vector<long>> simplicial;
  for (const Circuit& c : cs) {
    CHECK(c.support.size() >= 3);
    if (c.simplicial) simplicial.push_back(int_full_vector(c, A.count()));
  }
  std::vector<std::vector<long>> expected{
      {1, 1, 0, -4, 0, 2}, {0, 0, 1, 0, -2, 1}, {1, -3, 2, 0, 0, 0}, {1, 0, 0, -3, 1, 1}};
  std::sort(simplicial.begin(), simplicial.end());
  std::sort(expected.begin(), expected.end());
  CHECK(simplicial == expected);
}

TEST_CASE("motzkin circuit") {
  std::vector<Circuit> cs = enumerate_circuits(motzkin());
  REQUIRE(cs.size() == 1);
  const Circuit& c = cs[0];
  CHECK(c.simplicial);
  CHECK(c.support == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(c.interior_index == std::size_t{3});
  CHECK(int_full_vector(c, 4) == std::vector<long>{1, 1, 1, -3});
  CHECK(c.dim == 2);
}

TEST_CASE("three collinear points") {
  std::vector<Circuit> cs = enumerate_circuits(line(2));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].simplicial);
  CHECK(int_full_vector(cs[0], 3) == std::vector<long>{1, -2, 1});
  RatVec b = barycentric_vector(cs[0]);
  CHECK(b[0] == Rat(1, 2));
  CHECK(b[1] == Rat(-1));
  CHECK(b[2] == Rat(1, 2));
}

TEST_CASE("barycentric vectors") {
  // Motzkin: (1/3, 1/3, 1/3, -1) in support order.
  std::vector<Circuit> cs = enumerate_circuits(motzkin());
  RatVec b = barycentric_vector(cs[0]);
  CHECK(b == RatVec{Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(-1)});

  // {0,2,3} with interior 2: (1/3, -1, 2/3).
  SupportSet A = support_from_ints(1, {{0}, {2}, {3}});
  std::vector<Circuit> cs2 = enumerate_circuits(A);
  REQUIRE(cs2.size() == 1);
  CHECK(cs2[0].interior_index == std::size_t{1});
  CHECK(barycentric_vector(cs2[0]) == RatVec{Rat(1, 3), Rat(-1), Rat(2, 3)});

  Circuit square;
  square.simplicial = false;
  CHECK_THROWS_WITH_AS(barycentric_vector(square), doctest::Contains("NotSimplicial"), DomainError);
}

TEST_CASE("kernel and minimality of every enumerated circuit") {
  for (const SupportSet& A : {ex85(), motzkin(), line(4)}) {
    for (const Circuit& c : enumerate_circuits(A)) {
      RatVec full = c.full_vector(A.count());
      for (std::size_t r = 0; r < rows(A.matrix); ++r) {
        Rat acc(0);
        for (std::size_t j = 0; j < A.count(); ++j) acc += A.matrix[r][j] * full[j];
        CHECK(acc.is_zero());
      }
      // Any one-smaller subset must be independent.
      for (std::size_t drop = 0; drop < c.support.size(); ++drop) {
        Mat m(rows(A.matrix), RatVec(c.support.size() - 1));
        std::size_t col = 0;
        for (std::size_t k = 0; k < c.support.size(); ++k) {
          if (k == drop) continue;
          for (std::size_t r = 0; r < rows(A.matrix); ++r) m[r][col] = A.matrix[r][c.support[k]];
          ++col;
        }
        CHECK(rank(m) == c.support.size() - 1);
      }
    }
  }
}

TEST_CASE("circuit enumeration agrees with the minimal-dependence oracle") {
  for (const SupportSet& A :
       {ex85(), motzkin(), line(4), support_from_ints(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
        support_from_ints(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}, {1, 0}})}) {
    std::vector<std::vector<std::size_t>> got;
    for (const Circuit& c : enumerate_circuits(A)) got.push_back(c.support);
    std::sort(got.begin(), got.end());
    CHECK(got == circuit_supports_oracle(A));
  }
}

TEST_CASE("edge generators") {
  // The 6-point example has exactly 4 edge generators.
  ReznickCone rc = reznick_cone(ex85());
  CHECK(rc.circuits.size() == 4);
  CHECK(rc.edge_generators.size() == 4);
  CHECK(rc.dim == 3);

  // {0,...,4}: generators are the consecutive triples.
  ReznickCone rl = reznick_cone(line(4));
  std::set<std::vector<std::size_t>> gens;
  for (const Circuit& c : rl.edge_generators) gens.insert(c.support);
  CHECK(gens == std::set<std::vector<std::size_t>>{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  CHECK(rl.dim == 3);  // m = d - 1 = 3, simple

  // A single simplicial circuit is its own generator.
  ReznickCone rm = reznick_cone(motzkin());
  CHECK(rm.edge_generators.size() == 1);
  CHECK(rm.dim == 1);

  // A non-simplicial circuit alone: dim 0.
  ReznickCone rs = reznick_cone(support_from_ints(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(rs.circuits.empty());
  CHECK(rs.dim == 0);
}

TEST_CASE("edge generator set is invariant under relabeling") {
  SupportSet A = ex85();
  SupportSet B = support_from_ints(2, {{1, 2}, {2, 1}, {1, 1}, {3, 0}, {2, 0}, {0, 0}});
  auto gen_pointsets = [](const SupportSet& S) {
    std::set<std::set<std::string>> out;
    for (const Circuit& c : reznick_cone(S).edge_generators) {
      std::set<std::string> pts;
      for (std::size_t id : c.support) {
        std::string key;
        for (const Rat& x : S.points[id]) key += x.str() + ",";
        pts.insert(key);
      }
      out.insert(pts);
    }
    return out;
  };
  CHECK(gen_pointsets(A) == gen_pointsets(B));
}

TEST_CASE("positive hull of edge generators contains every simplicial circuit") {
  for (const SupportSet& A : {ex85(), line(4), line(5)}) {
    ReznickCone rc = reznick_cone(A);
    for (const Circuit& c : rc.circuits) {
      // Feasibility of c = sum t_g g, t >= 0, via exact LP.
      std::size_t ng = rc.edge_generators.size();
      Mat eq;
      RatVec rhs;
      RatVec target = c.full_vector(A.count());
      for (std::size_t row = 0; row < A.count(); ++row) {
        RatVec r(ng);
        for (std::size_t g = 0; g < ng; ++g) r[g] = rc.edge_generators[g].full_vector(A.count())[row];
        eq.push_back(r);
        rhs.push_back(target[row]);
      }
      Mat ineq;
      RatVec ib;
      for (std::size_t g = 0; g < ng; ++g) {
        RatVec r(ng, Rat(0));
        r[g] = Rat(-1);
        ineq.push_back(r);
        ib.push_back(Rat(0));
      }
      CHECK(lp_feasible(ineq, ib, eq, rhs));
    }
  }
}

TEST_CASE("simplicial circuit through a point pair") {
  SupportSet A = ex85();
  // interior (1,1) = index 3, vertex (3,0) = index 2
  Circuit c = simplicial_circuit_through(A, 3, 2);
  CHECK(c.simplicial);
  CHECK(c.interior_index == std::size_t{3});
  CHECK(std::binary_search(c.support.begin(), c.support.end(), std::size_t{2}));

  // Motzkin: only one circuit exists.
  SupportSet M = motzkin();
  Circuit cm = simplicial_circuit_through(M, 3, 0);
  CHECK(cm.support == std::vector<std::size_t>{0, 1, 2, 3});

  // {0,...,4}: interior 2, vertex 4.
  SupportSet L = line(4);
  Circuit cl = simplicial_circuit_through(L, 2, 4);
  CHECK(cl.simplicial);
  CHECK(cl.interior_index == std::size_t{2});
  CHECK(std::binary_search(cl.support.begin(), cl.support.end(), std::size_t{4}));

  // Vertex of the hull is not an interior point.
  CHECK_THROWS_WITH_AS(simplicial_circuit_through(A, 0, 2), doctest::Contains("NotInteriorPoint"), DomainError);
}
