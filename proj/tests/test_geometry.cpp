#include <doctest.h>

#include <algorithm>
#include <set>

#include "sonc/geometry.hpp"

using namespace sonc;

namespace {

SupportSet ex21() { return support_from_ints(2, {{0, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}}); }
SupportSet motzkin() { return support_from_ints(2, {{0, 0}, {4, 2}, {2, 4}, {2, 2}}); }
SupportSet line5() { return support_from_ints(1, {{0}, {1}, {2}, {3}, {4}}); }

}  // namespace

TEST_CASE("dims on the worked examples") {
  Dims d1 = dims(ex21());
  CHECK(d1.dim == 2);
  CHECK(d1.codim == 3);

  Dims d2 = dims(support_from_ints(1, {{0}, {1}, {2}}));
  CHECK(d2.dim == 1);
  CHECK(d2.codim == 1);

  Dims d3 = dims(motzkin());
  CHECK(d3.dim == 2);
  CHECK(d3.codim == 1);
}

TEST_CASE("dims invariance under permutation and unimodular maps") {
  SupportSet A = ex21();
  SupportSet B = support_from_ints(2, {{1, 2}, {2, 1}, {0, 0}, {1, 1}, {3, 0}, {2, 0}});
  CHECK(dims(B).dim == dims(A).dim);
  CHECK(dims(B).codim == dims(A).codim);
  // x -> (x + y, y), a unimodular shear, then translate by (1, -1).
  std::vector<Point> sheared;
  for (const Point& p : A.points)
    sheared.push_back(Point{p[0] + p[1] + Rat(1), p[1] - Rat(1)});
  SupportSet C(2, sheared);
  CHECK(dims(C).dim == 2);
  CHECK(dims(C).codim == 3);
}

TEST_CASE("newton faces of the 6-point planar example") {
  SupportSet A = ex21();
  std::vector<Face> faces = newton_faces(A);
  int nv = 0, ne = 0, nf = 0;
  std::set<std::vector<std::size_t>> verts;
  for (const Face& f : faces) {
    if (f.dim == 0) {
      ++nv;
      verts.insert(f.vertex_indices);
    }
    if (f.dim == 1) ++ne;
    if (f.dim == 2) ++nf;
  }
  CHECK(nv == 3);
  CHECK(ne == 3);
  CHECK(nf == 1);
  CHECK(verts.count({0}) == 1);
  CHECK(verts.count({2}) == 1);
  CHECK(verts.count({5}) == 1);
  // Every face is supported: all points weakly below, face points on.
  for (const Face& f : faces) {
    for (std::size_t i = 0; i < A.count(); ++i) {
      Rat v = dot(f.normal, A.points[i]);
      CHECK(v <= f.offset);
      bool on_face = std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), i);
      if (on_face) CHECK(v == f.offset);
    }
  }
}

TEST_CASE("newton faces of a segment") {
  SupportSet A = line5();
  std::vector<Face> faces = newton_faces(A);
  REQUIRE(faces.size() == 3);
  CHECK(faces[0].dim == 0);
  CHECK(faces[0].vertex_indices == std::vector<std::size_t>{0});
  CHECK(faces[1].dim == 0);
  CHECK(faces[1].vertex_indices == std::vector<std::size_t>{4});
  CHECK(faces[2].dim == 1);
  CHECK(faces[2].vertex_indices.size() == 5);
}

TEST_CASE("newton faces of the Motzkin triangle") {
  SupportSet A = motzkin();
  std::vector<Face> faces = newton_faces(A);
  std::set<std::vector<std::size_t>> verts;
  for (const Face& f : faces)
    if (f.dim == 0) verts.insert(f.vertex_indices);
  CHECK(verts == std::set<std::vector<std::size_t>>{{0}, {1}, {2}});
}

TEST_CASE("euler characteristic of the face lattice") {
  for (const SupportSet& A : {ex21(), motzkin(), line5()}) {
    int chi = 0;
    for (const Face& f : newton_faces(A)) chi += (f.dim % 2 == 0) ? 1 : -1;
    CHECK(chi == 1);
  }
}

TEST_CASE("relative interior membership") {
  SupportSet M = motzkin();
  std::vector<Face> faces = newton_faces(M);
  const Face* top = nullptr;
  for (const Face& f : faces)
    if (f.dim == 2) top = &f;
  REQUIRE(top != nullptr);
  CHECK(relint_members(M, *top) == std::vector<std::size_t>{3});

  for (const Face& f : faces)
    if (f.dim == 0) CHECK(relint_members(M, f) == std::vector<std::size_t>{f.vertex_indices[0]});

  // Edge conv{(3,0),(1,2)} of the 6-point example contains (2,1).
  SupportSet A = ex21();
  for (const Face& f : newton_faces(A))
    if (f.dim == 1 && f.vertex_indices == std::vector<std::size_t>{2, 4, 5})
      CHECK(relint_members(A, f) == std::vector<std::size_t>{4});
}

TEST_CASE("affine span basis") {
  std::vector<Point> collinear{{Rat(3), Rat(0)}, {Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
  AffineSpan s = affine_span_basis(collinear);
  REQUIRE(s.directions.size() == 1);
  // direction proportional to (1, -1)
  CHECK((s.directions[0][0] + s.directions[0][1]).is_zero());

  AffineSpan single = affine_span_basis({{Rat(5), Rat(7)}});
  CHECK(single.directions.empty());

  std::vector<Point> tri{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(affine_span_basis(tri).directions.size() == 2);
}

TEST_CASE("orthogonal complement") {
  std::vector<Point> collinear{{Rat(3), Rat(0)}, {Rat(2), Rat(1)}, {Rat(1), Rat(2)}};
  std::vector<RatVec> perp = orthogonal_complement_of_span(collinear, 2);
  REQUIRE(perp.size() == 1);
  // orthogonal to (1, -1): proportional to (1, 1)
  CHECK(perp[0][0] == perp[0][1]);
}

TEST_CASE("hull membership in 3d") {
  std::vector<Point> tet{{Rat(0), Rat(0), Rat(0)},
                         {Rat(2), Rat(0), Rat(0)},
                         {Rat(0), Rat(2), Rat(0)},
                         {Rat(0), Rat(0), Rat(2)}};
  Point inside{Rat(1, 2), Rat(1, 2), Rat(1, 2)};
  Point face_pt{Rat(1), Rat(1), Rat(0)};
  Point outside{Rat(2), Rat(2), Rat(2)};
  CHECK(in_convex_hull(tet, inside));
  CHECK(in_relative_interior(tet, inside));
  CHECK(in_convex_hull(tet, face_pt));
  CHECK_FALSE(in_relative_interior(tet, face_pt));
  CHECK_FALSE(in_convex_hull(tet, outside));

  SupportSet T(3, tet);
  std::vector<Face> faces = newton_faces(T);
  int nv = 0, ne = 0, nf = 0, nb = 0;
  for (const Face& f : faces) {
    if (f.dim == 0) ++nv;
    if (f.dim == 1) ++ne;
    if (f.dim == 2) ++nf;
    if (f.dim == 3) ++nb;
  }
  CHECK(nv == 4);
  CHECK(ne == 6);
  CHECK(nf == 4);
  CHECK(nb == 1);
}

TEST_CASE("ambient dimension guard") {
  SupportSet A(4, {{Rat(0), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0), Rat(0)}});
  CHECK_THROWS_WITH_AS(newton_faces(A), doctest::Contains("AmbientDimTooLarge"), DomainError);
}
