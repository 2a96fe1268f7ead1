#include <doctest.h>

#include "demroot/polytope.hpp"

using namespace demroot;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("volumes of boxes and simplices") {
  CHECK(volume(cube(2)) == 4);
  CHECK(volume(cube(3)) == 8);
  CHECK(volume(cube(4)) == 16);
  CHECK(volume(LatticePolytope::hull({iv({0, 0}), iv({1, 0}), iv({0, 1})})) == make_rat(1, 2));
  CHECK(volume(cross_polytope(3)) == make_rat(4, 3));
}

TEST_CASE("barycenters") {
  for (int d = 1; d <= 4; ++d) CHECK(is_zero(barycenter(cube(d))));
  CHECK(is_zero(barycenter(simplex_ed_dual(2))));

  auto tri = LatticePolytope::hull({iv({-1, 0}), iv({1, 0}), iv({0, 1})});
  RatVec b = barycenter(tri);
  CHECK(b[0] == 0);
  CHECK(b[1] == make_rat(1, 3));

  // not centrally located
  auto W = LatticePolytope::hull({iv({1, 0, 0}), iv({1, 3, 0}), iv({1, 0, 3}), iv({-5, -6, -3})});
  CHECK(!is_zero(barycenter(W)));
}

TEST_CASE("barycenter is the volume-weighted simplex average (oracle)") {
  // for a simplex the barycenter is the vertex average; compare on E_3^*
  auto S = simplex_ed_dual(3);
  RatVec b = barycenter(S);
  for (int j = 0; j < 3; ++j) {
    Rat avg = 0;
    for (const auto& v : S.vertices()) avg += Rat(v[j]);
    avg /= static_cast<long>(S.vertices().size());
    CHECK(b[j] == avg);
  }
}

TEST_CASE("relative lattice volumes") {
  // lattice length of a segment
  CHECK(relative_volume({iv({-1, -1}), iv({-1, 2})}) == 3);
  CHECK(relative_volume({iv({0, 0}), iv({1, 0})}) == 1);
  // facet of the 3-cube is a 2x2 square in its own lattice
  CHECK(relative_volume({iv({1, -1, -1}), iv({1, -1, 1}), iv({1, 1, -1}), iv({1, 1, 1})}) == 4);
  // a single point
  CHECK(relative_volume({iv({7, -2})}) == 1);
  // skew facet: normalization divides out the sublattice determinant
  CHECK(relative_volume({iv({1, 0}), iv({0, 1})}) == 1);
}

TEST_CASE("facet rvol of the E2 dual triangle") {
  auto P = simplex_ed_dual(2);
  for (const auto& f : P.facets()) {
    std::vector<IntVec> fverts;
    for (int i : f.verts) fverts.push_back(P.vertices()[i]);
    CHECK(relative_volume(fverts) == 3);
  }
}
