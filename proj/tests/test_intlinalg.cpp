#include <doctest.h>

#include <random>

#include "demroot/intlinalg.hpp"

using namespace demroot;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// independent determinant oracle: cofactor expansion
Int det_cofactor(const IntMat& a) {
  const int n = a.rows;
  if (n == 1) return a.at(0, 0);
  Int sum = 0;
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = a.at(i, c);
      }
    }
    Int term = a.at(0, j) * det_cofactor(minor);
    sum += (j % 2 == 0) ? term : Int(-term);
  }
  return sum;
}

IntMat random_matrix(std::mt19937_64& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("primitive_part basics") {
  auto [g1, w1] = primitive_part(iv({2, 4, 6}));
  CHECK(g1 == 2);
  CHECK(w1 == iv({1, 2, 3}));

  auto [g2, w2] = primitive_part(iv({0, -3}));
  CHECK(g2 == 3);
  CHECK(w2 == iv({0, -1}));

  auto [g3, w3] = primitive_part(iv({5, 7}));
  CHECK(g3 == 1);
  CHECK(w3 == iv({5, 7}));

  CHECK_THROWS_AS(primitive_part(iv({0, 0})), Error);
}

TEST_CASE("primitive_part is idempotent on its output") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int iter = 0; iter < 200; ++iter) {
    IntVec v(4);
    for (auto& x : v) x = dist(rng);
    if (is_zero(v)) continue;
    auto [g, w] = primitive_part(v);
    CHECK(g >= 1);
    auto [g2, w2] = primitive_part(w);
    CHECK(g2 == 1);
    CHECK(w2 == w);
  }
}

TEST_CASE("smith normal form on pinned examples") {
  {
    IntMat a(2, 2);
    a.at(0, 0) = 2;
    a.at(1, 1) = 3;
    auto snf = smith_normal_form(a);
    CHECK(snf.rank == 2);
    CHECK(snf.d.at(0, 0) == 1);
    CHECK(snf.d.at(1, 1) == 6);
  }
  {
    auto snf = smith_normal_form(IntMat::identity(3));
    CHECK(snf.rank == 3);
    for (int i = 0; i < 3; ++i) CHECK(snf.d.at(i, i) == 1);
  }
  {
    // ray matrix of the projective plane: cokernel is free of rank one
    IntMat a = IntMat::from_rows({iv({1, 0}), iv({0, 1}), iv({-1, -1})});
    auto snf = smith_normal_form(a);
    CHECK(snf.rank == 2);
    CHECK(snf.d.at(0, 0) == 1);
    CHECK(snf.d.at(1, 1) == 1);
  }
}

TEST_CASE("smith normal form transform properties") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    IntMat a = random_matrix(rng, r, c, -9, 9);
    auto snf = smith_normal_form(a);
    CHECK(mul(mul(snf.u, a), snf.v) == snf.d);
    Int du = exact_determinant(snf.u);
    Int dv = exact_determinant(snf.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK(mul(snf.v, snf.vinv) == IntMat::identity(c));
    for (int i = 0; i + 1 < snf.rank; ++i) {
      CHECK(snf.d.at(i, i) > 0);
      CHECK(snf.d.at(i + 1, i + 1) % snf.d.at(i, i) == 0);
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(snf.d.at(i, j) == 0);
  }
}

TEST_CASE("exact determinant against the cofactor oracle") {
  CHECK(exact_determinant(IntMat::identity(4)) == 1);
  CHECK(exact_determinant(IntMat::from_rows({iv({1, 0}), iv({1, 3})})) ==
        det_cofactor(IntMat::from_rows({iv({1, 0}), iv({1, 3})})));
  CHECK(exact_determinant(IntMat::from_rows({iv({1, 0}), iv({1, 3})})) == 3);
  CHECK(exact_determinant(IntMat::from_rows({iv({2, 0}), iv({0, 3})})) == 6);
  CHECK_THROWS_AS(exact_determinant(IntMat(2, 3)), Error);

  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 80; ++iter) {
    int n = 1 + static_cast<int>(rng() % 5);
    IntMat a = random_matrix(rng, n, n, -7, 7);
    CHECK(exact_determinant(a) == det_cofactor(a));
  }
}

TEST_CASE("affine lattice basis is the saturated difference lattice") {
  {
    auto ab = affine_lattice_basis({iv({-1, -1}), iv({-1, 2})});
    CHECK(ab.origin == iv({-1, -1}));
    REQUIRE(ab.basis.size() == 1);
    CHECK(ab.basis[0] == iv({0, 1}));
  }
  {
    auto ab = affine_lattice_basis({iv({1, 0, 0}), iv({1, 3, 0}), iv({1, 0, 3})});
    REQUIRE(ab.basis.size() == 2);
    CHECK(ab.basis[0] == iv({0, 1, 0}));
    CHECK(ab.basis[1] == iv({0, 0, 1}));
  }
  {
    auto ab = affine_lattice_basis({iv({5, -2})});
    CHECK(ab.basis.empty());
  }
}

TEST_CASE("affine basis solves every difference and stays inside the span") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> dist(-6, 6);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<IntVec> pts;
    int npts = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < npts; ++i) {
      IntVec p(4);
      for (auto& x : p) x = dist(rng);
      pts.push_back(p);
    }
    auto ab = affine_lattice_basis(pts);
    for (const auto& p : pts) {
      auto coords = affine_coordinates(ab, p);
      REQUIRE(coords.has_value());
      IntVec back = ab.origin;
      for (size_t i = 0; i < ab.basis.size(); ++i)
        back = add(back, scale((*coords)[i], ab.basis[i]));
      CHECK(back == p);
    }
    std::vector<IntVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    bool any = false;
    for (const auto& d : diffs) any = any || !is_zero(d);
    if (any)
      for (const auto& b : ab.basis) CHECK(span_coordinates(diffs, to_rat(b)).has_value());
  }
}

TEST_CASE("kernel and span helpers") {
  RatMat m(1, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(0, 2) = 1;
  CHECK(!kernel_primitive(m).has_value());  // kernel is two-dimensional

  RatMat m2(2, 3);
  m2.at(0, 0) = 1;
  m2.at(0, 2) = -1;
  m2.at(1, 1) = 2;
  m2.at(1, 2) = -2;
  auto k2 = kernel_primitive(m2);
  REQUIRE(k2.has_value());
  CHECK(*k2 == iv({1, 1, 1}));

  auto c = span_coordinates({iv({1, 0, 1}), iv({0, 1, 1})}, to_rat(iv({2, 3, 5})));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK(!span_coordinates({iv({1, 0, 1})}, to_rat(iv({0, 1, 0}))).has_value());
}
