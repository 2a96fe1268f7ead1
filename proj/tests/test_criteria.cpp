#include <doctest.h>

#include <algorithm>
#include <set>

#include "demroot/criteria.hpp"

using namespace demroot;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LatticePolytope weight_simplex() {
  return LatticePolytope::hull({iv({1, 0, 0}), iv({1, 3, 0}), iv({1, 0, 3}), iv({-5, -6, -3})});
}

}  // namespace

TEST_CASE("automorphism dimension summary") {
  for (int d = 1; d <= 4; ++d) {
    RootSet rs = roots_of_reflexive(simplex_ed_dual(d));
    AutSummary a = aut_summary(rs, d);
    CHECK(a.reductive);
    CHECK(a.aut_dim == Int(d * d + 2 * d));
  }
  {
    RootSet rs = roots_of_reflexive(weight_simplex());
    AutSummary a = aut_summary(rs, 3);
    CHECK(!a.reductive);
    CHECK(a.aut_dim == 13);
  }
  for (int d = 2; d <= 4; ++d) {
    RootSet rs = roots_of_reflexive(cube(d));
    CHECK(aut_summary(rs, d).aut_dim == Int(3 * d));
  }
}

TEST_CASE("fan criteria") {
  {
    RaySet rays = RaySet::from_generators(simplex_ed(2).vertices());
    CriteriaReport rep = check_fan_criteria(rays, compute_roots(rays));
    CHECK(rep.fan_a);
    CHECK(rep.fan_b);
    CHECK(rep.fan_c);
    CHECK(rep.ray_sum_zero);
  }
  {
    RootSet rs = roots_of_reflexive(weight_simplex());
    CriteriaReport rep = check_fan_criteria(rs.rays, rs);
    CHECK(!rep.fan_a);
    CHECK(!rep.fan_b);
    CHECK(!rep.fan_c);
    // vertex sum of the dual simplex is (-1,0,1), not zero
    IntVec s(3, Int(0));
    for (const auto& v : rs.rays.generators) s = add(s, v);
    CHECK(s == iv({-1, 0, 1}));
    CHECK(!rep.ray_sum_zero);
  }
  {
    RootSet rs = roots_of_reflexive(cube(3));
    CriteriaReport rep = check_fan_criteria(rs.rays, rs);
    CHECK(rep.fan_a);
    CHECK(rep.ray_sum_zero);
  }
}

TEST_CASE("reflexive criteria: all equivalents and sufficients") {
  {
    CriteriaReport rep = check_reflexive_criteria(simplex_ed_dual(2));
    for (bool b : rep.equivalent) CHECK(b);
    for (bool b : rep.sufficient) CHECK(b);
  }
  {
    CriteriaReport rep = check_reflexive_criteria(weight_simplex());
    for (bool b : rep.equivalent) CHECK(!b);
    for (bool b : rep.sufficient) CHECK(!b);
  }
  for (int d = 2; d <= 4; ++d) {
    CriteriaReport rep = check_reflexive_criteria(cube(d));
    for (bool b : rep.equivalent) CHECK(b);
    for (bool b : rep.sufficient) CHECK(b);
  }
}

TEST_CASE("product of projective spaces detection") {
  {
    RootSet rs = roots_of_reflexive(simplex_ed_dual(2));
    auto f = detect_product_projective(rs, cox_classes(rs.rays, rs), 2);
    REQUIRE(f.has_value());
    CHECK(*f == std::vector<Int>{Int(2)});
  }
  for (int d = 2; d <= 4; ++d) {
    RootSet rs = roots_of_reflexive(cube(d));
    auto f = detect_product_projective(rs, cox_classes(rs.rays, rs), d);
    REQUIRE(f.has_value());
    CHECK(f->size() == static_cast<size_t>(d));
    for (const Int& c : *f) CHECK(c == 1);
  }
  {
    RootSet rs = roots_of_reflexive(weight_simplex());
    CHECK(!detect_product_projective(rs, cox_classes(rs.rays, rs), 3).has_value());
  }
  {
    // P^2 x P^1 factors as [2, 1]
    auto P = product(simplex_ed_dual(2), segment_e1());
    RootSet rs = roots_of_reflexive(P);
    auto f = detect_product_projective(rs, cox_classes(rs.rays, rs), 3);
    REQUIRE(f.has_value());
    std::multiset<Int> got(f->begin(), f->end());
    CHECK(got == std::multiset<Int>{1, 2});
  }
}

TEST_CASE("bound checks with equality diagnoses") {
  for (int d = 2; d <= 4; ++d) {
    auto P = simplex_ed_dual(d);
    RootSet rs = roots_of_reflexive(P);
    BoundReport rep = bound_checks(rs, d, &P);
    CHECK(rep.projective_space);
    CHECK(!rep.product_of_lines);
    CHECK(rep.s_count == d * d + d);
  }
  for (int d = 2; d <= 4; ++d) {
    auto P = cube(d);
    RootSet rs = roots_of_reflexive(P);
    BoundReport rep = bound_checks(rs, d, &P);
    CHECK(rep.product_of_lines);
    CHECK(rep.eta_r == 2 * d);
  }
  {
    RootSet rs = roots_of_reflexive(weight_simplex());
    BoundReport rep = bound_checks(rs, 3, nullptr);
    CHECK(rep.eta_u == 2);
    CHECK(!rep.product_of_lines);
    CHECK(!rep.projective_space);
  }
}

TEST_CASE("codimension one analysis") {
  {
    // the weight simplex has dim lin S = 2 = d - 1, every ray carries
    // semisimple roots, and q = 2: both parts are vacuous
    RootSet rs = roots_of_reflexive(weight_simplex());
    CodimOneReport rep = codim_one_analysis(rs, cox_classes(rs.rays, rs));
    CHECK(rep.applicable);
    CHECK(!rep.part1_applicable);
    CHECK(rep.extra_rays.empty());
    CHECK(!rep.part2_applicable);
  }
  {
    RootSet rs = roots_of_reflexive(simplex_ed_dual(2));
    CHECK(!codim_one_analysis(rs, cox_classes(rs.rays, rs)).applicable);
  }
  {
    auto P = product(simplex_ed_dual(2), segment_e1());
    RootSet rs = roots_of_reflexive(P);
    CHECK(!codim_one_analysis(rs, cox_classes(rs.rays, rs)).applicable);
  }
  {
    // P^2 x E2: the semisimple span is the P^2 plane, codimension two
    auto P = product(simplex_ed_dual(2), simplex_ed(2));
    RootSet rs = roots_of_reflexive(P);
    CHECK(rs.span_dim(rs.s) == 2);
    CHECK(!codim_one_analysis(rs, cox_classes(rs.rays, rs)).applicable);
  }
}

TEST_CASE("codimension one analysis on the weighted plane P(1,1,2)") {
  // rays e1, e2, -e1-2e2: two semisimple roots +-e1*, three unipotent roots
  // over the ray e2, so dim lin(S) = 1 = d-1, q = 1 and both parts apply
  RaySet rays = RaySet::from_generators({iv({1, 0}), iv({0, 1}), iv({-1, -2})});
  RootSet rs = compute_roots(rays);
  CHECK(rs.all.size() == 5);
  CHECK(rs.s.size() == 2);
  CHECK(rs.u.size() == 3);
  CHECK(rs.span_dim(rs.s) == 1);
  DegreeClassData dcd = cox_classes(rays, rs);
  CHECK(dcd.q == 1);
  CodimOneReport rep = codim_one_analysis(rs, dcd);
  CHECK(rep.applicable);
  CHECK(rep.part1_applicable);
  REQUIRE(rep.extra_rays.size() == 1);
  CHECK(rays.generators[rep.extra_rays[0]] == iv({0, 1}));
  CHECK(rep.part2_applicable);
  CHECK(rs.eta_u.size() == 1);
}

TEST_CASE("semisimple span intersection") {
  {
    auto P = simplex_ed_dual(3);
    RootSet rs = roots_of_reflexive(P);
    RootBasis basis = build_root_basis(rs, cox_classes(rs.rays, rs));
    SpanCheck sc = semisimple_span_check(P, basis);
    CHECK(sc.applicable);
    CHECK(sc.verified);
    CHECK(lattice_isomorphism(sc.intersection, simplex_ed_dual(3)).has_value());
  }
  {
    // weight simplex: two classes of size one, intersection is the square
    auto P = weight_simplex();
    RootSet rs = roots_of_reflexive(P);
    RootBasis basis = build_root_basis(rs, cox_classes(rs.rays, rs));
    SpanCheck sc = semisimple_span_check(P, basis);
    CHECK(sc.verified);
    CHECK(sc.intersection.dim() == 2);
    CHECK(lattice_isomorphism(sc.intersection, cube(2)).has_value());
  }
  {
    // cube with a two-class sub-selection: the slice is the square
    auto P = cube(3);
    RootSet rs = roots_of_reflexive(P);
    DegreeClassData dcd = cox_classes(rs.rays, rs);
    BasisSelection sel;
    sel.picks.emplace_back(0, dcd.classes[0]);
    sel.picks.emplace_back(1, dcd.classes[1]);
    RootBasis basis = build_root_basis(rs, dcd, &sel);
    SpanCheck sc = semisimple_span_check(P, basis);
    CHECK(sc.verified);
    CHECK(lattice_isomorphism(sc.intersection, cube(2)).has_value());
  }
}

TEST_CASE("central decomposition") {
  {
    Decomposition d = central_decompose(cube(3));
    CHECK(d.split_k == 3);
    CHECK(!d.g.has_value());
    for (bool b : d.central_equiv) CHECK(b);
  }
  {
    Decomposition d = central_decompose(cross_polytope(3));
    CHECK(d.split_k == 0);
    REQUIRE(d.g.has_value());
    CHECK(*d.g == cross_polytope(3));
    for (bool b : d.central_equiv) CHECK(!b);
  }
  {
    Decomposition d = central_decompose(product(segment_e1(), cross_polytope(2)));
    CHECK(d.split_k == 1);
    REQUIRE(d.g.has_value());
    CHECK(d.g->dim() == 2);
    CHECK(lattice_isomorphism(*d.g, cross_polytope(2)).has_value());
  }
  CHECK_THROWS_AS(central_decompose(weight_simplex()), Error);
  try {
    central_decompose(weight_simplex());
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotCentrallySymmetric);
  }
}

TEST_CASE("symmetric polytopes are semisimple; unipotent face has a fixpoint") {
  {
    SymmetryReport rep = symmetric_implies_semisimple(cube(3));
    CHECK(rep.symmetric);
    CHECK(rep.semisimple);
  }
  {
    SymmetryReport rep = symmetric_implies_semisimple(simplex_ed_dual(2));
    CHECK(rep.symmetric);
    CHECK(rep.semisimple);
  }
  {
    SymmetryReport rep = symmetric_implies_semisimple(weight_simplex());
    CHECK(!rep.symmetric);
    CHECK(!rep.semisimple);
    CHECK(rep.face_codim == 2);  // F3 cap F4 is one-dimensional
    CHECK(!is_zero(rep.fixpoint_sum));
  }
}

TEST_CASE("reflexive-only operations reject non-reflexive input") {
  auto big = LatticePolytope::hull({iv({2, 2}), iv({2, -2}), iv({-2, 2}), iv({-2, -2})});
  try {
    check_reflexive_criteria(big);
    FAIL("expected NotReflexive");
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::NotReflexive);
  }
  CHECK_THROWS_AS(roots_of_reflexive(big), Error);
  CHECK_THROWS_AS(classify_2d(big), Error);
}

TEST_CASE("two-dimensional classification") {
  {
    Classify2D rep = classify_2d(cube(2));
    CHECK(rep.semisimple);
    CHECK(rep.iso_e1_squared);
  }
  {
    Classify2D rep = classify_2d(simplex_ed_dual(2));
    CHECK(rep.semisimple);
    CHECK(rep.iso_e2_dual);
  }
  {
    auto E2 = LatticePolytope::hull({iv({1, 0}), iv({0, 1}), iv({-1, -1})});
    Classify2D rep = classify_2d(E2);
    CHECK(rep.semisimple);
    CHECK(rep.smooth);
  }
}

TEST_CASE("reflexive polygon sweep finds the sixteen classes") {
  auto classes = enumerate_reflexive_2d(3);
  CHECK(classes.size() == 16);
  bool has_e2_dual = false, has_square = false;
  for (const auto& P : classes) {
    has_e2_dual = has_e2_dual || lattice_isomorphism(P, simplex_ed_dual(2)).has_value();
    has_square = has_square || lattice_isomorphism(P, cube(2)).has_value();
  }
  CHECK(has_e2_dual);
  CHECK(has_square);
  // boundary lattice point counts pair up under duality (b + b* = 12)
  std::multiset<long> bcounts;
  for (const auto& P : classes)
    bcounts.insert(static_cast<long>(lattice_points(P).size()) - 1);
  std::multiset<long> mirrored;
  for (long b : bcounts) mirrored.insert(12 - b);
  CHECK(bcounts == mirrored);
}
