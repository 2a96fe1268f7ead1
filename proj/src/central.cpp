#include <algorithm>

#include "demroot/criteria.hpp"

namespace demroot {

namespace {

Int pow_int(long base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Facet F recentered at the root x: coordinates of V(F) - x in a Z-basis of
// the facet's own affine lattice.
LatticePolytope recenter_facet(const LatticePolytope& P, int facet, const IntVec& x) {
  std::vector<IntVec> fverts;
  for (int i : P.facets()[facet].verts) fverts.push_back(P.vertices()[i]);
  AffineBasis ab = affine_lattice_basis(fverts);
  auto xc = affine_coordinates(ab, x);
  require(xc.has_value(), ErrorKind::PreconditionFailed, "root outside facet lattice");
  std::vector<IntVec> coords;
  for (const auto& v : fverts) {
    auto c = affine_coordinates(ab, v);
    require(c.has_value(), ErrorKind::PreconditionFailed, "facet chart failure");
    coords.push_back(sub(*c, *xc));
  }
  return LatticePolytope::hull(coords);
}

}  // namespace

Decomposition central_decompose(const LatticePolytope& P) {
  require(is_reflexive(P), ErrorKind::NotReflexive, "central_decompose: not reflexive");
  require(P.centrally_symmetric(), ErrorKind::NotCentrallySymmetric,
          "central_decompose: P != -P");
  const int d = P.dim();
  RootSet rs = roots_of_reflexive(P);

  Decomposition out;
  out.centrally_symmetric = true;

  // facet bounds: at most 3^(d-1) lattice points and at most one root each;
  // |P cap M| <= 3^d and |R| <= 2d
  for (int f = 0; f < static_cast<int>(P.facets().size()); ++f) {
    theorem_check(Int(static_cast<long>(facet_lattice_points(P, f).size())) <=
                      pow_int(3, d - 1),
                  "facet with more than 3^(d-1) lattice points");
    theorem_check(facet_relint_points(P, f).size() <= 1,
                  "facet of a centrally symmetric polytope with two roots");
  }
  theorem_check(Int(static_cast<long>(lattice_points(P).size())) <= pow_int(3, d),
                "more than 3^d lattice points");
  theorem_check(static_cast<int>(rs.all.size()) <= 2 * d, "more than 2d roots");

  // iterated splitting: P iso E_1 x F whenever the facet F contains a root
  LatticePolytope cur = P;
  bool cur_is_point = false;
  int k = 0;
  while (!cur_is_point) {
    int split_facet = -1;
    IntVec root;
    for (int f = 0; f < static_cast<int>(cur.facets().size()); ++f) {
      auto relint = facet_relint_points(cur, f);
      if (!relint.empty()) {
        theorem_check(relint.size() == 1, "split facet carries two roots");
        split_facet = f;
        root = relint[0];
        break;  // facets are ordered by normal, so this is the lex-first choice
      }
    }
    if (split_facet < 0) break;
    ++k;
    if (cur.dim() == 1) {
      cur_is_point = true;
      break;
    }
    cur = recenter_facet(cur, split_facet, root);
    theorem_check(is_reflexive(cur), "split factor is not reflexive");
    theorem_check(cur.centrally_symmetric(), "split factor is not centrally symmetric");
  }
  out.split_k = k;
  theorem_check(Int(2 * k) == Int(static_cast<long>(rs.all.size())),
                "number of E_1 factors differs from |R|/2");
  if (!cur_is_point) {
    theorem_check(roots_of_reflexive(cur).all.empty(), "residual factor still has roots");
    out.g = cur;
  }

  // reconstruct and compare
  LatticePolytope rebuilt;
  if (cur_is_point)
    rebuilt = cube(k);
  else if (k == 0)
    rebuilt = cur;
  else
    rebuilt = product(cube(k), cur);
  theorem_check(lattice_isomorphism(P, rebuilt).has_value(),
                "E_1^k x G is not isomorphic to P");

  // the five equivalent characterizations of the extreme case
  auto& eqv = out.central_equiv;
  eqv[0] = Int(static_cast<long>(lattice_points(P).size())) == pow_int(3, d);
  eqv[1] = static_cast<int>(rs.all.size()) == 2 * d;
  eqv[2] = true;
  eqv[3] = true;
  for (int f = 0; f < static_cast<int>(P.facets().size()); ++f) {
    if (facet_relint_points(P, f).empty()) eqv[2] = false;
    if (Int(static_cast<long>(facet_lattice_points(P, f).size())) != pow_int(3, d - 1))
      eqv[3] = false;
  }
  eqv[4] = lattice_isomorphism(P, cube(d)).has_value();
  for (int i = 1; i < 5; ++i)
    theorem_check(eqv[i] == eqv[0], "central characterizations disagree");
  return out;
}

}  // namespace demroot
