#include <algorithm>

#include "demroot/criteria.hpp"

namespace demroot {

AutSummary aut_summary(const RootSet& rs, int d) {
  return {rs.u.empty(), Int(static_cast<long>(rs.all.size())) + d};
}

namespace {

bool roots_sum_zero(const RootSet& rs) {
  if (rs.all.empty()) return true;
  IntVec sum(rs.rays.dim, Int(0));
  for (const Root& r : rs.all) sum = add(sum, r.m);
  return is_zero(sum);
}

bool ray_pairing_sums_zero(const RaySet& rays, const RootSet& rs) {
  for (const Root& r : rs.all) {
    Int s = 0;
    for (const auto& v : rays.generators) s += dot(v, r.m);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

CriteriaReport check_fan_criteria(const RaySet& rays, const RootSet& rs) {
  CriteriaReport rep;
  rep.fan_a = rs.semisimple();
  rep.fan_b = roots_sum_zero(rs);
  rep.fan_c = ray_pairing_sums_zero(rays, rs);
  theorem_check(rep.fan_a == rep.fan_b && rep.fan_b == rep.fan_c,
                "fan criteria (a),(b),(c) disagree");
  IntVec ray_sum(rays.dim, Int(0));
  for (const auto& v : rays.generators) ray_sum = add(ray_sum, v);
  rep.ray_sum_zero = is_zero(ray_sum);
  if (rep.ray_sum_zero)
    theorem_check(rep.fan_a, "sum of rays is zero but the fan is not semisimple");
  AutSummary aut = aut_summary(rs, rays.dim);
  rep.reductive = aut.reductive;
  rep.aut_dim = aut.aut_dim;
  return rep;
}

CriteriaReport check_reflexive_criteria(const LatticePolytope& P) {
  require(is_reflexive(P), ErrorKind::NotReflexive, "criteria: polytope not reflexive");
  const int d = P.dim();
  RootSet rs = roots_of_reflexive(P);
  CriteriaReport rep = check_fan_criteria(rs.rays, rs);
  rep.has_reflexive = true;

  LatticePolytope Pd = dual(P).as_lattice();
  auto dual_points = lattice_points(Pd);
  RatVec dual_bary = barycenter(Pd);

  auto& eq = rep.equivalent;
  eq[0] = rs.semisimple();
  eq[1] = roots_sum_zero(rs);
  eq[2] = true;  // sum over V(P*) of <v, x>
  for (const Root& r : rs.all) {
    Int s = 0;
    for (const auto& v : rs.rays.generators) s += dot(v, r.m);
    if (s != 0) eq[2] = false;
  }
  eq[3] = true;  // sum over P* cap N of <y, x>
  for (const Root& r : rs.all) {
    Int s = 0;
    for (const auto& y : dual_points) s += dot(y, r.m);
    if (s != 0) eq[3] = false;
  }
  eq[4] = true;  // <b_{P*}, x> = 0
  for (const Root& r : rs.all)
    if (dot_qz(r.m, dual_bary) != 0) eq[4] = false;

  std::vector<Rat> facet_rvol;
  std::vector<long> facet_count;
  for (int f = 0; f < static_cast<int>(P.facets().size()); ++f) {
    std::vector<IntVec> fverts;
    for (int i : P.facets()[f].verts) fverts.push_back(P.vertices()[i]);
    facet_rvol.push_back(relative_volume(fverts));
    facet_count.push_back(static_cast<long>(facet_lattice_points(P, f).size()));
  }
  eq[5] = true;  // rvol(F') = rvol(F_x) whenever <eta_F', x> > 0
  eq[6] = true;  // lattice point counts likewise
  for (const Root& r : rs.all)
    for (int f = 0; f < static_cast<int>(P.facets().size()); ++f) {
      if (dot(P.facets()[f].normal, r.m) <= 0) continue;
      if (facet_rvol[f] != facet_rvol[r.eta]) eq[5] = false;
      if (facet_count[f] != facet_count[r.eta]) eq[6] = false;
    }
  for (int i = 1; i < 7; ++i)
    theorem_check(eq[i] == eq[0],
                  std::string("reflexive criteria disagree: (a) vs (") +
                      static_cast<char>('a' + i) + ")");

  auto& suf = rep.sufficient;
  suf[0] = is_zero(barycenter(P));
  {
    IntVec s(d, Int(0));
    for (const auto& m : lattice_points(P)) s = add(s, m);
    suf[1] = is_zero(s);
  }
  suf[2] = is_zero(dual_bary);
  {
    IntVec s(d, Int(0));
    for (const auto& y : dual_points) s = add(s, y);
    suf[3] = is_zero(s);
  }
  {
    IntVec s(d, Int(0));
    for (const auto& v : rs.rays.generators) s = add(s, v);
    suf[4] = is_zero(s);
  }
  suf[5] = std::all_of(facet_rvol.begin(), facet_rvol.end(),
                       [&](const Rat& r) { return r == facet_rvol[0]; });
  suf[6] = std::all_of(facet_count.begin(), facet_count.end(),
                       [&](long c) { return c == facet_count[0]; });
  const char* names[7] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  for (int i = 0; i < 7; ++i)
    if (suf[i])
      theorem_check(eq[0], std::string("sufficient condition ") + names[i] +
                               " holds but the polytope is not semisimple");
  if (suf[5]) theorem_check(suf[4], "condition vi does not imply v");
  rep.p_smooth = fano_class(P).smooth;
  return rep;
}

std::optional<std::vector<Int>> detect_product_projective(const RootSet& rs,
                                                          const DegreeClassData& dcd, int d) {
  if (rs.span_dim(rs.s) != d) return std::nullopt;
  std::vector<Int> factors;
  Int total = 0;
  for (int i = 0; i < dcd.q; ++i) {
    factors.push_back(dcd.class_sizes[i]);
    total += dcd.class_sizes[i];
  }
  theorem_check(total == d, "product factors do not add up to the dimension");
  return factors;
}

BoundReport bound_checks(const RootSet& rs, int d, const LatticePolytope* P) {
  BoundReport rep;
  rep.d = d;
  rep.eta_u = static_cast<long>(rs.eta_u.size());
  rep.eta_r = static_cast<long>(rs.eta_r.size());
  rep.s_count = static_cast<long>(rs.s.size());
  rep.r_count = static_cast<long>(rs.all.size());
  rep.dim_lin_s = rs.span_dim(rs.s);

  theorem_check(rep.eta_u <= d, "|eta(U)| > d");
  {
    std::vector<int> only_u;
    std::set_difference(rs.eta_u.begin(), rs.eta_u.end(), rs.eta_s.begin(), rs.eta_s.end(),
                        std::back_inserter(only_u));
    theorem_check(static_cast<int>(only_u.size()) <= d - rep.dim_lin_s,
                  "|eta(U) \\ eta(S)| exceeds codim lin(S)");
  }
  theorem_check(rep.eta_r <= 2 * d, "|eta(R)| > 2d");
  theorem_check(rep.s_count <= d * d + d, "|S| > d^2 + d");

  DegreeClassData dcd = cox_classes(rs.rays, rs);
  auto factors = detect_product_projective(rs, dcd, d);
  rep.product_of_lines = rep.eta_r == 2 * d;
  if (rep.product_of_lines) {
    theorem_check(factors.has_value(), "|eta(R)| = 2d without product structure");
    theorem_check(std::all_of(factors->begin(), factors->end(),
                              [](const Int& c) { return c == 1; }),
                  "|eta(R)| = 2d but some factor is not a line");
    if (P)
      theorem_check(lattice_isomorphism(*P, cube(d)).has_value(),
                    "|eta(R)| = 2d but P is not the cube");
  }
  rep.projective_space = rep.s_count == d * d + d;
  if (rep.projective_space) {
    theorem_check(factors.has_value() && factors->size() == 1 && (*factors)[0] == d,
                  "|S| = d^2 + d without projective space structure");
    if (P)
      theorem_check(lattice_isomorphism(*P, simplex_ed_dual(d)).has_value(),
                    "|S| = d^2 + d but P is not E_d^*");
  }
  if (rs.u.empty() && !factors.has_value()) {
    Int n = Int(rep.r_count) + d;
    theorem_check(n <= d * d - 2, "reductive non-product exceeds d^2 - 2");
  }
  return rep;
}

CodimOneReport codim_one_analysis(const RootSet& rs, const DegreeClassData& dcd) {
  CodimOneReport rep;
  const int d = rs.rays.dim;
  if (rs.span_dim(rs.s) != d - 1) return rep;
  rep.applicable = true;

  const int nrays = static_cast<int>(rs.rays.generators.size());
  for (int t = 0; t < nrays; ++t)
    if (!std::binary_search(rs.eta_s.begin(), rs.eta_s.end(), t)) rep.extra_rays.push_back(t);

  if (!rep.extra_rays.empty()) {
    rep.part1_applicable = true;
    theorem_check(rep.extra_rays.size() <= 2, "more than two rays outside eta(S)");
    if (rep.extra_rays.size() == 2) {
      const IntVec& a = rs.rays.generators[rep.extra_rays[0]];
      const IntVec& b = rs.rays.generators[rep.extra_rays[1]];
      theorem_check(a == neg(b), "two rays outside eta(S) are not antipodal");
    }
  }
  if (dcd.q == 1) {
    rep.part2_applicable = true;
    theorem_check(Int(static_cast<long>(rs.s.size())) == Int(d) * d - d,
                  "q = 1 must mean |S| = d^2 - d in codimension one");
    theorem_check(rs.eta_u.size() == 1, "q = 1 needs exactly one unipotent facet");
    std::vector<int> inter;
    std::set_intersection(rs.eta_s.begin(), rs.eta_s.end(), rs.eta_u.begin(), rs.eta_u.end(),
                          std::back_inserter(inter));
    theorem_check(inter.empty(), "q = 1 needs eta(S) disjoint from eta(U)");
  }
  return rep;
}

SpanCheck semisimple_span_check(const LatticePolytope& P, const RootBasis& basis) {
  SpanCheck out;
  if (basis.roots.empty()) return out;
  out.applicable = true;
  out.class_sizes = basis.class_sizes;

  try {
    out.intersection = intersect_with_subspace(P, basis.roots);
  } catch (const Error& e) {
    fail(ErrorKind::TheoremViolation,
         std::string("semisimple span intersection failed: ") + e.what());
  }

  // product of simplex duals E*_{c_i}, one factor per equivalence class
  LatticePolytope expected;
  bool first = true;
  for (const Int& c : basis.class_sizes) {
    LatticePolytope factor = simplex_ed_dual(static_cast<int>(c.get_si()));
    expected = first ? factor : product(expected, factor);
    first = false;
  }
  theorem_check(lattice_isomorphism(out.intersection, expected).has_value(),
                "P cap lin(A) is not the product of simplex duals");

  // per class: P cap lin(C_i) = conv(b, b - (l+1) b_i) in class coordinates
  for (size_t ci = 0; ci < basis.classes.size(); ++ci) {
    std::vector<IntVec> croots;
    for (int k : basis.classes[ci]) croots.push_back(basis.roots[k]);
    LatticePolytope Qi;
    try {
      Qi = intersect_with_subspace(P, croots);
    } catch (const Error& e) {
      fail(ErrorKind::TheoremViolation,
           std::string("class span intersection failed: ") + e.what());
    }
    const int l = static_cast<int>(croots.size());
    std::vector<IntVec> expect_verts;
    expect_verts.emplace_back(l, Int(1));
    for (int i = 0; i < l; ++i) {
      IntVec v(l, Int(1));
      v[i] -= l + 1;
      expect_verts.push_back(std::move(v));
    }
    std::sort(expect_verts.begin(), expect_verts.end());
    theorem_check(Qi.vertices() == expect_verts,
                  "P cap lin(C_i) differs from conv(b, b - (l+1) b_i)");
    theorem_check(lattice_isomorphism(Qi, simplex_ed_dual(l)).has_value(),
                  "P cap lin(C_i) is not E*_c");
  }
  out.verified = true;
  return out;
}

SymmetryReport symmetric_implies_semisimple(const LatticePolytope& P) {
  require(is_reflexive(P), ErrorKind::NotReflexive, "symmetry check: not reflexive");
  SymmetryReport rep;
  RootSet rs = roots_of_reflexive(P);
  rep.symmetric = is_symmetric(P);
  rep.semisimple = rs.semisimple();
  if (rep.symmetric)
    theorem_check(rep.semisimple, "symmetric reflexive polytope must be semisimple");

  if (!rs.u.empty()) {
    // the face cut out by all facets carrying unipotent roots
    std::vector<IntVec> face_points;
    for (const auto& m : lattice_points(P)) {
      bool on_all = true;
      for (int f : rs.eta_u)
        if (dot(P.facets()[f].normal, m) != -P.facets()[f].level) {
          on_all = false;
          break;
        }
      if (on_all) face_points.push_back(m);
    }
    theorem_check(!face_points.empty(), "unipotent facet intersection is empty");
    std::vector<IntVec> face_verts;
    for (const auto& v : P.vertices()) {
      bool on_all = true;
      for (int f : rs.eta_u)
        if (dot(P.facets()[f].normal, v) != -P.facets()[f].level) {
          on_all = false;
          break;
        }
      if (on_all) face_verts.push_back(v);
    }
    theorem_check(!face_verts.empty(), "unipotent facet intersection has no vertices");
    AffineBasis ab = affine_lattice_basis(face_verts);
    rep.face_codim = P.dim() - static_cast<int>(ab.basis.size());
    theorem_check(rep.face_codim == static_cast<int>(rs.eta_u.size()),
                  "codim of the unipotent face differs from |F(U)|");

    IntVec sum(P.dim(), Int(0));
    for (const auto& m : face_points) sum = add(sum, m);
    rep.fixpoint_sum = sum;
    theorem_check(!is_zero(sum), "unipotent face lattice-point sum is zero");
    for (const auto& a : lattice_automorphisms(P))
      theorem_check(a.apply(sum) == sum, "face sum is not a fixpoint of Aut_M(P)");
  }
  return rep;
}

Classify2D classify_2d(const LatticePolytope& P) {
  require(P.dim() == 2, ErrorKind::DimensionMismatch, "classify_2d: dimension must be 2");
  require(is_reflexive(P), ErrorKind::NotReflexive, "classify_2d: not reflexive");
  Classify2D rep;
  RootSet rs = roots_of_reflexive(P);
  rep.semisimple = rs.semisimple();
  rep.smooth = fano_class(P).smooth;
  rep.iso_e2_dual = lattice_isomorphism(P, simplex_ed_dual(2)).has_value();
  rep.iso_e1_squared = lattice_isomorphism(P, cube(2)).has_value();
  theorem_check(rep.semisimple == (rep.smooth || rep.iso_e2_dual || rep.iso_e1_squared),
                "2d classification corollary fails");

  LatticePolytope Pd = dual(P).as_lattice();
  rep.dual_semisimple = roots_of_reflexive(Pd).semisimple();
  rep.dual_smooth = fano_class(Pd).smooth;
  theorem_check((rep.semisimple || rep.dual_semisimple) == (rep.smooth || rep.dual_smooth),
                "dual form of the 2d classification fails");
  return rep;
}

}  // namespace demroot
