#include <map>

#include "demroot/polytope.hpp"

namespace demroot {

namespace {

// Simplices as explicit vertex tuples. Apex rule: cone from 0 when interior,
// else from the first stored vertex; facets are triangulated recursively in
// their own affine lattice coordinates.
void triangulate_into(const LatticePolytope& P, std::vector<std::vector<IntVec>>* out) {
  const int d = P.dim();
  const auto& V = P.vertices();
  if (static_cast<int>(V.size()) == d + 1) {
    out->push_back(V);
    return;
  }
  IntVec apex(d, Int(0));
  bool apex_is_vertex = false;
  if (!P.origin_interior()) {
    apex = V[0];
    apex_is_vertex = true;
  }
  for (const auto& f : P.facets()) {
    if (apex_is_vertex && dot(f.normal, apex) == -f.level) continue;  // apex on facet
    std::vector<IntVec> fverts;
    for (int i : f.verts) fverts.push_back(V[i]);
    if (static_cast<int>(fverts.size()) == d) {
      auto s = fverts;
      s.push_back(apex);
      out->push_back(std::move(s));
      continue;
    }
    AffineBasis ab = affine_lattice_basis(fverts);
    std::map<IntVec, IntVec> back;  // facet-chart coords -> ambient vertex
    std::vector<IntVec> coords;
    for (const auto& v : fverts) {
      auto c = affine_coordinates(ab, v);
      require(c.has_value(), ErrorKind::PreconditionFailed, "facet chart failure");
      back[*c] = v;
      coords.push_back(std::move(*c));
    }
    LatticePolytope F = LatticePolytope::hull(coords);
    std::vector<std::vector<IntVec>> sub;
    triangulate_into(F, &sub);
    for (const auto& s : sub) {
      std::vector<IntVec> amb;
      for (const auto& c : s) amb.push_back(back.at(c));
      amb.push_back(apex);
      out->push_back(std::move(amb));
    }
  }
}

Rat simplex_volume(const std::vector<IntVec>& s) {
  const int d = static_cast<int>(s.size()) - 1;
  IntMat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = s[i + 1][j] - s[0][j];
  Int det = abs(exact_determinant(m));
  Int fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return make_rat(det, fact);
}

}  // namespace

Rat volume(const LatticePolytope& P) {
  std::vector<std::vector<IntVec>> tri;
  triangulate_into(P, &tri);
  Rat vol = 0;
  for (const auto& s : tri) vol += simplex_volume(s);
  return vol;
}

RatVec barycenter(const LatticePolytope& P) {
  const int d = P.dim();
  std::vector<std::vector<IntVec>> tri;
  triangulate_into(P, &tri);
  Rat vol = 0;
  RatVec acc(d, Rat(0));
  for (const auto& s : tri) {
    Rat v = simplex_volume(s);
    if (v == 0) continue;
    vol += v;
    for (int j = 0; j < d; ++j) {
      Int coord_sum = 0;
      for (const auto& p : s) coord_sum += p[j];
      acc[j] += v * make_rat(coord_sum, Int(d + 1));
    }
  }
  require(vol > 0, ErrorKind::PreconditionFailed, "barycenter: degenerate polytope");
  for (int j = 0; j < d; ++j) acc[j] /= vol;
  return acc;
}

Rat relative_volume(const std::vector<IntVec>& face_vertices) {
  require(!face_vertices.empty(), ErrorKind::PreconditionFailed, "relative_volume: empty face");
  AffineBasis ab = affine_lattice_basis(face_vertices);
  if (ab.basis.empty()) return Rat(1);  // rvol of a point is 1 by convention
  std::vector<IntVec> coords;
  for (const auto& v : face_vertices) {
    auto c = affine_coordinates(ab, v);
    require(c.has_value(), ErrorKind::PreconditionFailed, "relative_volume: chart failure");
    coords.push_back(std::move(*c));
  }
  return volume(LatticePolytope::hull(coords));
}

}  // namespace demroot
