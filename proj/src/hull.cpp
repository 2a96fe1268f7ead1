#include <algorithm>
#include <map>

#include "demroot/polytope.hpp"

namespace demroot {

namespace {

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct CoreFacet {
  IntVec normal;
  Rat level;
  std::vector<int> support;  // indices into the deduplicated point list
};

// Facet enumeration by exhaustive hyperplane search over d-subsets.
// Exact and deterministic; fine at desk scale (few dozen points, dim <= 6).
void core_hull(std::vector<RatVec> pts, int* dim_out, std::vector<RatVec>* verts_out,
               std::vector<CoreFacet>* facets_out) {
  require(!pts.empty(), ErrorKind::PreconditionFailed, "hull: no points");
  const int d = static_cast<int>(pts[0].size());
  for (const auto& p : pts)
    require(static_cast<int>(p.size()) == d, ErrorKind::DimensionMismatch, "hull: mixed dims");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());

  {
    RatMat diffs(n - 1, d);
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < d; ++j) diffs.at(i - 1, j) = pts[i][j] - pts[0][j];
    int rank = (n > 1) ? rat_rank(std::move(diffs)) : 0;
    require(rank == d, ErrorKind::NotFullDimensional,
            "hull: points have affine rank " + std::to_string(rank) + " < " + std::to_string(d));
  }

  std::map<IntVec, Rat> plane;  // primitive inner normal -> level
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  do {
    RatMat rows(d - 1, d);
    for (int i = 1; i < d; ++i)
      for (int j = 0; j < d; ++j) rows.at(i - 1, j) = pts[comb[i]][j] - pts[comb[0]][j];
    auto u = kernel_primitive(rows);
    if (!u) continue;  // affinely dependent subset
    Rat base = dot_qz(*u, pts[comb[0]]);
    bool pos = false, negd = false;
    for (int i = 0; i < n && !(pos && negd); ++i) {
      int s = sgn(dot_qz(*u, pts[i]) - base);
      if (s > 0) pos = true;
      if (s < 0) negd = true;
    }
    if (pos && negd) continue;
    IntVec normal = *u;
    if (pos) {
      // inner normal as computed
    } else {
      normal = neg(normal);
      base = -base;
    }
    plane.emplace(std::move(normal), -base);
  } while (next_combination(comb, n));

  std::vector<CoreFacet> facets;
  std::vector<std::vector<int>> point_facets(n);
  for (const auto& [u, c] : plane) {
    CoreFacet f;
    f.normal = u;
    f.level = c;
    for (int i = 0; i < n; ++i)
      if (dot_qz(u, pts[i]) == -c) {
        f.support.push_back(i);
        point_facets[i].push_back(static_cast<int>(facets.size()));
      }
    facets.push_back(std::move(f));
  }
  require(static_cast<int>(facets.size()) >= d + 1, ErrorKind::PreconditionFailed,
          "hull: inconsistent facet count");

  // a point is a vertex iff its incident facet normals span the whole space
  std::vector<int> vertex_of(n, -1);
  std::vector<RatVec> verts;
  for (int i = 0; i < n; ++i) {
    std::vector<IntVec> normals;
    for (int f : point_facets[i]) normals.push_back(facets[f].normal);
    if (!normals.empty() && rank_of(normals) == d) {
      vertex_of[i] = static_cast<int>(verts.size());
      verts.push_back(pts[i]);
    }
  }
  for (auto& f : facets) {
    std::vector<int> vs;
    for (int i : f.support)
      if (vertex_of[i] >= 0) vs.push_back(vertex_of[i]);
    f.support = std::move(vs);
  }

  *dim_out = d;
  *verts_out = std::move(verts);
  *facets_out = std::move(facets);
}

}  // namespace

// ---- LatticePolytope ----

void LatticePolytope::finalize() {
  const int d = dim_;
  const int n = static_cast<int>(verts_.size());
  require(n >= d + 1, ErrorKind::PreconditionFailed, "polytope: too few vertices");

  std::sort(verts_.begin(), verts_.end());
  require(std::adjacent_find(verts_.begin(), verts_.end()) == verts_.end(),
          ErrorKind::PreconditionFailed, "polytope: duplicate vertices");

  // recompute incidence exactly; facet vertex lists are derived data
  for (auto& f : facets_) {
    require(static_cast<int>(f.normal.size()) == d, ErrorKind::DimensionMismatch,
            "facet normal dimension");
    require(primitive_part(f.normal).first == 1, ErrorKind::PreconditionFailed,
            "facet normal not primitive");
    f.verts.clear();
    for (int i = 0; i < n; ++i) {
      Int val = dot(f.normal, verts_[i]);
      require(val >= -f.level, ErrorKind::PreconditionFailed,
              "vertex outside a declared facet halfspace");
      if (val == -f.level) f.verts.push_back(i);
    }
    std::vector<IntVec> pts;
    for (int i : f.verts) pts.push_back(verts_[i]);
    require(!pts.empty() && rank_of([&] {
              std::vector<IntVec> diffs;
              for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
              return diffs;
            }()) == d - 1,
            ErrorKind::PreconditionFailed, "facet does not span a hyperplane of the polytope");
  }
  std::sort(facets_.begin(), facets_.end(),
            [](const LatticeFacet& a, const LatticeFacet& b) { return a.normal < b.normal; });
  for (size_t i = 1; i < facets_.size(); ++i)
    require(facets_[i].normal != facets_[i - 1].normal, ErrorKind::PreconditionFailed,
            "duplicate facet normal");

  vert_facets_.assign(n, {});
  for (int f = 0; f < static_cast<int>(facets_.size()); ++f)
    for (int i : facets_[f].verts) vert_facets_[i].push_back(f);
  for (int i = 0; i < n; ++i) {
    std::vector<IntVec> normals;
    for (int f : vert_facets_[i]) normals.push_back(facets_[f].normal);
    require(rank_of(normals) == d, ErrorKind::PreconditionFailed,
            "declared vertex is not extreme");
  }
}

LatticePolytope LatticePolytope::hull(const std::vector<IntVec>& points) {
  std::vector<RatVec> rpts;
  rpts.reserve(points.size());
  for (const auto& p : points) rpts.push_back(to_rat(p));
  int d = 0;
  std::vector<RatVec> verts;
  std::vector<CoreFacet> facets;
  core_hull(std::move(rpts), &d, &verts, &facets);

  LatticePolytope P;
  P.dim_ = d;
  for (const auto& v : verts) P.verts_.push_back(to_int(v));
  for (auto& f : facets) {
    require(f.level.get_den() == 1, ErrorKind::PreconditionFailed,
            "lattice hull: non-integral facet level");
    P.facets_.push_back({std::move(f.normal), f.level.get_num(), {}});
  }
  P.finalize();
  return P;
}

LatticePolytope LatticePolytope::from_vertices_and_facets(
    std::vector<IntVec> verts, std::vector<std::pair<IntVec, Int>> facets) {
  LatticePolytope P;
  require(!verts.empty(), ErrorKind::PreconditionFailed, "no vertices");
  P.dim_ = static_cast<int>(verts[0].size());
  P.verts_ = std::move(verts);
  for (auto& [u, c] : facets) P.facets_.push_back({std::move(u), std::move(c), {}});
  P.finalize();
  return P;
}

bool LatticePolytope::contains(const IntVec& p) const {
  for (const auto& f : facets_)
    if (dot(f.normal, p) < -f.level) return false;
  return true;
}

bool LatticePolytope::strictly_contains(const IntVec& p) const {
  for (const auto& f : facets_)
    if (dot(f.normal, p) <= -f.level) return false;
  return true;
}

std::vector<int> LatticePolytope::facets_through(const IntVec& p) const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(facets_.size()); ++f)
    if (dot(facets_[f].normal, p) == -facets_[f].level) out.push_back(f);
  return out;
}

bool LatticePolytope::on_boundary(const IntVec& p) const {
  return contains(p) && !facets_through(p).empty();
}

bool LatticePolytope::origin_interior() const {
  for (const auto& f : facets_)
    if (f.level <= 0) return false;
  return true;
}

bool LatticePolytope::centrally_symmetric() const {
  for (const auto& v : verts_) {
    IntVec m = neg(v);
    if (!std::binary_search(verts_.begin(), verts_.end(), m)) return false;
  }
  return true;
}

RationalPolytope LatticePolytope::rational() const {
  RationalPolytope Q;
  Q.dim_ = dim_;
  for (const auto& v : verts_) Q.verts_.push_back(to_rat(v));
  for (const auto& f : facets_) Q.facets_.push_back({f.normal, Rat(f.level), f.verts});
  return Q;
}

bool LatticePolytope::operator==(const LatticePolytope& o) const {
  if (dim_ != o.dim_ || verts_ != o.verts_ || facets_.size() != o.facets_.size()) return false;
  for (size_t i = 0; i < facets_.size(); ++i)
    if (facets_[i].normal != o.facets_[i].normal || facets_[i].level != o.facets_[i].level)
      return false;
  return true;
}

// ---- RationalPolytope ----

void RationalPolytope::finalize() {
  std::sort(verts_.begin(), verts_.end());
  std::sort(facets_.begin(), facets_.end(),
            [](const RationalFacet& a, const RationalFacet& b) { return a.normal < b.normal; });
  for (auto& f : facets_) {
    f.verts.clear();
    for (int i = 0; i < static_cast<int>(verts_.size()); ++i) {
      Rat val = dot_qz(f.normal, verts_[i]);
      require(val >= -f.level, ErrorKind::PreconditionFailed, "rational facet violated");
      if (val == -f.level) f.verts.push_back(i);
    }
  }
}

RationalPolytope RationalPolytope::hull(const std::vector<RatVec>& points) {
  RationalPolytope Q;
  std::vector<CoreFacet> facets;
  core_hull(points, &Q.dim_, &Q.verts_, &facets);
  for (auto& f : facets) Q.facets_.push_back({std::move(f.normal), std::move(f.level), {}});
  Q.finalize();
  return Q;
}

bool RationalPolytope::is_lattice() const {
  for (const auto& v : verts_)
    if (!all_integral(v)) return false;
  return true;
}

LatticePolytope RationalPolytope::as_lattice() const {
  require(is_lattice(), ErrorKind::PreconditionFailed, "polytope has non-lattice vertices");
  std::vector<IntVec> verts;
  for (const auto& v : verts_) verts.push_back(to_int(v));
  std::vector<std::pair<IntVec, Int>> facets;
  for (const auto& f : facets_) {
    require(f.level.get_den() == 1, ErrorKind::PreconditionFailed, "non-integral level");
    facets.emplace_back(f.normal, f.level.get_num());
  }
  return LatticePolytope::from_vertices_and_facets(std::move(verts), std::move(facets));
}

// ---- duality ----

RationalPolytope dual(const LatticePolytope& P) {
  require(P.origin_interior(), ErrorKind::OriginNotInterior, "dual: origin not interior");
  RationalPolytope Q;
  Q.dim_ = P.dim();
  for (const auto& f : P.facets()) {
    RatVec v(P.dim());
    for (int j = 0; j < P.dim(); ++j) v[j] = make_rat(f.normal[j], f.level);
    Q.verts_.push_back(std::move(v));
  }
  for (const auto& v : P.vertices()) {
    auto [g, p] = primitive_part(v);
    Q.facets_.push_back({p, make_rat(1, g), {}});
  }
  Q.finalize();
  return Q;
}

RationalPolytope dual(const RationalPolytope& P) {
  for (const auto& f : P.facets())
    require(f.level > 0, ErrorKind::OriginNotInterior, "dual: origin not interior");
  RationalPolytope Q;
  Q.dim_ = P.dim();
  for (const auto& f : P.facets()) {
    RatVec v(P.dim());
    for (int j = 0; j < P.dim(); ++j) v[j] = Rat(f.normal[j]) / f.level;
    Q.verts_.push_back(std::move(v));
  }
  for (const auto& v : P.vertices()) {
    Int lcm = 1;
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    IntVec z(v.size());
    for (size_t j = 0; j < v.size(); ++j) {
      Rat q = v[j] * Rat(lcm);
      z[j] = q.get_num();
    }
    auto [g, p] = primitive_part(z);
    Q.facets_.push_back({p, make_rat(lcm, g), {}});
  }
  Q.finalize();
  return Q;
}

bool is_reflexive(const LatticePolytope& P) {
  require(P.origin_interior(), ErrorKind::OriginNotInterior, "is_reflexive: origin not interior");
  for (const auto& f : P.facets())
    if (f.level != 1) return false;
  // Lemma consequence: a reflexive polytope is a canonical Fano polytope
  auto inner = interior_lattice_points(P);
  theorem_check(inner.size() == 1 && is_zero(inner[0]),
                "reflexive polytope with interior lattice points besides 0");
  return true;
}

}  // namespace demroot
