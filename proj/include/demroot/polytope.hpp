/**
 * Exact convex geometry of lattice and rational polytopes: hulls, duality,
 * reflexivity, lattice point enumeration, lattice-normalized volumes,
 * barycenters, products/free sums and unimodular isomorphism.
 *
 * Vertices are stored in ascending lexicographic order and facets in
 * ascending lexicographic order of their primitive inner normals, so equal
 * polytopes compare equal and every derived computation is reproducible.
 */
#pragma once

#include <optional>

#include "demroot/intlinalg.hpp"

namespace demroot {

struct LatticeFacet {
  IntVec normal;            // primitive inner normal u_F
  Int level;                // <u_F, x> >= -level on P, equality on F
  std::vector<int> verts;   // ascending vertex indices
};

struct RationalFacet {
  IntVec normal;
  Rat level;
  std::vector<int> verts;
};

class RationalPolytope;

class LatticePolytope {
 public:
  LatticePolytope() = default;

  /// Hull of a spanning point set; interior/redundant points are dropped.
  static LatticePolytope hull(const std::vector<IntVec>& points);

  /// Trusted vertex/facet data (products, duals); validated exactly.
  static LatticePolytope from_vertices_and_facets(std::vector<IntVec> verts,
                                                  std::vector<std::pair<IntVec, Int>> facets);

  int dim() const { return dim_; }
  const std::vector<IntVec>& vertices() const { return verts_; }
  const std::vector<LatticeFacet>& facets() const { return facets_; }
  const std::vector<std::vector<int>>& vertex_facets() const { return vert_facets_; }

  bool contains(const IntVec& p) const;
  bool strictly_contains(const IntVec& p) const;
  /// Indices of facets whose hyperplane passes through p.
  std::vector<int> facets_through(const IntVec& p) const;
  bool on_boundary(const IntVec& p) const;

  bool origin_interior() const;  // all facet levels positive
  bool centrally_symmetric() const;

  RationalPolytope rational() const;

  bool operator==(const LatticePolytope& o) const;

 private:
  int dim_ = 0;
  std::vector<IntVec> verts_;
  std::vector<LatticeFacet> facets_;
  std::vector<std::vector<int>> vert_facets_;

  void finalize();  // canonical order + incidence + exact validation
  friend class RationalPolytope;
};

class RationalPolytope {
 public:
  RationalPolytope() = default;
  static RationalPolytope hull(const std::vector<RatVec>& points);

  int dim() const { return dim_; }
  const std::vector<RatVec>& vertices() const { return verts_; }
  const std::vector<RationalFacet>& facets() const { return facets_; }

  bool is_lattice() const;
  LatticePolytope as_lattice() const;  // PreconditionFailed if not lattice

 private:
  int dim_ = 0;
  std::vector<RatVec> verts_;
  std::vector<RationalFacet> facets_;

  friend RationalPolytope dual(const LatticePolytope&);
  friend RationalPolytope dual(const RationalPolytope&);
  friend class LatticePolytope;
  void finalize();
};

struct UnimodularMap {
  IntMat mat;  // |det| = 1
  IntVec apply(const IntVec& x) const { return mul(mat, x); }
};

// ---- operations ----

RationalPolytope dual(const LatticePolytope& P);  // pre: 0 interior
RationalPolytope dual(const RationalPolytope& P);

/// True iff every facet level equals one. On success also asserts the
/// canonical-Fano consequence (no interior lattice point besides 0).
bool is_reflexive(const LatticePolytope& P);

/// Exact enumeration, ascending lexicographic order. The parallel kernel
/// splits the bounding box into chunks; the serial routine is the reference
/// implementation the tests compare against.
std::vector<IntVec> lattice_points(const LatticePolytope& P);
std::vector<IntVec> lattice_points_serial(const LatticePolytope& P);
std::vector<IntVec> lattice_points(const RationalPolytope& P);

/// Lattice points of {x : <normals[i], x> >= -levels[i]} inside [lo, hi].
std::vector<IntVec> lattice_points_hrep(const std::vector<IntVec>& normals,
                                        const std::vector<Int>& levels, const IntVec& lo,
                                        const IntVec& hi, bool parallel);

std::vector<IntVec> interior_lattice_points(const LatticePolytope& P);
std::vector<IntVec> facet_lattice_points(const LatticePolytope& P, int facet);
/// Lattice points in the relative interior of a facet (roots, for reflexive P).
std::vector<IntVec> facet_relint_points(const LatticePolytope& P, int facet);

RatVec barycenter(const LatticePolytope& P);
/// Euclidean volume with respect to the ambient lattice Z^dim.
Rat volume(const LatticePolytope& P);

/// Volume of a face normalized so that a fundamental cell of the face's own
/// affine lattice has volume 1; a single point has rvol 1.
Rat relative_volume(const std::vector<IntVec>& face_vertices);

LatticePolytope product(const LatticePolytope& A, const LatticePolytope& B);
/// conv(A x {0}, {0} x B); both factors need 0 in the interior.
LatticePolytope free_sum(const LatticePolytope& A, const LatticePolytope& B);

struct FanoClass {
  bool canonical = false;
  bool terminal = false;
  bool smooth = false;
};
FanoClass fano_class(const LatticePolytope& P);

std::optional<UnimodularMap> lattice_isomorphism(const LatticePolytope& P,
                                                 const LatticePolytope& Q);
std::vector<UnimodularMap> lattice_automorphisms(const LatticePolytope& P);
/// Only 0 is fixed by the full group of lattice automorphisms of P.
bool is_symmetric(const LatticePolytope& P);

LatticePolytope apply(const UnimodularMap& m, const LatticePolytope& P);

/// P cap lin(basis) in basis coordinates. basis must be a Z-basis of
/// lin(basis) cap Z^d (checked; BasisNotSaturated otherwise).
LatticePolytope intersect_with_subspace(const LatticePolytope& P,
                                        const std::vector<IntVec>& basis);

/// Vertex enumeration of a bounded {x : <normals[i], x> >= -levels[i]}.
std::vector<RatVec> hrep_vertices(const std::vector<IntVec>& normals,
                                  const std::vector<Rat>& levels, int dim);

// ---- standard constructions ----

LatticePolytope segment_e1();              // E_1 = [-1,1]
LatticePolytope cube(int d);               // E_1^d
LatticePolytope cross_polytope(int d);     // conv(+-e_i)
LatticePolytope simplex_ed(int d);         // E_d = conv(e_1..e_d, -sum e_i)
LatticePolytope simplex_ed_dual(int d);    // E_d^* = conv(-1, (d+1)e_i - 1)

}  // namespace demroot
