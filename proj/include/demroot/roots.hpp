/**
 * Demazure roots of a complete fan / reflexive polytope: enumeration, the
 * semisimple/unipotent partition, class-group degree data, orthogonal root
 * families and the boundary partial-addition law.
 */
#pragma once

#include "demroot/polytope.hpp"

namespace demroot {

struct RaySet {
  int dim = 0;
  std::vector<IntVec> generators;  // primitive, pairwise distinct, ascending lex

  /// Validates primitivity and distinctness; RaysNotSpanning is reported by
  /// compute_roots, which needs the spanning property anyway.
  static RaySet from_generators(std::vector<IntVec> gens);
  /// Primitive generators of the normal fan of P (the facet normals).
  static RaySet normal_fan_rays(const LatticePolytope& P);

  int index_of(const IntVec& g) const;  // -1 when absent
  bool centrally_symmetric() const;
};

enum class RootKind { S1, S2, U1, U2 };
const char* root_kind_name(RootKind k);

struct Root {
  IntVec m;
  int eta = -1;  // index of the unique ray pairing to -1
  RootKind kind = RootKind::U1;
};

struct RootSet {
  RaySet rays;
  std::vector<Root> all;  // ascending lex by m

  // index lists into `all`, ascending
  std::vector<int> s, u, s1, s2, u1, u2;
  // ray-index sets, ascending
  std::vector<int> eta_r, eta_s, eta_u, eta_s1, eta_s2, eta_u1, eta_u2;

  bool semisimple() const { return u.empty(); }
  int find(const IntVec& m) const;
  const Root& root_of(const IntVec& m) const;  // NotARoot when absent
  bool is_root(const IntVec& m) const { return find(m) >= 0; }
  const IntVec& eta_vec(const Root& r) const { return rays.generators[r.eta]; }
  const IntVec& eta_vec(const IntVec& m) const { return eta_vec(root_of(m)); }
  int span_dim(const std::vector<int>& idx) const;  // dim lin of those roots
};

/// Lattice points of {m : <v,m> >= -1 for all rays v} carrying exactly one
/// pairing value -1. RaysNotSpanning when that region is unbounded.
RootSet compute_roots(const RaySet& rays);

/// Roots of a reflexive polytope as relative-interior facet lattice points;
/// checked against compute_roots on the vertices of P* (dual-path equality).
RootSet roots_of_reflexive(const LatticePolytope& P);

bool orthogonal(const RootSet& rs, const IntVec& v, const IntVec& w);
bool equivalent(const RootSet& rs, const IntVec& v, const IntVec& w);

/// Partial addition: for v != -w with <eta_v, w> > 0 returns the root v + w,
/// asserting <eta_w, v> = 0, eta_{v+w} = eta_w and the semisimplicity rule.
Root orthogonalize(const RootSet& rs, const IntVec& v, const IntVec& w);

struct DegreeClassData {
  // class group Cl = Z^free_rank (+) Z/torsion_i, presented by the ray matrix
  std::vector<Int> torsion;
  int free_rank = 0;
  std::vector<IntVec> degrees;  // per ray: torsion components, then free ones

  std::vector<std::vector<int>> classes;      // Y_1..Y_s as sorted ray-index lists
  std::vector<long> monomial_counts;          // |M_i| per class (0 outside p..r)
  int p = 0, q = 0, r = 0, s = 0;
  std::vector<Int> class_sizes;               // c_i = |Y_i| - 1 for i < q
};

/// Degrees in coker(M -> Z^rays) via Smith normal form, the Y-partition with
/// markers p,q,r,s, and monomial class sizes recovered from the unipotent
/// roots. All counting identities are asserted against the root partition.
DegreeClassData cox_classes(const RaySet& rays, const RootSet& rs);

struct RootBasis {
  std::vector<IntVec> roots;               // pairwise orthogonal
  std::vector<std::vector<int>> classes;   // partition by equivalence, indices into roots
  std::vector<Int> class_sizes;
  bool z_basis = false;                    // Z-basis of lin(B) cap M, verified
};

struct BasisSelection {
  // (class index i < q, chosen subset K_i of Y_i with |K_i| >= 2)
  std::vector<std::pair<int, std::vector<int>>> picks;
};

/// Root basis from ordered variable pairs with a fixed second element per
/// class; default selection is I = {1..q}, K_i = Y_i.
RootBasis build_root_basis(const RootSet& rs, const DegreeClassData& dcd,
                           const BasisSelection* selection = nullptr);

struct OrthogonalFamilies {
  // b1: S1-root basis, b2: S2-root basis, b3: U1-facet basis,
  // with <eta_b, b'> = 0 for b in b1+b2, b' in b3; b linearly independent
  std::vector<IntVec> b1, b2, b3;
  // d1: U1-facet basis, d2: U2-facet basis, d3: S1-root basis; pairwise orthogonal
  std::vector<IntVec> d1, d2, d3;
};

/// Greedy construction with partial-addition repairs, verified exhaustively;
/// failure would falsify the existence statement and raises ConstructionFailed.
OrthogonalFamilies orthogonal_families(const RootSet& rs);

struct ZPairResult {
  enum class Case { CommonFacet, Antipodal, Z } kind;
  Int a, b;
  IntVec z;
};

/// Trichotomy for boundary lattice points of a reflexive polytope, with the
/// unique partial sum z = av + bw in the third case.
ZPairResult z_pair(const LatticePolytope& P, const IntVec& v, const IntVec& w);

}  // namespace demroot
