/**
 * Decision procedures and theorem checks: reductivity criteria for fans and
 * reflexive polytopes, dimension bounds, product-of-projective-spaces
 * detection, codimension-one analysis, the semisimple-span intersection, the
 * centrally symmetric decomposition and the reflexive polygon sweep.
 *
 * Every family of equivalent conditions is evaluated independently, one
 * member at a time; any disagreement raises TheoremViolation. The artifact
 * is an instrument for checking the theory, so the redundancy is deliberate.
 */
#pragma once

#include <array>

#include "demroot/roots.hpp"

namespace demroot {

struct AutSummary {
  bool reductive = false;
  Int aut_dim = 0;  // |R| + d
};

AutSummary aut_summary(const RootSet& rs, int d);

struct CriteriaReport {
  // fan level: (a) semisimple, (b) root sum zero, (c) ray pairing sums zero
  bool fan_a = false, fan_b = false, fan_c = false;
  bool ray_sum_zero = false;  // sufficient: sum of all ray generators is 0

  bool has_reflexive = false;
  std::array<bool, 7> equivalent{};  // (a)..(g)
  std::array<bool, 7> sufficient{};  // i..vii
  bool p_smooth = false;             // reported next to vi (no assertion)

  bool reductive = false;
  Int aut_dim = 0;
  bool consistent = true;
};

/// Fan-level part of the main theorem; TheoremViolation must never fire.
CriteriaReport check_fan_criteria(const RaySet& rays, const RootSet& rs);

/// All seven equivalent conditions and seven sufficient conditions for a
/// reflexive polytope, evaluated without shortcuts.
CriteriaReport check_reflexive_criteria(const LatticePolytope& P);

/// [|Y_1|-1, ..., |Y_q|-1] iff d linearly independent semisimple roots exist.
std::optional<std::vector<Int>> detect_product_projective(const RootSet& rs,
                                                          const DegreeClassData& dcd, int d);

struct BoundReport {
  int d = 0;
  long eta_u = 0, eta_r = 0;
  long s_count = 0, r_count = 0;
  int dim_lin_s = 0;
  bool product_of_lines = false;  // |eta(R)| = 2d equality case
  bool projective_space = false;  // |S| = d^2 + d equality case
};

/// Root-count bounds with equality diagnoses; for reflexive input the
/// equality cases are confirmed by explicit lattice isomorphisms.
BoundReport bound_checks(const RootSet& rs, int d, const LatticePolytope* P = nullptr);

struct CodimOneReport {
  bool applicable = false;        // dim lin(S) = d - 1
  bool part1_applicable = false;  // rays beyond eta(S) exist
  std::vector<int> extra_rays;    // Delta(1) \ eta(S)
  bool part2_applicable = false;  // q = 1
};

CodimOneReport codim_one_analysis(const RootSet& rs, const DegreeClassData& dcd);

struct SpanCheck {
  bool applicable = false;
  std::vector<Int> class_sizes;
  LatticePolytope intersection;  // P cap lin(basis), basis coordinates
  bool verified = false;
};

/// Thm: P cap lin(A) is the product of the simplex duals E*_{c_i}; verified
/// by explicit isomorphism plus the proof's vertex description per class.
SpanCheck semisimple_span_check(const LatticePolytope& P, const RootBasis& basis);

struct Decomposition {
  std::optional<std::vector<Int>> projective_factors;
  bool centrally_symmetric = false;
  int split_k = 0;                  // P iso E_1^k x G
  std::optional<LatticePolytope> g;  // absent when G is a point
  std::array<bool, 5> central_equiv{};  // 3^d points; 2d roots; roots on all
                                        // facets; 3^(d-1) per facet; iso cube
};

/// Splits E_1 factors off a centrally symmetric reflexive polytope along
/// facets containing roots (lexicographically first facet each step), checks
/// the count/bound statements and the five equivalent characterizations.
Decomposition central_decompose(const LatticePolytope& P);

struct SymmetryReport {
  bool symmetric = false;
  bool semisimple = false;
  int face_codim = -1;     // codim of the face cut out by the unipotent facets
  IntVec fixpoint_sum;     // sum of its lattice points (nonzero fixpoint)
};

SymmetryReport symmetric_implies_semisimple(const LatticePolytope& P);

struct Classify2D {
  bool semisimple = false;
  bool smooth = false;
  bool iso_e2_dual = false;
  bool iso_e1_squared = false;
  bool dual_semisimple = false;
  bool dual_smooth = false;
};

/// Two-dimensional classification corollary, both directions, plus its dual
/// formulation.
Classify2D classify_2d(const LatticePolytope& P);

/// Brute-force sweep of all lattice polygons in [-box, box]^2 whose unique
/// interior lattice point is the origin, deduplicated to unimodular
/// equivalence classes (canonical edge-adapted form, cross-checked with
/// lattice_isomorphism). Deterministic order.
std::vector<LatticePolytope> enumerate_reflexive_2d(int box = 3);

}  // namespace demroot
