/**
 * Exact integer and rational linear algebra: Smith normal form with
 * transformation matrices, fraction-free determinants, saturated affine
 * lattice bases, and dense rational elimination.
 */
#pragma once

#include <optional>
#include <utility>

#include "demroot/numeric.hpp"

namespace demroot {

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  IntVec row(int i) const;
  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows);

  bool operator==(const IntMat& o) const = default;
};

IntMat mul(const IntMat& A, const IntMat& B);
IntVec mul(const IntMat& A, const IntVec& x);
IntMat transpose(const IntMat& A);

/// (gcd, v/gcd) with gcd >= 1; the sign pattern of v is preserved.
std::pair<Int, IntVec> primitive_part(const IntVec& v);

/// Exact determinant by Bareiss fraction-free elimination.
Int exact_determinant(const IntMat& A);

struct SmithNormalForm {
  IntMat d;     // diagonal, d1 | d2 | ..., entries >= 0
  IntMat u;     // unimodular, u * a * v = d
  IntMat v;     // unimodular
  IntMat vinv;  // v^(-1), maintained alongside v
  int rank = 0;
  std::vector<Int> divisors() const;  // the nonzero diagonal entries
};

SmithNormalForm smith_normal_form(const IntMat& A);

struct AffineBasis {
  IntVec origin;
  std::vector<IntVec> basis;  // Z-basis of (aff(points) cap Z^d) - origin
};

AffineBasis affine_lattice_basis(const std::vector<IntVec>& points);

/// Coordinates of p relative to an affine basis; nullopt if p is not in
/// origin + Z-span(basis).
std::optional<IntVec> affine_coordinates(const AffineBasis& ab, const IntVec& p);

// ---- rational elimination ----

struct RatMat {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

int rat_rank(RatMat m);

/// Rank of the span of a family of integer vectors.
int rank_of(const std::vector<IntVec>& vecs);

/// Unique solution of a square system A x = b; nullopt if A is singular.
std::optional<RatVec> solve_square(const RatMat& A, const RatVec& b);

std::optional<RatMat> rat_inverse(const RatMat& A);

RatMat rat_from_int(const IntMat& A);
RatVec mul(const RatMat& A, const RatVec& x);
RatMat mul(const RatMat& A, const RatMat& B);

/// Primitive integer generator of the 1-dimensional kernel of an
/// (n x d) rational matrix of rank d-1; nullopt if the kernel dimension
/// differs from one.
std::optional<IntVec> kernel_primitive(const RatMat& A);

/// Rational coordinates of x in the row span of basis; nullopt if x is
/// outside the span. basis must have full row rank.
std::optional<RatVec> span_coordinates(const std::vector<IntVec>& basis, const RatVec& x);

}  // namespace demroot
