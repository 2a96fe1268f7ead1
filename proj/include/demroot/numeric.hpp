/**
 * Exact scalar and vector arithmetic shared by the whole library.
 *
 * Every quantity in this project is an arbitrary-precision integer or a
 * reduced rational; there is no floating point anywhere.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace demroot {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

enum class ErrorKind {
  ZeroVector,
  NotSquare,
  NotFullDimensional,
  OriginNotInterior,
  NotReflexive,
  RaysNotSpanning,
  NotARoot,
  PreconditionFailed,
  InvalidSelection,
  ConstructionFailed,
  InputNotOnBoundary,
  DimensionMismatch,
  BasisNotSaturated,
  NotCentrallySymmetric,
  ParseError,
  RaggedMatrix,
  TheoremViolation,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

const char* error_kind_name(ErrorKind k);

/// Stable CLI contract: 2 = parse, 3 = precondition, 4 = theorem violation.
int exit_code(ErrorKind k);

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool ok, ErrorKind k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

/// A proven statement would be falsified; must never fire.
inline void theorem_check(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::TheoremViolation, "theorem violation: " + msg);
}

// ---- vector helpers ----

Int dot(const IntVec& a, const IntVec& b);
Rat dot_qz(const IntVec& a, const RatVec& x);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec neg(const IntVec& a);
IntVec scale(const Int& k, const IntVec& a);

bool is_zero(const IntVec& a);
bool is_zero(const RatVec& a);

RatVec to_rat(const IntVec& a);
/// Exact conversion; fails with PreconditionFailed if any entry is non-integral.
IntVec to_int(const RatVec& a);
bool all_integral(const RatVec& a);

/// Reduced rational n/d with d > 0.
Rat make_rat(const Int& n, const Int& d);
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

std::string to_string(const IntVec& a);
std::string to_string(const RatVec& a);

}  // namespace demroot
