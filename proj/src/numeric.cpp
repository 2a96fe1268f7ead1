#include "demroot/numeric.hpp"

#include <sstream>

namespace demroot {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::OriginNotInterior: return "OriginNotInterior";
    case ErrorKind::NotReflexive: return "NotReflexive";
    case ErrorKind::RaysNotSpanning: return "RaysNotSpanning";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::InvalidSelection: return "InvalidSelection";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::InputNotOnBoundary: return "InputNotOnBoundary";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BasisNotSaturated: return "BasisNotSaturated";
    case ErrorKind::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RaggedMatrix: return "RaggedMatrix";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::RaggedMatrix:
      return 2;
    case ErrorKind::TheoremViolation:
    case ErrorKind::ConstructionFailed:
      return 4;
    default:
      return 3;
  }
}

Int dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), ErrorKind::DimensionMismatch, "dot: size mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_qz(const IntVec& a, const RatVec& x) {
  require(a.size() == x.size(), ErrorKind::DimensionMismatch, "dot_qz: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVec scale(const Int& k, const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool is_zero(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

RatVec to_rat(const IntVec& a) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

bool all_integral(const RatVec& a) {
  for (const Rat& x : a)
    if (x.get_den() != 1) return false;
  return true;
}

IntVec to_int(const RatVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    require(a[i].get_den() == 1, ErrorKind::PreconditionFailed,
            "to_int: non-integral entry " + a[i].get_str());
    r[i] = a[i].get_num();
  }
  return r;
}

Rat make_rat(const Int& n, const Int& d) {
  require(d != 0, ErrorKind::PreconditionFailed, "make_rat: zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const IntVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i].get_str();
  }
  os << ")";
  return os.str();
}

std::string to_string(const RatVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace demroot
