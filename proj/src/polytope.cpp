#include <omp.h>

#include <algorithm>

#include "demroot/polytope.hpp"
#include "demroot/runtime.hpp"

namespace demroot {

namespace runtime {

namespace {
int g_jobs = 1;
}

int jobs() { return g_jobs; }

void set_jobs(int n) { g_jobs = n < 1 ? 1 : n; }

}  // namespace runtime

namespace {

// odometer over [lo, hi], last coordinate fastest: ascending lex order
bool advance(IntVec& x, const IntVec& lo, const IntVec& hi) {
  for (int i = static_cast<int>(x.size()) - 1; i >= 0; --i) {
    if (x[i] < hi[i]) {
      ++x[i];
      for (size_t j = i + 1; j < x.size(); ++j) x[j] = lo[j];
      return true;
    }
  }
  return false;
}

bool satisfies(const std::vector<IntVec>& normals, const std::vector<Int>& levels,
               const IntVec& p) {
  for (size_t f = 0; f < normals.size(); ++f)
    if (dot(normals[f], p) < -levels[f]) return false;
  return true;
}

IntVec decode(const Int& index, const IntVec& lo, const IntVec& hi) {
  const int d = static_cast<int>(lo.size());
  IntVec x(d);
  Int rest = index;
  for (int i = d - 1; i >= 0; --i) {
    Int w = hi[i] - lo[i] + 1;
    Int digit;
    mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), w.get_mpz_t());
    x[i] = lo[i] + digit;
  }
  return x;
}

}  // namespace

std::vector<IntVec> lattice_points_hrep(const std::vector<IntVec>& normals,
                                        const std::vector<Int>& levels, const IntVec& lo,
                                        const IntVec& hi, bool parallel) {
  const int d = static_cast<int>(lo.size());
  std::vector<IntVec> out;
  for (int i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;

  Int total = 1;
  for (int i = 0; i < d; ++i) total *= hi[i] - lo[i] + 1;

  const int nthreads = runtime::jobs();
  if (!parallel || nthreads <= 1 || total <= 1024 || !total.fits_slong_p()) {
    // serial reference path
    IntVec x = lo;
    do {
      if (satisfies(normals, levels, x)) out.push_back(x);
    } while (advance(x, lo, hi));
    return out;
  }

  const long n = total.get_si();
  const long nchunks = std::min<long>(n, static_cast<long>(nthreads) * 16);
  std::vector<std::vector<IntVec>> chunk_out(nchunks);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (long c = 0; c < nchunks; ++c) {
    const long beg = n / nchunks * c + std::min<long>(c, n % nchunks);
    const long end = beg + n / nchunks + (c < n % nchunks ? 1 : 0);
    if (beg >= end) continue;
    IntVec x = decode(Int(beg), lo, hi);
    auto& local = chunk_out[c];
    for (long i = beg; i < end; ++i) {
      if (satisfies(normals, levels, x)) local.push_back(x);
      if (i + 1 < end) advance(x, lo, hi);
    }
  }
  for (auto& part : chunk_out)
    for (auto& p : part) out.push_back(std::move(p));
  return out;
}

namespace {

std::vector<IntVec> points_of(const LatticePolytope& P, bool parallel) {
  const int d = P.dim();
  IntVec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = P.vertices()[0][i];
    hi[i] = P.vertices()[0][i];
  }
  for (const auto& v : P.vertices())
    for (int i = 0; i < d; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  std::vector<IntVec> normals;
  std::vector<Int> levels;
  for (const auto& f : P.facets()) {
    normals.push_back(f.normal);
    levels.push_back(f.level);
  }
  return lattice_points_hrep(normals, levels, lo, hi, parallel);
}

}  // namespace

std::vector<IntVec> lattice_points(const LatticePolytope& P) { return points_of(P, true); }

std::vector<IntVec> lattice_points_serial(const LatticePolytope& P) { return points_of(P, false); }

std::vector<IntVec> lattice_points(const RationalPolytope& P) {
  const int d = P.dim();
  IntVec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rat mn = P.vertices()[0][i], mx = P.vertices()[0][i];
    for (const auto& v : P.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
  }
  std::vector<IntVec> out;
  for (int i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;
  IntVec x = lo;
  do {
    bool inside = true;
    for (const auto& f : P.facets())
      if (Rat(dot(f.normal, x)) < -f.level) {
        inside = false;
        break;
      }
    if (inside) out.push_back(x);
  } while (advance(x, lo, hi));
  return out;
}

std::vector<IntVec> interior_lattice_points(const LatticePolytope& P) {
  std::vector<IntVec> out;
  for (auto& p : lattice_points(P))
    if (P.facets_through(p).empty()) out.push_back(std::move(p));
  return out;
}

std::vector<IntVec> facet_lattice_points(const LatticePolytope& P, int facet) {
  const auto& f = P.facets()[facet];
  std::vector<IntVec> out;
  for (auto& p : lattice_points(P))
    if (dot(f.normal, p) == -f.level) out.push_back(std::move(p));
  return out;
}

std::vector<IntVec> facet_relint_points(const LatticePolytope& P, int facet) {
  std::vector<IntVec> out;
  for (auto& p : facet_lattice_points(P, facet))
    if (P.facets_through(p).size() == 1) out.push_back(std::move(p));
  return out;
}

// ---- products and sums ----

LatticePolytope product(const LatticePolytope& A, const LatticePolytope& B) {
  const int da = A.dim(), db = B.dim();
  std::vector<IntVec> verts;
  for (const auto& a : A.vertices())
    for (const auto& b : B.vertices()) {
      IntVec v = a;
      v.insert(v.end(), b.begin(), b.end());
      verts.push_back(std::move(v));
    }
  std::vector<std::pair<IntVec, Int>> facets;
  for (const auto& f : A.facets()) {
    IntVec u = f.normal;
    u.resize(da + db, Int(0));
    facets.emplace_back(std::move(u), f.level);
  }
  for (const auto& f : B.facets()) {
    IntVec u(da, Int(0));
    u.insert(u.end(), f.normal.begin(), f.normal.end());
    facets.emplace_back(std::move(u), f.level);
  }
  return LatticePolytope::from_vertices_and_facets(std::move(verts), std::move(facets));
}

LatticePolytope free_sum(const LatticePolytope& A, const LatticePolytope& B) {
  require(A.origin_interior() && B.origin_interior(), ErrorKind::OriginNotInterior,
          "free_sum: factors need 0 in the interior");
  const int da = A.dim(), db = B.dim();
  std::vector<IntVec> pts;
  for (const auto& a : A.vertices()) {
    IntVec v = a;
    v.resize(da + db, Int(0));
    pts.push_back(std::move(v));
  }
  for (const auto& b : B.vertices()) {
    IntVec v(da, Int(0));
    v.insert(v.end(), b.begin(), b.end());
    pts.push_back(std::move(v));
  }
  return LatticePolytope::hull(pts);
}

// ---- Fano classes ----

FanoClass fano_class(const LatticePolytope& P) {
  require(P.origin_interior(), ErrorKind::OriginNotInterior, "fano_class: origin not interior");
  FanoClass fc;
  auto inner = interior_lattice_points(P);
  fc.canonical = inner.size() == 1 && is_zero(inner[0]);

  auto pts = lattice_points(P);
  fc.terminal = true;
  for (const auto& p : pts) {
    if (is_zero(p)) continue;
    if (!std::binary_search(P.vertices().begin(), P.vertices().end(), p)) {
      fc.terminal = false;
      break;
    }
  }

  fc.smooth = true;
  for (const auto& f : P.facets()) {
    if (static_cast<int>(f.verts.size()) != P.dim()) {
      fc.smooth = false;
      break;
    }
    std::vector<IntVec> rows;
    for (int i : f.verts) rows.push_back(P.vertices()[i]);
    Int det = exact_determinant(IntMat::from_rows(rows));
    if (det != 1 && det != -1) {
      fc.smooth = false;
      break;
    }
  }
  return fc;
}

// ---- standard constructions ----

LatticePolytope segment_e1() { return cube(1); }

LatticePolytope cube(int d) {
  require(d >= 1, ErrorKind::PreconditionFailed, "cube: dim >= 1");
  std::vector<IntVec> verts;
  for (long mask = 0; mask < (1L << d); ++mask) {
    IntVec v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i & 1) ? 1 : -1;
    verts.push_back(std::move(v));
  }
  std::vector<std::pair<IntVec, Int>> facets;
  for (int i = 0; i < d; ++i)
    for (int s : {-1, 1}) {
      IntVec u(d, Int(0));
      u[i] = s;
      facets.emplace_back(std::move(u), Int(1));
    }
  return LatticePolytope::from_vertices_and_facets(std::move(verts), std::move(facets));
}

LatticePolytope cross_polytope(int d) {
  require(d >= 1, ErrorKind::PreconditionFailed, "cross_polytope: dim >= 1");
  std::vector<IntVec> verts;
  for (int i = 0; i < d; ++i)
    for (int s : {-1, 1}) {
      IntVec v(d, Int(0));
      v[i] = s;
      verts.push_back(std::move(v));
    }
  std::vector<std::pair<IntVec, Int>> facets;
  for (long mask = 0; mask < (1L << d); ++mask) {
    IntVec u(d);
    for (int i = 0; i < d; ++i) u[i] = (mask >> i & 1) ? 1 : -1;
    facets.emplace_back(std::move(u), Int(1));
  }
  return LatticePolytope::from_vertices_and_facets(std::move(verts), std::move(facets));
}

LatticePolytope simplex_ed(int d) {
  std::vector<IntVec> pts;
  for (int i = 0; i < d; ++i) {
    IntVec v(d, Int(0));
    v[i] = 1;
    pts.push_back(std::move(v));
  }
  pts.emplace_back(d, Int(-1));
  return LatticePolytope::hull(pts);
}

LatticePolytope simplex_ed_dual(int d) {
  std::vector<IntVec> pts;
  pts.emplace_back(d, Int(-1));
  for (int i = 0; i < d; ++i) {
    IntVec v(d, Int(-1));
    v[i] = d;
    pts.push_back(std::move(v));
  }
  return LatticePolytope::hull(pts);
}

LatticePolytope apply(const UnimodularMap& m, const LatticePolytope& P) {
  std::vector<IntVec> verts;
  for (const auto& v : P.vertices()) verts.push_back(m.apply(v));
  return LatticePolytope::hull(verts);
}

}  // namespace demroot
