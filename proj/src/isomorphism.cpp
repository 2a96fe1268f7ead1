#include <algorithm>

#include "demroot/polytope.hpp"

namespace demroot {

namespace {

// Pairing of a vertex against every facet (value, level) is preserved by any
// unimodular map between polytopes, which makes it a cheap assignment filter.
std::vector<std::pair<Int, Int>> pairing_fingerprint(const LatticePolytope& P, const IntVec& v) {
  std::vector<std::pair<Int, Int>> fp;
  for (const auto& f : P.facets()) fp.emplace_back(dot(f.normal, v), f.level);
  std::sort(fp.begin(), fp.end());
  return fp;
}

struct IsoSearch {
  const LatticePolytope& p;
  const LatticePolytope& q;
  std::vector<int> anchor;                 // indices of d linearly independent P-vertices
  RatMat anchor_inv;                       // inverse of the anchor column matrix
  std::vector<std::vector<int>> cands;     // per slot, candidate Q-vertex indices
  std::vector<int> chosen;
  bool collect_all = false;
  std::vector<UnimodularMap> found;

  bool candidate_map_works(const IntMat& A) const {
    Int det = exact_determinant(A);
    if (det != 1 && det != -1) return false;
    std::vector<IntVec> image;
    for (const auto& v : p.vertices()) image.push_back(mul(A, v));
    std::sort(image.begin(), image.end());
    return image == q.vertices();
  }

  bool rec(size_t slot) {
    const int d = p.dim();
    if (slot == anchor.size()) {
      RatMat W(d, d);
      for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) W.at(i, j) = Rat(q.vertices()[chosen[j]][i]);
      RatMat M = mul(W, anchor_inv);
      IntMat A(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          if (M.at(i, j).get_den() != 1) return false;
          A.at(i, j) = M.at(i, j).get_num();
        }
      if (!candidate_map_works(A)) return false;
      found.push_back({A});
      return !collect_all;
    }
    for (int c : cands[slot]) {
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      chosen.push_back(c);
      std::vector<IntVec> prefix;
      for (int idx : chosen) prefix.push_back(q.vertices()[idx]);
      if (rank_of(prefix) == static_cast<int>(chosen.size())) {
        if (rec(slot + 1)) return true;
      }
      chosen.pop_back();
    }
    return false;
  }
};

std::vector<UnimodularMap> isomorphism_search(const LatticePolytope& P, const LatticePolytope& Q,
                                              bool collect_all) {
  require(P.dim() == Q.dim(), ErrorKind::DimensionMismatch, "isomorphism: dimension mismatch");
  if (P.vertices().size() != Q.vertices().size() || P.facets().size() != Q.facets().size())
    return {};

  const int d = P.dim();
  // d linearly independent vertices of P, greedy in storage order
  std::vector<int> anchor;
  {
    std::vector<IntVec> picked;
    for (int i = 0; i < static_cast<int>(P.vertices().size()) && static_cast<int>(anchor.size()) < d;
         ++i) {
      picked.push_back(P.vertices()[i]);
      if (rank_of(picked) == static_cast<int>(picked.size()))
        anchor.push_back(i);
      else
        picked.pop_back();
    }
    require(static_cast<int>(anchor.size()) == d, ErrorKind::PreconditionFailed,
            "isomorphism: vertices do not span");
  }

  IsoSearch s{P, Q, anchor, RatMat(), {}, {}, collect_all, {}};
  {
    RatMat V(d, d);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) V.at(i, j) = Rat(P.vertices()[anchor[j]][i]);
    auto inv = rat_inverse(V);
    require(inv.has_value(), ErrorKind::PreconditionFailed, "isomorphism: singular anchor");
    s.anchor_inv = std::move(*inv);
  }
  for (int idx : anchor) {
    auto fp = pairing_fingerprint(P, P.vertices()[idx]);
    std::vector<int> c;
    for (int j = 0; j < static_cast<int>(Q.vertices().size()); ++j)
      if (pairing_fingerprint(Q, Q.vertices()[j]) == fp) c.push_back(j);
    if (c.empty()) return {};
    s.cands.push_back(std::move(c));
  }
  s.rec(0);
  return std::move(s.found);
}

}  // namespace

std::optional<UnimodularMap> lattice_isomorphism(const LatticePolytope& P,
                                                 const LatticePolytope& Q) {
  auto maps = isomorphism_search(P, Q, false);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

std::vector<UnimodularMap> lattice_automorphisms(const LatticePolytope& P) {
  return isomorphism_search(P, P, true);
}

bool is_symmetric(const LatticePolytope& P) {
  require(P.origin_interior(), ErrorKind::OriginNotInterior, "is_symmetric: origin not interior");
  auto autos = lattice_automorphisms(P);
  const int d = P.dim();
  // common fixed subspace = kernel of the stacked (A - I)
  RatMat m(static_cast<int>(autos.size()) * d, d);
  int r = 0;
  for (const auto& a : autos) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(r + i, j) = Rat(a.mat.at(i, j) - Int(i == j ? 1 : 0));
    r += d;
  }
  return rat_rank(std::move(m)) == d;
}

std::vector<RatVec> hrep_vertices(const std::vector<IntVec>& normals,
                                  const std::vector<Rat>& levels, int dim) {
  const int n = static_cast<int>(normals.size());
  std::vector<RatVec> verts;
  if (n < dim) return verts;
  std::vector<int> comb(dim);
  for (int i = 0; i < dim; ++i) comb[i] = i;
  auto next = [&]() {
    for (int i = dim - 1; i >= 0; --i)
      if (comb[i] < n - dim + i) {
        ++comb[i];
        for (int j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
        return true;
      }
    return false;
  };
  do {
    RatMat A(dim, dim);
    RatVec b(dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) A.at(i, j) = Rat(normals[comb[i]][j]);
      b[i] = -levels[comb[i]];
    }
    auto x = solve_square(A, b);
    if (!x) continue;
    bool feasible = true;
    for (int f = 0; f < n && feasible; ++f)
      if (dot_qz(normals[f], *x) < -levels[f]) feasible = false;
    if (feasible) verts.push_back(std::move(*x));
  } while (next());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

LatticePolytope intersect_with_subspace(const LatticePolytope& P,
                                        const std::vector<IntVec>& basis) {
  require(!basis.empty(), ErrorKind::PreconditionFailed, "intersect: empty basis");
  const int k = static_cast<int>(basis.size());
  require(rank_of(basis) == k, ErrorKind::PreconditionFailed, "intersect: dependent basis");
  {
    SmithNormalForm snf = smith_normal_form(IntMat::from_rows(basis));
    for (const Int& e : snf.divisors())
      require(e == 1, ErrorKind::BasisNotSaturated,
              "basis does not generate lin(basis) cap Z^d");
  }
  std::vector<IntVec> normals;
  std::vector<Rat> levels;
  for (const auto& f : P.facets()) {
    IntVec a(k);
    for (int i = 0; i < k; ++i) a[i] = dot(f.normal, basis[i]);
    if (is_zero(a)) {
      require(f.level >= 0, ErrorKind::PreconditionFailed, "intersect: empty intersection");
      continue;
    }
    normals.push_back(std::move(a));
    levels.push_back(Rat(f.level));
  }
  auto verts = hrep_vertices(normals, levels, k);
  require(!verts.empty(), ErrorKind::PreconditionFailed, "intersect: empty intersection");
  RationalPolytope Q = RationalPolytope::hull(verts);
  require(Q.is_lattice(), ErrorKind::PreconditionFailed,
          "intersect: intersection is not a lattice polytope");
  return Q.as_lattice();
}

}  // namespace demroot
