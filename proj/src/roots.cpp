#include <algorithm>
#include <set>

#include "demroot/roots.hpp"

namespace demroot {

const char* root_kind_name(RootKind k) {
  switch (k) {
    case RootKind::S1: return "S1";
    case RootKind::S2: return "S2";
    case RootKind::U1: return "U1";
    case RootKind::U2: return "U2";
  }
  return "?";
}

RaySet RaySet::from_generators(std::vector<IntVec> gens) {
  require(!gens.empty(), ErrorKind::PreconditionFailed, "rays: empty generator set");
  const int d = static_cast<int>(gens[0].size());
  for (const auto& g : gens) {
    require(static_cast<int>(g.size()) == d, ErrorKind::DimensionMismatch, "rays: mixed dims");
    require(!is_zero(g), ErrorKind::PreconditionFailed, "rays: zero generator");
    require(primitive_part(g).first == 1, ErrorKind::PreconditionFailed,
            "rays: generator not primitive: " + to_string(g));
  }
  std::sort(gens.begin(), gens.end());
  require(std::adjacent_find(gens.begin(), gens.end()) == gens.end(),
          ErrorKind::PreconditionFailed, "rays: duplicate generator");
  return RaySet{d, std::move(gens)};
}

RaySet RaySet::normal_fan_rays(const LatticePolytope& P) {
  std::vector<IntVec> gens;
  for (const auto& f : P.facets()) gens.push_back(f.normal);
  return from_generators(std::move(gens));
}

int RaySet::index_of(const IntVec& g) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), g);
  if (it == generators.end() || *it != g) return -1;
  return static_cast<int>(it - generators.begin());
}

bool RaySet::centrally_symmetric() const {
  for (const auto& g : generators)
    if (index_of(neg(g)) < 0) return false;
  return true;
}

int RootSet::find(const IntVec& m) const {
  auto it = std::lower_bound(all.begin(), all.end(), m,
                             [](const Root& r, const IntVec& x) { return r.m < x; });
  if (it == all.end() || it->m != m) return -1;
  return static_cast<int>(it - all.begin());
}

const Root& RootSet::root_of(const IntVec& m) const {
  int i = find(m);
  require(i >= 0, ErrorKind::NotARoot, "not a root: " + to_string(m));
  return all[i];
}

int RootSet::span_dim(const std::vector<int>& idx) const {
  std::vector<IntVec> vecs;
  for (int i : idx) vecs.push_back(all[i].m);
  return rank_of(vecs);
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Partition the enumerated roots: S = R cap -R, S1 = {x in S : eta_x not in
// eta(U)}, U1 = {x in U : eta_x not in eta(S)}.
RootSet finish_rootset(RaySet rays, std::vector<Root> roots) {
  RootSet rs;
  rs.rays = std::move(rays);
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.m < b.m; });
  rs.all = std::move(roots);

  const int n = static_cast<int>(rs.all.size());
  std::vector<bool> sem(n);
  for (int i = 0; i < n; ++i) sem[i] = rs.find(neg(rs.all[i].m)) >= 0;
  std::vector<int> eta_s, eta_u;
  for (int i = 0; i < n; ++i) (sem[i] ? eta_s : eta_u).push_back(rs.all[i].eta);
  rs.eta_s = sorted_unique(eta_s);
  rs.eta_u = sorted_unique(eta_u);

  for (int i = 0; i < n; ++i) {
    Root& root = rs.all[i];
    bool eta_in_u = std::binary_search(rs.eta_u.begin(), rs.eta_u.end(), root.eta);
    bool eta_in_s = std::binary_search(rs.eta_s.begin(), rs.eta_s.end(), root.eta);
    if (sem[i]) {
      root.kind = eta_in_u ? RootKind::S2 : RootKind::S1;
      rs.s.push_back(i);
      (eta_in_u ? rs.s2 : rs.s1).push_back(i);
    } else {
      root.kind = eta_in_s ? RootKind::U2 : RootKind::U1;
      rs.u.push_back(i);
      (eta_in_s ? rs.u2 : rs.u1).push_back(i);
    }
  }
  auto etas = [&](const std::vector<int>& idx) {
    std::vector<int> e;
    for (int i : idx) e.push_back(rs.all[i].eta);
    return sorted_unique(e);
  };
  rs.eta_r = etas([&] {
    std::vector<int> allidx(n);
    for (int i = 0; i < n; ++i) allidx[i] = i;
    return allidx;
  }());
  rs.eta_s1 = etas(rs.s1);
  rs.eta_s2 = etas(rs.s2);
  rs.eta_u1 = etas(rs.u1);
  rs.eta_u2 = etas(rs.u2);

  // structural sanity straight from the definitions
  {
    std::vector<int> inter;
    std::set_intersection(rs.eta_s1.begin(), rs.eta_s1.end(), rs.eta_s2.begin(), rs.eta_s2.end(),
                          std::back_inserter(inter));
    theorem_check(inter.empty(), "eta(S1) meets eta(S2)");
    theorem_check(rs.eta_s2 == rs.eta_u2, "eta(S2) != eta(U2)");
  }
  return rs;
}

}  // namespace

RootSet compute_roots(const RaySet& rays) {
  const int d = rays.dim;
  // rays positively span iff 0 is interior to their hull iff the root region
  // {m : <v,m> >= -1} is bounded
  bool spanning = true;
  try {
    LatticePolytope H = LatticePolytope::hull(rays.generators);
    spanning = H.origin_interior();
  } catch (const Error& e) {
    if (e.kind != ErrorKind::NotFullDimensional) throw;
    spanning = false;
  }
  require(spanning, ErrorKind::RaysNotSpanning,
          "rays do not positively span; the root region is unbounded");

  std::vector<Rat> ones(rays.generators.size(), Rat(1));
  auto verts = hrep_vertices(rays.generators, ones, d);
  require(!verts.empty(), ErrorKind::RaysNotSpanning, "root region has no vertices");
  IntVec lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rat mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
  }
  std::vector<Int> levels(rays.generators.size(), Int(1));
  std::vector<Root> roots;
  for (auto& m : lattice_points_hrep(rays.generators, levels, lo, hi, true)) {
    int eta = -1;
    bool root = true;
    for (size_t t = 0; t < rays.generators.size() && root; ++t) {
      if (dot(rays.generators[t], m) == -1) {
        if (eta >= 0)
          root = false;  // two pairings at -1
        else
          eta = static_cast<int>(t);
      }
    }
    if (root && eta >= 0) roots.push_back({std::move(m), eta, RootKind::U1});
  }
  return finish_rootset(rays, std::move(roots));
}

RootSet roots_of_reflexive(const LatticePolytope& P) {
  require(is_reflexive(P), ErrorKind::NotReflexive, "roots_of_reflexive: not reflexive");
  RaySet rays = RaySet::normal_fan_rays(P);
  // facets are sorted by normal, so facet index == ray index
  for (size_t f = 0; f < P.facets().size(); ++f)
    require(rays.generators[f] == P.facets()[f].normal, ErrorKind::PreconditionFailed,
            "facet/ray index alignment broken");
  std::vector<Root> roots;
  for (int f = 0; f < static_cast<int>(P.facets().size()); ++f)
    for (auto& m : facet_relint_points(P, f)) roots.push_back({std::move(m), f, RootKind::U1});
  RootSet rs = finish_rootset(rays, std::move(roots));

  // dual-path consistency: the fan-side enumeration must agree exactly
  RootSet via_fan = compute_roots(rs.rays);
  bool same = rs.all.size() == via_fan.all.size();
  for (size_t i = 0; same && i < rs.all.size(); ++i)
    same = rs.all[i].m == via_fan.all[i].m && rs.all[i].eta == via_fan.all[i].eta &&
           rs.all[i].kind == via_fan.all[i].kind;
  theorem_check(same, "facet-interior roots differ from fan roots");
  return rs;
}

bool orthogonal(const RootSet& rs, const IntVec& v, const IntVec& w) {
  const Root& rv = rs.root_of(v);
  const Root& rw = rs.root_of(w);
  return dot(rs.eta_vec(rv), w) == 0 && dot(rs.eta_vec(rw), v) == 0;
}

bool equivalent(const RootSet& rs, const IntVec& v, const IntVec& w) {
  const Root& rv = rs.root_of(v);
  const Root& rw = rs.root_of(w);
  if (v == w) return false;
  if (rv.kind == RootKind::U1 || rv.kind == RootKind::U2) return false;
  if (rw.kind == RootKind::U1 || rw.kind == RootKind::U2) return false;
  return rs.root_of(neg(v)).eta == rs.root_of(neg(w)).eta;
}

Root orthogonalize(const RootSet& rs, const IntVec& v, const IntVec& w) {
  const Root& rv = rs.root_of(v);
  const Root& rw = rs.root_of(w);
  require(v != neg(w), ErrorKind::PreconditionFailed, "orthogonalize: v = -w");
  require(dot(rs.eta_vec(rv), w) > 0, ErrorKind::PreconditionFailed,
          "orthogonalize: <eta_v, w> <= 0");
  theorem_check(dot(rs.eta_vec(rw), v) == 0, "partial addition: <eta_w, v> != 0");
  IntVec sum = add(v, w);
  int i = rs.find(sum);
  theorem_check(i >= 0, "partial addition: v + w is not a root");
  const Root& rsum = rs.all[i];
  theorem_check(rsum.eta == rw.eta, "partial addition: eta(v+w) != eta(w)");
  auto is_s = [](RootKind k) { return k == RootKind::S1 || k == RootKind::S2; };
  theorem_check(is_s(rsum.kind) == (is_s(rv.kind) && is_s(rw.kind)),
                "partial addition: semisimplicity rule violated");
  return rsum;
}

ZPairResult z_pair(const LatticePolytope& P, const IntVec& v, const IntVec& w) {
  for (const auto& f : P.facets())
    require(f.level == 1, ErrorKind::NotReflexive, "z_pair: polytope not reflexive");
  require(P.on_boundary(v), ErrorKind::InputNotOnBoundary, "z_pair: v not on boundary");
  require(P.on_boundary(w), ErrorKind::InputNotOnBoundary, "z_pair: w not on boundary");

  auto fv = P.facets_through(v);
  auto fw = P.facets_through(w);
  std::vector<int> common;
  std::set_intersection(fv.begin(), fv.end(), fw.begin(), fw.end(), std::back_inserter(common));
  const bool c1 = !common.empty();
  const bool c2 = is_zero(add(v, w));
  const bool c3 = P.on_boundary(add(v, w));
  theorem_check((c1 ? 1 : 0) + (c2 ? 1 : 0) + (c3 ? 1 : 0) == 1,
                "boundary pair trichotomy violated for " + to_string(v) + ", " + to_string(w));
  if (c1) return {ZPairResult::Case::CommonFacet, 0, 0, {}};
  if (c2) return {ZPairResult::Case::Antipodal, 0, 0, {}};

  theorem_check(rank_of({v, w}) == 2, "partial sum case with collinear pair");
  // Cramer bound: |a|, |b| <= K * (|v_i|+|v_j|+|w_i|+|w_j|) over the box
  Int box = 0;
  for (const auto& vert : P.vertices())
    for (const Int& x : vert) {
      Int ax = abs(x);
      if (ax > box) box = ax;
    }
  Int weight = 0;
  for (const Int& x : v) weight += abs(x);
  for (const Int& x : w) weight += abs(x);
  Int bound = box * weight + 1;

  std::vector<ZPairResult> hits;
  for (Int a = 1; a <= bound; ++a)
    for (Int b = 1; b <= bound; ++b) {
      IntVec z = add(scale(a, v), scale(b, w));
      if (!P.contains(z)) continue;
      auto fz = P.facets_through(z);
      if (fz.empty()) continue;
      bool with_v = false, with_w = false;
      for (int f : fz) {
        if (std::binary_search(fv.begin(), fv.end(), f)) with_v = true;
        if (std::binary_search(fw.begin(), fw.end(), f)) with_w = true;
      }
      if (with_v && with_w) hits.push_back({ZPairResult::Case::Z, a, b, std::move(z)});
    }
  theorem_check(hits.size() == 1, "partial sum (a,b) not unique");
  const ZPairResult& hit = hits[0];
  theorem_check(hit.a == 1 || hit.b == 1, "partial sum needs a = 1 or b = 1");

  // every facet through z, and through v+w, contains exactly one of v, w
  for (const IntVec& pt : {hit.z, add(v, w)}) {
    for (int f : P.facets_through(pt)) {
      bool has_v = std::binary_search(fv.begin(), fv.end(), f);
      bool has_w = std::binary_search(fw.begin(), fw.end(), f);
      theorem_check(has_v != has_w, "facet through partial sum must separate v and w");
    }
  }

  // partial-addition formula when v is a root of P
  if (fv.size() == 1 && P.facets_through(v).size() == 1) {
    const auto& f = P.facets()[fv[0]];
    Int k = dot(f.normal, w);
    if (k > 0) {
      theorem_check(hit.b == 1 && hit.a == k + 1 && hit.z == add(scale(k + 1, v), w),
                    "z(v,w) != (<eta_v,w>+1) v + w for a root v");
    }
  }
  return hit;
}

}  // namespace demroot
