#include <algorithm>
#include <map>
#include <set>

#include "demroot/roots.hpp"

namespace demroot {

namespace {

Int pos_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Degree arithmetic in coker(M -> Z^rays) = (+) Z/d_i (+) Z^(n-d),
// read off from the Smith normal form of the ray matrix.
struct DegreeMap {
  IntMat u;                 // SNF row transform of the ray matrix
  std::vector<int> torsion_rows;
  std::vector<Int> torsion_mod;
  int rank = 0;
  int n = 0;
  bool flip_free = false;   // sign normalization of the free part

  IntVec reduce(const IntVec& y) const {
    IntVec w = mul(u, y);
    IntVec out;
    for (size_t i = 0; i < torsion_rows.size(); ++i)
      out.push_back(pos_mod(w[torsion_rows[i]], torsion_mod[i]));
    for (int i = rank; i < n; ++i) out.push_back(flip_free ? Int(-w[i]) : w[i]);
    return out;
  }
};

DegreeMap make_degree_map(const RaySet& rays) {
  const int n = static_cast<int>(rays.generators.size());
  SmithNormalForm snf = smith_normal_form(IntMat::from_rows(rays.generators));
  require(snf.rank == rays.dim, ErrorKind::RaysNotSpanning, "cox: rays do not span");
  DegreeMap dm;
  dm.u = snf.u;
  dm.rank = snf.rank;
  dm.n = n;
  for (int i = 0; i < snf.rank; ++i)
    if (snf.d.at(i, i) > 1) {
      dm.torsion_rows.push_back(i);
      dm.torsion_mod.push_back(snf.d.at(i, i));
    }
  // flip the free part so the first nonzero free coordinate over all
  // variable degrees is positive (deterministic presentation)
  const size_t tcount = dm.torsion_rows.size();
  for (int j = 0; j < n; ++j) {
    IntVec ej(n, Int(0));
    ej[j] = 1;
    IntVec deg = dm.reduce(ej);
    for (size_t c = tcount; c < deg.size(); ++c) {
      if (deg[c] == 0) continue;
      if (deg[c] < 0) dm.flip_free = true;
      return dm;
    }
  }
  return dm;
}

IntVec unit(int n, int j) {
  IntVec e(n, Int(0));
  e[j] = 1;
  return e;
}

}  // namespace

DegreeClassData cox_classes(const RaySet& rays, const RootSet& rs) {
  const int n = static_cast<int>(rays.generators.size());
  DegreeMap dm = make_degree_map(rays);

  DegreeClassData out;
  out.free_rank = n - dm.rank;
  out.torsion = dm.torsion_mod;
  for (int j = 0; j < n; ++j) out.degrees.push_back(dm.reduce(unit(n, j)));

  std::map<IntVec, std::vector<int>> by_degree;
  for (int j = 0; j < n; ++j) by_degree[out.degrees[j]].push_back(j);

  // extra monomials per degree, recovered from the unipotent roots via the
  // Cox pair m -> (x_eta, prod x^<v,m>)
  std::map<IntVec, std::set<IntVec>> monos;
  for (int i : rs.u) {
    const Root& root = rs.all[i];
    IntVec expo(n, Int(0));
    for (int t = 0; t < n; ++t) {
      if (t == root.eta) continue;
      expo[t] = dot(rays.generators[t], root.m);
      theorem_check(expo[t] >= 0, "cox monomial with negative exponent");
    }
    IntVec deg = dm.reduce(expo);
    theorem_check(deg == out.degrees[root.eta], "deg(f_m) != deg(x_m) for a root");
    monos[deg].insert(std::move(expo));
  }

  // Y-partition: order >= 2 without / with monomials, then singletons
  // with / without; stable order by smallest member inside each group
  std::vector<std::vector<int>> g[4];
  for (auto& [deg, members] : by_degree) {
    bool big = members.size() >= 2;
    bool has_mono = monos.count(deg) > 0;
    int bucket = big ? (has_mono ? 1 : 0) : (has_mono ? 2 : 3);
    g[bucket].push_back(members);  // already sorted ray indices
  }
  for (auto& bucket : g)
    std::sort(bucket.begin(), bucket.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  for (auto& bucket : g)
    for (auto& cls : bucket) out.classes.push_back(std::move(cls));
  out.p = static_cast<int>(g[0].size());
  out.q = out.p + static_cast<int>(g[1].size());
  out.r = out.q + static_cast<int>(g[2].size());
  out.s = out.r + static_cast<int>(g[3].size());

  for (int i = 0; i < out.s; ++i) {
    const IntVec& deg = out.degrees[out.classes[i][0]];
    auto it = monos.find(deg);
    out.monomial_counts.push_back(it == monos.end() ? 0 : static_cast<long>(it->second.size()));
    if (i < out.q) out.class_sizes.push_back(Int(out.classes[i].size()) - 1);
  }

  // ---- counting identities against the root partition ----
  auto union_of = [&](int from, int to) {
    std::vector<int> set;
    for (int i = from; i < to; ++i)
      set.insert(set.end(), out.classes[i].begin(), out.classes[i].end());
    std::sort(set.begin(), set.end());
    return set;
  };
  theorem_check(union_of(0, out.p) == rs.eta_s1, "classes 1..p do not carry eta(S1)");
  theorem_check(union_of(out.p, out.q) == rs.eta_s2, "classes p+1..q do not carry eta(S2)");
  theorem_check(rs.eta_s2 == rs.eta_u2, "eta(S2) != eta(U2)");
  theorem_check(union_of(out.q, out.r) == rs.eta_u1, "classes q+1..r do not carry eta(U1)");
  {
    std::vector<int> no_roots;
    for (int t = 0; t < n; ++t)
      if (!std::binary_search(rs.eta_r.begin(), rs.eta_r.end(), t)) no_roots.push_back(t);
    theorem_check(union_of(out.r, out.s) == no_roots, "classes r+1..s carry roots");
  }
  auto pair_count = [&](int from, int to) {
    Int c = 0;
    for (int i = from; i < to; ++i) {
      Int k = static_cast<long>(out.classes[i].size());
      c += k * (k - 1);
    }
    return c;
  };
  theorem_check(pair_count(0, out.p) == Int(rs.s1.size()), "|S1| identity");
  theorem_check(pair_count(out.p, out.q) == Int(rs.s2.size()), "|S2| identity");
  {
    Int u1 = 0, u2 = 0;
    for (int i = out.q; i < out.r; ++i) u1 += out.monomial_counts[i];
    for (int i = out.p; i < out.q; ++i)
      u2 += Int(static_cast<long>(out.classes[i].size())) * out.monomial_counts[i];
    theorem_check(u1 == Int(rs.u1.size()), "|U1| identity");
    theorem_check(u2 == Int(rs.u2.size()), "|U2| identity");
    theorem_check(u2 == 0 || u2 >= 2, "|U2| = 1 is impossible");
  }
  // bijection of ordered same-class variable pairs with semisimple roots
  for (int i = 0; i < out.q; ++i) {
    for (int a : out.classes[i])
      for (int b : out.classes[i]) {
        if (a == b) continue;
        int hits = 0;
        for (int k : rs.s)
          if (rs.all[k].eta == a && rs.root_of(neg(rs.all[k].m)).eta == b) ++hits;
        theorem_check(hits == 1, "ordered pair in a degree class must match one root");
      }
  }
  // dim lin(S) = sum over classes of (|Y_i| - 1)
  {
    Int expect = 0;
    for (int i = 0; i < out.q; ++i) expect += out.class_sizes[i];
    theorem_check(Int(rs.span_dim(rs.s)) == expect, "dim lin(S) identity");
  }
  // unipotent roots of equal degree with distinct eta are orthogonal
  for (int i : rs.u)
    for (int j : rs.u) {
      const Root& a = rs.all[i];
      const Root& b = rs.all[j];
      if (a.eta == b.eta || out.degrees[a.eta] != out.degrees[b.eta]) continue;
      theorem_check(orthogonal(rs, a.m, b.m), "equal-degree unipotent roots not orthogonal");
    }
  return out;
}

RootBasis build_root_basis(const RootSet& rs, const DegreeClassData& dcd,
                           const BasisSelection* selection) {
  BasisSelection def;
  if (!selection) {
    for (int i = 0; i < dcd.q; ++i) def.picks.emplace_back(i, dcd.classes[i]);
    selection = &def;
  }
  std::set<int> seen;
  for (const auto& [i, k] : selection->picks) {
    require(i >= 0 && i < dcd.q, ErrorKind::InvalidSelection, "class index out of range");
    require(seen.insert(i).second, ErrorKind::InvalidSelection, "class chosen twice");
    require(k.size() >= 2, ErrorKind::InvalidSelection, "need |K_i| >= 2");
    for (int ray : k)
      require(std::binary_search(dcd.classes[i].begin(), dcd.classes[i].end(), ray),
              ErrorKind::InvalidSelection, "K_i not inside Y_i");
  }

  RootBasis basis;
  for (const auto& [i, k] : selection->picks) {
    std::vector<int> cls;
    const int fixed = k[0];  // common second element of the ordered pairs
    for (size_t t = 1; t < k.size(); ++t) {
      int found = -1;
      for (int idx : rs.s)
        if (rs.all[idx].eta == k[t] && rs.root_of(neg(rs.all[idx].m)).eta == fixed) {
          theorem_check(found < 0, "duplicate root for an ordered variable pair");
          found = idx;
        }
      theorem_check(found >= 0, "missing root for an ordered variable pair");
      cls.push_back(static_cast<int>(basis.roots.size()));
      basis.roots.push_back(rs.all[found].m);
    }
    basis.class_sizes.push_back(Int(static_cast<long>(cls.size())));
    basis.classes.push_back(std::move(cls));
  }

  for (size_t i = 0; i < basis.roots.size(); ++i)
    for (size_t j = i + 1; j < basis.roots.size(); ++j)
      theorem_check(orthogonal(rs, basis.roots[i], basis.roots[j]),
                    "root basis is not pairwise orthogonal");
  for (size_t ci = 0; ci < basis.classes.size(); ++ci)
    for (size_t cj = 0; cj < basis.classes.size(); ++cj)
      for (int a : basis.classes[ci])
        for (int b : basis.classes[cj]) {
          if (a == b) continue;
          theorem_check(equivalent(rs, basis.roots[a], basis.roots[b]) == (ci == cj),
                        "equivalence classes of the basis are wrong");
        }

  if (!basis.roots.empty()) {
    SmithNormalForm snf = smith_normal_form(IntMat::from_rows(basis.roots));
    bool ok = snf.rank == static_cast<int>(basis.roots.size());
    for (const Int& e : snf.divisors()) ok = ok && e == 1;
    theorem_check(ok, "root basis is not a Z-basis of its saturated span");
    basis.z_basis = true;
  } else {
    basis.z_basis = true;
  }

  // A = R cap lin(B) must be {+-b} U {b - b', b equivalent b'}
  std::vector<IntVec> span_members;
  for (const Root& root : rs.all) {
    if (basis.roots.empty()) break;
    if (span_coordinates(basis.roots, to_rat(root.m)).has_value())
      span_members.push_back(root.m);
  }
  std::vector<IntVec> expected;
  for (const auto& b : basis.roots) {
    expected.push_back(b);
    expected.push_back(neg(b));
  }
  for (const auto& cls : basis.classes)
    for (int a : cls)
      for (int b : cls) {
        if (a != b) expected.push_back(sub(basis.roots[a], basis.roots[b]));
      }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  theorem_check(span_members == expected, "R cap lin(B) has the wrong members");
  for (const auto& m : span_members)
    theorem_check(rs.all[rs.find(m)].kind == RootKind::S1 ||
                      rs.all[rs.find(m)].kind == RootKind::S2,
                  "R cap lin(B) contains a unipotent root");
  {
    Int csq = 0;
    for (const Int& c : basis.class_sizes) csq += c * c;
    theorem_check(Int(static_cast<long>(span_members.size())) ==
                      Int(static_cast<long>(basis.roots.size())) + csq,
                  "|A| = |B| + sum c_i^2 fails");
    std::set<int> eta_a;
    for (const auto& m : span_members) {
      eta_a.insert(rs.root_of(m).eta);
    }
    theorem_check(static_cast<long>(eta_a.size()) ==
                      static_cast<long>(basis.roots.size() + basis.classes.size()),
                  "|eta(A)| = |B| + t fails");
  }
  if (!selection->picks.empty() && selection == &def) {
    // default selection: B is an S-root basis
    std::vector<IntVec> s_roots;
    for (int i : rs.s) s_roots.push_back(rs.all[i].m);
    theorem_check(span_members == s_roots, "default basis: R cap lin(S) != S");
  }
  return basis;
}

namespace {

struct FamilyContext {
  const RootSet& rs;

  bool both_orthogonal(const IntVec& a, const IntVec& b) const {
    return orthogonal(rs, a, b);
  }

  // Lemma-tame repairs: replace w by x + w while some partner x pairs
  // positively against it; eta(w) is preserved throughout.
  std::optional<IntVec> repair(IntVec w, const std::vector<const IntVec*>& partners) const {
    for (int guard = 0; guard < 256; ++guard) {
      const IntVec* bad = nullptr;
      for (const IntVec* x : partners)
        if (dot(rs.eta_vec(rs.root_of(*x)), w) > 0) {
          bad = x;
          break;
        }
      if (!bad) return w;
      if (*bad == neg(w)) return std::nullopt;
      w = orthogonalize(rs, *bad, w).m;
    }
    return std::nullopt;
  }

  // Pick one root per eta (ascending), pairwise orthogonal among themselves
  // and two-sided orthogonal to `two_sided`, one-sided (<eta_p, w> = 0)
  // against `one_sided`. Backtracks over candidates.
  bool cover(const std::vector<int>& etas, size_t slot, const std::vector<int>& pool,
             const std::vector<IntVec>& one_sided, const std::vector<IntVec>& two_sided,
             std::vector<IntVec>* chosen) const {
    if (slot == etas.size()) return true;
    for (int idx : pool) {
      const Root& cand = rs.all[idx];
      if (cand.eta != etas[slot]) continue;
      std::vector<const IntVec*> partners;
      for (const auto& x : one_sided) partners.push_back(&x);
      for (const auto& x : two_sided) partners.push_back(&x);
      for (const auto& x : *chosen) partners.push_back(&x);
      auto w = repair(cand.m, partners);
      if (!w) continue;
      bool ok = true;
      for (const auto& x : one_sided)
        ok = ok && dot(rs.eta_vec(rs.root_of(x)), *w) == 0;
      for (const auto& x : two_sided) ok = ok && both_orthogonal(x, *w);
      for (const auto& x : *chosen) ok = ok && both_orthogonal(x, *w);
      if (!ok) continue;
      chosen->push_back(*w);
      if (cover(etas, slot + 1, pool, one_sided, two_sided, chosen)) return true;
      chosen->pop_back();
    }
    return false;
  }
};

std::vector<int> eta_cover_of(const RootSet& rs, const std::vector<IntVec>& fam) {
  std::vector<int> e;
  for (const auto& m : fam) e.push_back(rs.root_of(m).eta);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

std::vector<IntVec> span_roots(const RootSet& rs, const std::vector<IntVec>& fam) {
  std::vector<IntVec> members;
  if (fam.empty()) return members;
  for (const Root& root : rs.all)
    if (span_coordinates(fam, to_rat(root.m)).has_value()) members.push_back(root.m);
  return members;
}

std::vector<IntVec> roots_at(const RootSet& rs, const std::vector<int>& idx) {
  std::vector<IntVec> v;
  for (int i : idx) v.push_back(rs.all[i].m);
  return v;
}

}  // namespace

OrthogonalFamilies orthogonal_families(const RootSet& rs) {
  FamilyContext ctx{rs};
  OrthogonalFamilies fam;

  DegreeClassData dcd = cox_classes(rs.rays, rs);
  RootBasis sbasis = build_root_basis(rs, dcd);
  for (int i = 0; i < dcd.q; ++i)
    for (int k : sbasis.classes[i])
      (i < dcd.p ? fam.b1 : fam.b2).push_back(sbasis.roots[k]);

  std::vector<IntVec> b12 = fam.b1;
  b12.insert(b12.end(), fam.b2.begin(), fam.b2.end());
  if (!ctx.cover(rs.eta_u1, 0, rs.u1, b12, {}, &fam.b3))
    fail(ErrorKind::ConstructionFailed, "no U1-facet basis orthogonal to the S-root basis");

  fam.d3 = fam.b1;
  if (!ctx.cover(rs.eta_u2, 0, rs.u2, {}, fam.d3, &fam.d2))
    fail(ErrorKind::ConstructionFailed, "no U2-facet basis orthogonal to the S1-root basis");
  {
    std::vector<IntVec> d23 = fam.d2;
    d23.insert(d23.end(), fam.d3.begin(), fam.d3.end());
    if (!ctx.cover(rs.eta_u1, 0, rs.u1, {}, d23, &fam.d1))
      fail(ErrorKind::ConstructionFailed, "no U1-facet basis completing the R-facet basis");
  }

  // ---- exhaustive verification (the construction is only a heuristic) ----
  auto sorted = [](std::vector<IntVec> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  theorem_check(sorted(span_roots(rs, fam.b1)) == sorted(roots_at(rs, rs.s1)),
                "B1 is not an S1-root basis");
  theorem_check(sorted(span_roots(rs, fam.b2)) == sorted(roots_at(rs, rs.s2)),
                "B2 is not an S2-root basis");
  theorem_check(sorted(span_roots(rs, b12)) == sorted(roots_at(rs, rs.s)),
                "B1 u B2 is not an S-root basis");
  theorem_check(eta_cover_of(rs, fam.b3) == rs.eta_u1, "B3 does not cover eta(U1)");
  for (const auto& x : fam.b3)
    theorem_check(rs.root_of(x).kind == RootKind::U1, "B3 member outside U1");
  for (size_t i = 0; i < fam.b3.size(); ++i)
    for (size_t j = i + 1; j < fam.b3.size(); ++j)
      theorem_check(orthogonal(rs, fam.b3[i], fam.b3[j]), "B3 not pairwise orthogonal");
  for (const auto& b : b12)
    for (const auto& x : fam.b3)
      theorem_check(dot(rs.eta_vec(rs.root_of(b)), x) == 0, "<eta_b, b'> != 0 across B");
  {
    std::vector<IntVec> all_b = b12;
    all_b.insert(all_b.end(), fam.b3.begin(), fam.b3.end());
    theorem_check(rank_of(all_b) == static_cast<int>(all_b.size()), "B not independent");
    theorem_check(static_cast<int>(all_b.size()) <= rs.rays.dim,
                  "dim lin(S) + |eta(U1)| > d");
    theorem_check(static_cast<int>(all_b.size()) ==
                      rs.span_dim(rs.s) + static_cast<int>(rs.eta_u1.size()),
                  "|B| != dim lin(S) + |eta(U1)|");
  }

  std::vector<IntVec> all_d = fam.d1;
  all_d.insert(all_d.end(), fam.d2.begin(), fam.d2.end());
  all_d.insert(all_d.end(), fam.d3.begin(), fam.d3.end());
  for (size_t i = 0; i < all_d.size(); ++i)
    for (size_t j = i + 1; j < all_d.size(); ++j)
      theorem_check(orthogonal(rs, all_d[i], all_d[j]), "D not pairwise orthogonal");
  theorem_check(eta_cover_of(rs, fam.d1) == rs.eta_u1, "D1 does not cover eta(U1)");
  theorem_check(eta_cover_of(rs, fam.d2) == rs.eta_u2, "D2 does not cover eta(U2)");
  {
    std::vector<IntVec> d12 = fam.d1;
    d12.insert(d12.end(), fam.d2.begin(), fam.d2.end());
    theorem_check(eta_cover_of(rs, d12) == rs.eta_u, "D1 u D2 is not a U-facet basis");
    std::vector<int> eta_d = eta_cover_of(rs, all_d);
    for (const auto& x : fam.d3) {
      int e = rs.root_of(neg(x)).eta;
      eta_d.push_back(e);
    }
    std::sort(eta_d.begin(), eta_d.end());
    eta_d.erase(std::unique(eta_d.begin(), eta_d.end()), eta_d.end());
    theorem_check(eta_d == rs.eta_r, "D is not an R-facet basis");
    theorem_check(static_cast<int>(all_d.size()) <= rs.rays.dim,
                  "|eta(U1)| + |eta(U2)| + dim lin(S1) > d");
    theorem_check(static_cast<int>(all_d.size()) ==
                      static_cast<int>(rs.eta_u1.size() + rs.eta_u2.size()) +
                          rs.span_dim(rs.s1),
                  "|D| cardinality identity fails");
  }
  return fam;
}

}  // namespace demroot
