#include <omp.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "demroot/runtime.hpp"
#include "demroot/verify.hpp"

namespace demroot {

namespace {

struct Probe {
  std::vector<std::string> out;

  void check(bool ok, const std::string& msg) {
    if (!ok) out.push_back(msg);
  }
  template <typename F>
  void guard(const std::string& ctx, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      out.push_back(ctx + ": " + e.what());
    }
  }
};

std::vector<IntVec> boundary_points(const LatticePolytope& P) {
  std::vector<IntVec> bd;
  for (auto& m : lattice_points(P))
    if (!P.facets_through(m).empty()) bd.push_back(std::move(m));
  return bd;
}

// the face cut out by a set of facets, with relint membership of a point
bool in_relint_of_face(const LatticePolytope& P, const std::vector<int>& facets,
                       const IntVec& x) {
  if (!P.contains(x)) return false;
  std::vector<int> through = P.facets_through(x);
  std::vector<int> want = facets;
  std::sort(want.begin(), want.end());
  return through == want;
}

void reflexive_root_properties(const LatticePolytope& P, const RootSet& rs, Probe& pr) {
  const int d = P.dim();
  LatticePolytope Pd = dual(P).as_lattice();
  auto dual_pts = lattice_points(Pd);

  // duality involution and incidence transposition
  pr.guard("dual-dual", [&] {
    LatticePolytope back = dual(Pd).as_lattice();
    pr.check(back == P, "dual(dual(P)) differs from P");
  });
  pr.guard("incidence-transpose", [&] {
    RationalPolytope D = dual(P);
    for (size_t fi = 0; fi < P.facets().size(); ++fi)
      for (int vi : P.facets()[fi].verts) {
        // vertex vi of P <-> facet of P*, facet fi of P <-> vertex of P*
        const IntVec& v = P.vertices()[vi];
        RatVec eta(d);
        for (int t = 0; t < d; ++t) eta[t] = Rat(P.facets()[fi].normal[t]);
        pr.check(dot_qz(v, eta) == -1, "dual incidence is not the transpose");
      }
  });

  // Minkowski identity: sum of rvol(v*) v over vertices v of P* vanishes
  pr.guard("minkowski", [&] {
    RatVec sum(d, Rat(0));
    for (const auto& f : P.facets()) {
      std::vector<IntVec> fverts;
      for (int i : f.verts) fverts.push_back(P.vertices()[i]);
      Rat rv = relative_volume(fverts);
      for (int t = 0; t < d; ++t) sum[t] += rv * Rat(f.normal[t]);
    }
    pr.check(is_zero(sum), "Minkowski facet identity fails");
  });

  pr.guard("fano-chain", [&] {
    FanoClass fc = fano_class(P);
    pr.check(!fc.smooth || fc.terminal, "smooth without terminal");
    pr.check(!fc.terminal || fc.canonical, "terminal without canonical");
    pr.check(fc.canonical, "reflexive polytope must be canonical");
  });

  // pairing sums characterize semisimplicity root by root
  pr.guard("pairing-sums", [&] {
    for (const Root& r : rs.all) {
      Int s = 0;
      for (const auto& v : rs.rays.generators) s += dot(v, r.m);
      pr.check(s >= 0, "root with negative pairing sum");
      bool semis = r.kind == RootKind::S1 || r.kind == RootKind::S2;
      pr.check((s == 0) == semis, "pairing sum does not match semisimplicity");
    }
  });

  pr.guard("unipotent-vs-s1", [&] {
    for (int ui : rs.u)
      for (int si : rs.s1)
        pr.check(dot(rs.eta_vec(rs.all[ui]), rs.all[si].m) == 0,
                 "<eta_v, w> != 0 for v in U, w in S1");
  });

  pr.guard("partial-addition-scan", [&] {
    for (const Root& a : rs.all)
      for (const Root& b : rs.all) {
        if (a.m == neg(b.m)) continue;
        if (dot(rs.eta_vec(a), b.m) > 0) orthogonalize(rs, a.m, b.m);
      }
  });

  // a facet with both kinds of roots forces a unipotent root opposite
  pr.guard("mixed-facet", [&] {
    for (int f : rs.eta_s) {
      if (!std::binary_search(rs.eta_u.begin(), rs.eta_u.end(), f)) continue;
      for (int si : rs.s) {
        if (rs.all[si].eta != f) continue;
        int fopp = rs.root_of(neg(rs.all[si].m)).eta;
        pr.check(std::binary_search(rs.eta_u.begin(), rs.eta_u.end(), fopp),
                 "facet opposite a semisimple root lacks a unipotent root");
      }
    }
  });

  // semisimple roots meet exactly two dual lattice points nontrivially
  pr.guard("prism-support", [&] {
    for (int si : rs.s) {
      const Root& r = rs.all[si];
      std::vector<IntVec> support;
      for (const auto& y : dual_pts)
        if (dot(y, r.m) != 0) support.push_back(y);
      pr.check(support.size() == 2, "semisimple root with support != 2 in P* cap N");
      IntVec eta_m = rs.eta_vec(r);
      IntVec eta_neg = rs.eta_vec(rs.root_of(neg(r.m)));
      std::sort(support.begin(), support.end());
      std::vector<IntVec> want{eta_m, eta_neg};
      std::sort(want.begin(), want.end());
      pr.check(support == want, "support of a semisimple root is not {eta_m, eta_-m}");
    }
  });

  // projection along a root maps its facet bijectively onto pi(P cap M)
  pr.guard("root-projection", [&] {
    auto pts = lattice_points(P);
    for (const Root& r : rs.all) {
      // rows of vinv are a Z-basis of M whose first member is +-m, so the
      // quotient M / Zm reads off as the remaining coordinates
      SmithNormalForm snf = smith_normal_form(IntMat::from_rows({r.m}));
      auto proj = [&](const IntVec& x) {
        IntVec c = mul(transpose(snf.v), x);
        return IntVec(c.begin() + 1, c.end());
      };
      std::set<IntVec> facet_img, all_img;
      long facet_count = 0;
      for (const auto& x : pts) {
        if (dot(rs.eta_vec(r), x) == -1) {
          facet_img.insert(proj(x));
          ++facet_count;
        }
        all_img.insert(proj(x));
      }
      pr.check(static_cast<long>(facet_img.size()) == facet_count,
               "projection along a root is not injective on its facet");
      pr.check(facet_img == all_img, "projection image differs from pi(P cap M)");
    }
  });

  // orthogonal families cut out faces of matching codimension
  pr.guard("orthogonal-face", [&] {
    auto face_check = [&](const std::vector<IntVec>& fam) {
      if (fam.empty()) return;
      std::vector<int> fs;
      IntVec sum(d, Int(0));
      for (const auto& m : fam) {
        fs.push_back(rs.root_of(m).eta);
        sum = add(sum, m);
      }
      std::sort(fs.begin(), fs.end());
      fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
      pr.check(static_cast<int>(fs.size()) == static_cast<int>(fam.size()),
               "orthogonal family with repeated facets");
      std::vector<IntVec> fverts;
      for (const auto& v : P.vertices()) {
        bool on_all = true;
        for (int f : fs)
          if (dot(P.facets()[f].normal, v) != -P.facets()[f].level) on_all = false;
        if (on_all) fverts.push_back(v);
      }
      pr.check(!fverts.empty(), "orthogonal family with empty facet intersection");
      AffineBasis ab = affine_lattice_basis(fverts);
      pr.check(d - static_cast<int>(ab.basis.size()) == static_cast<int>(fam.size()),
               "face codimension differs from family size");
      pr.check(in_relint_of_face(P, fs, sum),
               "sum of an orthogonal family misses the relative interior");
    };
    for (const Root& a : rs.all)
      for (const Root& b : rs.all) {
        if (a.m >= b.m) continue;
        if (orthogonal(rs, a.m, b.m)) face_check({a.m, b.m});
      }
    OrthogonalFamilies fam = orthogonal_families(rs);
    std::vector<IntVec> b_all = fam.b1;
    b_all.insert(b_all.end(), fam.b2.begin(), fam.b2.end());
    b_all.insert(b_all.end(), fam.b3.begin(), fam.b3.end());
    face_check(b_all);
    std::vector<IntVec> d_all = fam.d1;
    d_all.insert(d_all.end(), fam.d2.begin(), fam.d2.end());
    d_all.insert(d_all.end(), fam.d3.begin(), fam.d3.end());
    face_check(d_all);
  });

  // Z-basis property of the default root basis, solve-based
  pr.guard("root-basis-lattice", [&] {
    DegreeClassData dcd = cox_classes(rs.rays, rs);
    RootBasis basis = build_root_basis(rs, dcd);
    if (basis.roots.empty()) return;
    for (const auto& x : lattice_points(P)) {
      auto coords = span_coordinates(basis.roots, to_rat(x));
      if (!coords) continue;  // outside the span
      pr.check(all_integral(*coords),
               "lattice point in lin(B) is not an integer combination of B");
    }
  });

  pr.guard("semisimple-span", [&] {
    DegreeClassData dcd = cox_classes(rs.rays, rs);
    RootBasis basis = build_root_basis(rs, dcd);
    semisimple_span_check(P, basis);
  });

  pr.guard("symmetry", [&] { symmetric_implies_semisimple(P); });

  if (P.centrally_symmetric()) {
    pr.guard("central-decomposition", [&] { central_decompose(P); });
    pr.guard("central-aut-bound", [&] {
      AutSummary a = aut_summary(rs, d);
      pr.check(a.aut_dim <= Int(3L * d), "centrally symmetric polytope with aut dim > 3d");
    });
  }

  // boundary pair law, including the partial-addition corollary
  auto bd = boundary_points(P);
  if (bd.size() <= 100) {
    pr.guard("boundary-pairs", [&] {
      for (size_t i = 0; i < bd.size(); ++i)
        for (size_t j = i + 1; j < bd.size(); ++j) {
          ZPairResult res = z_pair(P, bd[i], bd[j]);
          (void)res;
        }
    });
    pr.guard("root-boundary-sums", [&] {
      for (const Root& r : rs.all)
        for (const auto& w : bd) {
          if (w == neg(r.m)) continue;
          if (dot(rs.eta_vec(r), w) == -1) continue;  // w on the root's facet
          IntVec s = add(r.m, w);
          pr.check(P.on_boundary(s), "v + w left the boundary for a root v");
          ZPairResult res = z_pair(P, r.m, w);
          pr.check(res.kind == ZPairResult::Case::Z, "root/boundary pair not in case Z");
          pr.check(dot(rs.eta_vec(r), res.z) == -1, "z(v,w) misses the facet of v");
        }
    });
  }
}

void lemma_sum_random(const RootSet& rs, unsigned long seed, Probe& pr) {
  if (rs.all.size() < 2) return;
  std::mt19937_64 rng(seed);
  const int n = static_cast<int>(rs.all.size());
  std::uniform_int_distribution<int> size_dist(2, std::min(6, n));
  std::uniform_int_distribution<int> idx_dist(0, n - 1);
  std::uniform_int_distribution<int> coef_dist(1, 3);
  for (int iter = 0; iter < 200; ++iter) {
    int k = size_dist(rng);
    std::set<int> subset;
    while (static_cast<int>(subset.size()) < k) subset.insert(idx_dist(rng));
    IntVec sum(rs.rays.dim, Int(0));
    bool all_semisimple = true;
    for (int i : subset) {
      Int c = coef_dist(rng);
      sum = add(sum, scale(c, rs.all[i].m));
      all_semisimple = all_semisimple &&
                       (rs.all[i].kind == RootKind::S1 || rs.all[i].kind == RootKind::S2);
    }
    if (is_zero(sum))
      pr.check(all_semisimple, "positive zero-combination contains a unipotent root");
  }
}

}  // namespace

std::vector<std::string> polytope_property_violations(const LatticePolytope& P,
                                                      unsigned long seed) {
  Probe pr;
  if (!P.origin_interior()) {
    pr.out.push_back("origin not interior");
    return pr.out;
  }
  bool refl = false;
  pr.guard("reflexivity", [&] { refl = is_reflexive(P); });

  RootSet rs;
  pr.guard("roots", [&] {
    rs = refl ? roots_of_reflexive(P) : compute_roots(RaySet::normal_fan_rays(P));
  });
  if (!pr.out.empty() && rs.rays.generators.empty()) return pr.out;

  pr.guard("fan-criteria", [&] { check_fan_criteria(rs.rays, rs); });
  pr.guard("cox-classes", [&] { cox_classes(rs.rays, rs); });
  pr.guard("bounds", [&] { bound_checks(rs, P.dim(), refl ? &P : nullptr); });
  pr.guard("codim-one", [&] {
    DegreeClassData dcd = cox_classes(rs.rays, rs);
    codim_one_analysis(rs, dcd);
  });
  pr.guard("orthogonal-families", [&] { orthogonal_families(rs); });
  pr.guard("root-basis", [&] {
    DegreeClassData dcd = cox_classes(rs.rays, rs);
    build_root_basis(rs, dcd);
  });
  pr.guard("automorphisms", [&] {
    RatVec bary = barycenter(P);
    for (const auto& a : lattice_automorphisms(P)) {
      RatVec img(P.dim(), Rat(0));
      for (int i = 0; i < P.dim(); ++i)
        for (int j = 0; j < P.dim(); ++j) img[i] += Rat(a.mat.at(i, j)) * bary[j];
      pr.check(img == bary, "barycenter moved by a lattice automorphism");
    }
  });
  if (rs.rays.centrally_symmetric()) {
    pr.guard("symmetric-rays-bound", [&] {
      pr.check(aut_summary(rs, P.dim()).aut_dim <= Int(3L * P.dim()),
               "centrally symmetric ray set with aut dim > 3d");
    });
  }
  pr.guard("io-roundtrip", [&] {
    InputDocument doc = parse_matrix_document(emit_vertices(P));
    pr.check(LatticePolytope::hull(doc.points) == P, "vertex document round trip failed");
  });
  pr.guard("criteria", [&] {
    if (refl) check_reflexive_criteria(P);
  });
  if (refl) reflexive_root_properties(P, rs, pr);
  lemma_sum_random(rs, seed, pr);
  return pr.out;
}

VerifyResult run_verify(const VerifyOptions& opt) {
  runtime::set_jobs(opt.jobs);
  VerifyResult res;
  std::ostringstream text;

  std::vector<CorpusEntry> entries = bundled_corpus();
  if (!opt.corpus_text.empty())
    for (auto& doc : parse_batch(opt.corpus_text)) {
      CorpusEntry e;
      e.name = "extra:" + doc.label;
      e.polytope = LatticePolytope::hull(doc.points);
      require(e.polytope.origin_interior(), ErrorKind::OriginNotInterior,
              e.name + ": the origin is not an interior point");
      e.expect_reflexive = false;  // property-only, reflexivity not asserted
      entries.push_back(std::move(e));
    }

  const int n = static_cast<int>(entries.size());
  std::vector<std::string> entry_text(n);
  std::vector<long> entry_violations(n, 0);
#pragma omp parallel for schedule(dynamic) num_threads(runtime::jobs())
  for (int i = 0; i < n; ++i) {
    std::ostringstream os;
    try {
      const CorpusEntry& e = entries[i];
      std::vector<std::string> bad = polytope_property_violations(e.polytope, opt.seed);
      RootSet rs = is_reflexive(e.polytope) ? roots_of_reflexive(e.polytope)
                                            : compute_roots(RaySet::normal_fan_rays(e.polytope));
      AutSummary aut = aut_summary(rs, e.polytope.dim());
      if (e.expect_reflexive && !is_reflexive(e.polytope))
        bad.push_back("expected reflexive");
      auto expect = [&](auto opt_value, auto actual, const char* what) {
        if (opt_value && *opt_value != actual)
          bad.push_back(std::string("golden mismatch: ") + what);
      };
      expect(e.roots_all, static_cast<long>(rs.all.size()), "total roots");
      expect(e.roots_semisimple, static_cast<long>(rs.s.size()), "semisimple roots");
      expect(e.roots_unipotent, static_cast<long>(rs.u.size()), "unipotent roots");
      expect(e.aut_dim, aut.aut_dim, "aut dimension");
      expect(e.reductive, aut.reductive, "reductivity");
      expect(e.lattice_point_count, static_cast<long>(lattice_points(e.polytope).size()),
             "lattice point count");
      os << "corpus " << e.name << ": ";
      if (bad.empty()) {
        os << "ok (roots " << rs.all.size() << ", aut dim " << aut.aut_dim.get_str() << ")\n";
      } else {
        os << bad.size() << " violations\n";
        for (const auto& b : bad) os << "  ! " << b << "\n";
        entry_violations[i] = static_cast<long>(bad.size());
      }
    } catch (const std::exception& ex) {
      os << "corpus " << entries[i].name << ": error: " << ex.what() << "\n";
      entry_violations[i] = 1;
    }
    entry_text[i] = os.str();
  }
  for (int i = 0; i < n; ++i) {
    text << entry_text[i];
    res.violations += entry_violations[i];
  }

  // non-reflexive centrally symmetric ray set: the 3d bound still applies
  {
    std::ostringstream os;
    try {
      RaySet rays = RaySet::from_generators(
          {{Int(1), Int(0)}, {Int(-1), Int(0)}, {Int(1), Int(2)}, {Int(-1), Int(-2)}});
      RootSet rs = compute_roots(rays);
      check_fan_criteria(rays, rs);
      AutSummary aut = aut_summary(rs, rays.dim);
      if (!(aut.aut_dim <= Int(3L * rays.dim))) {
        os << "rayset centrays-2d: aut bound violated\n";
        ++res.violations;
      } else {
        os << "rayset centrays-2d: ok (roots " << rs.all.size() << ", aut dim "
           << aut.aut_dim.get_str() << ")\n";
      }
    } catch (const std::exception& ex) {
      os << "rayset centrays-2d: error: " << ex.what() << "\n";
      ++res.violations;
    }
    text << os.str();
  }

  // the polygon sweep plus every per-class law
  std::vector<LatticePolytope> classes = enumerate_reflexive_2d(opt.box);
  res.polygon_classes = static_cast<int>(classes.size());
  const int nc = res.polygon_classes;
  std::vector<std::string> cls_text(nc);
  std::vector<long> cls_violations(nc, 0);
#pragma omp parallel for schedule(dynamic) num_threads(runtime::jobs())
  for (int i = 0; i < nc; ++i) {
    std::ostringstream os;
    try {
      std::vector<std::string> bad = polytope_property_violations(classes[i], opt.seed);
      try {
        classify_2d(classes[i]);
      } catch (const Error& e) {
        bad.push_back(std::string("classify_2d: ") + e.what());
      }
      os << "polygon " << i << " (" << classes[i].vertices().size() << " vertices, "
         << lattice_points(classes[i]).size() << " points): ";
      if (bad.empty()) {
        os << "ok\n";
      } else {
        os << bad.size() << " violations\n";
        for (const auto& b : bad) os << "  ! " << b << "\n";
        cls_violations[i] = static_cast<long>(bad.size());
      }
    } catch (const std::exception& ex) {
      os << "polygon " << i << ": error: " << ex.what() << "\n";
      cls_violations[i] = 1;
    }
    cls_text[i] = os.str();
  }
  for (int i = 0; i < nc; ++i) {
    text << cls_text[i];
    res.violations += cls_violations[i];
  }

  text << res.polygon_classes << " polygon classes; " << res.violations << " violations\n";
  res.text = text.str();
  return res;
}

}  // namespace demroot
