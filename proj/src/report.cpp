#include <sstream>

#include <json.hpp>

#include "demroot/report.hpp"

namespace demroot {

namespace {

using Json = nlohmann::ordered_json;

// run one pipeline stage; theorem-level failures go to the violation list,
// anything else propagates
template <typename F>
void stage(AnalysisReport* rep, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (exit_code(e.kind) != 4) throw;
    rep->violations.push_back(e.what());
  }
}

}  // namespace

AnalysisReport analyze_rays(const RaySet& rays, const std::string& label) {
  AnalysisReport rep;
  rep.input = label;
  rep.dim = rays.dim;
  rep.from_rays = true;
  rep.roots = compute_roots(rays);
  rep.aut = aut_summary(rep.roots, rays.dim);
  stage(&rep, [&] { rep.degree_classes = cox_classes(rays, rep.roots); });
  stage(&rep, [&] { rep.criteria = check_fan_criteria(rays, rep.roots); });
  stage(&rep, [&] {
    rep.projective_factors = detect_product_projective(rep.roots, rep.degree_classes, rays.dim);
  });
  stage(&rep, [&] { rep.bounds = bound_checks(rep.roots, rays.dim); });
  return rep;
}

AnalysisReport analyze_polytope(const LatticePolytope& P, const std::string& label) {
  require(P.origin_interior(), ErrorKind::OriginNotInterior,
          label + ": the origin is not an interior point");
  AnalysisReport rep;
  rep.input = label;
  rep.dim = P.dim();
  rep.reflexive = is_reflexive(P);

  if (*rep.reflexive) {
    rep.roots = roots_of_reflexive(P);
    stage(&rep, [&] { rep.criteria = check_reflexive_criteria(P); });
  } else {
    rep.roots = compute_roots(RaySet::normal_fan_rays(P));
    stage(&rep, [&] { rep.criteria = check_fan_criteria(rep.roots.rays, rep.roots); });
  }
  rep.aut = aut_summary(rep.roots, P.dim());
  stage(&rep, [&] { rep.degree_classes = cox_classes(rep.roots.rays, rep.roots); });
  stage(&rep, [&] {
    rep.projective_factors = detect_product_projective(rep.roots, rep.degree_classes, P.dim());
  });
  stage(&rep, [&] {
    rep.bounds = bound_checks(rep.roots, P.dim(), *rep.reflexive ? &P : nullptr);
  });
  if (*rep.reflexive) {
    stage(&rep, [&] {
      RootBasis basis = build_root_basis(rep.roots, rep.degree_classes);
      rep.span = semisimple_span_check(P, basis);
    });
    if (P.centrally_symmetric()) stage(&rep, [&] { rep.central = central_decompose(P); });
  }
  return rep;
}

AnalysisReport analyze_input(const InputDocument& doc) {
  if (doc.kind == InputDocument::Kind::FanRays)
    return analyze_rays(RaySet::from_generators(doc.points), doc.label);
  LatticePolytope P = LatticePolytope::hull(doc.points);
  return analyze_polytope(P, doc.label);
}

namespace {

Json jint(const Int& v) { return v.get_str(); }
Json jint(long v) { return std::to_string(v); }
Json jint(int v) { return std::to_string(v); }

Json jvec(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

}  // namespace

std::string emit_report(const AnalysisReport& rep) {
  Json j;
  j["input"] = rep.input;
  j["dim"] = jint(rep.dim);
  if (rep.reflexive)
    j["reflexive"] = *rep.reflexive;
  else
    j["reflexive"] = nullptr;

  {
    Json r;
    r["all"] = jint(static_cast<long>(rep.roots.all.size()));
    r["semisimple"] = jint(static_cast<long>(rep.roots.s.size()));
    r["unipotent"] = jint(static_cast<long>(rep.roots.u.size()));
    Json bk;
    bk["S1"] = jint(static_cast<long>(rep.roots.s1.size()));
    bk["S2"] = jint(static_cast<long>(rep.roots.s2.size()));
    bk["U1"] = jint(static_cast<long>(rep.roots.u1.size()));
    bk["U2"] = jint(static_cast<long>(rep.roots.u2.size()));
    r["by_kind"] = bk;
    j["roots"] = r;
  }
  {
    Json em = Json::array();
    for (const Root& root : rep.roots.all) {
      Json e;
      e["m"] = jvec(root.m);
      e["eta"] = jint(root.eta);
      e["kind"] = root_kind_name(root.kind);
      em.push_back(e);
    }
    j["eta_map"] = em;
  }
  {
    Json dc;
    Json cg;
    Json tor = Json::array();
    for (const Int& t : rep.degree_classes.torsion) tor.push_back(t.get_str());
    cg["torsion"] = tor;
    cg["free_rank"] = jint(rep.degree_classes.free_rank);
    dc["class_group"] = cg;
    Json degs = Json::array();
    for (const auto& d : rep.degree_classes.degrees) degs.push_back(jvec(d));
    dc["degrees"] = degs;
    Json cls = Json::array();
    for (int i = 0; i < rep.degree_classes.s; ++i) {
      Json c;
      Json members = Json::array();
      for (int t : rep.degree_classes.classes[i]) members.push_back(jint(t));
      c["rays"] = members;
      c["monomials"] = jint(rep.degree_classes.monomial_counts.empty()
                                ? 0L
                                : rep.degree_classes.monomial_counts[i]);
      cls.push_back(c);
    }
    dc["classes"] = cls;
    Json mk;
    mk["p"] = jint(rep.degree_classes.p);
    mk["q"] = jint(rep.degree_classes.q);
    mk["r"] = jint(rep.degree_classes.r);
    mk["s"] = jint(rep.degree_classes.s);
    dc["markers"] = mk;
    j["degree_classes"] = dc;
  }
  {
    Json cr;
    Json fan;
    fan["a"] = rep.criteria.fan_a;
    fan["b"] = rep.criteria.fan_b;
    fan["c"] = rep.criteria.fan_c;
    fan["ray_sum_zero"] = rep.criteria.ray_sum_zero;
    cr["fan"] = fan;
    if (rep.criteria.has_reflexive) {
      Json eq;
      const char* eqnames = "abcdefg";
      for (int i = 0; i < 7; ++i) eq[std::string(1, eqnames[i])] = rep.criteria.equivalent[i];
      cr["reflexive_equivalent"] = eq;
      Json su;
      const char* sunames[7] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
      for (int i = 0; i < 7; ++i) su[sunames[i]] = rep.criteria.sufficient[i];
      su["smooth_fano"] = rep.criteria.p_smooth;
      cr["sufficient"] = su;
    } else {
      cr["reflexive_equivalent"] = nullptr;
      cr["sufficient"] = nullptr;
    }
    cr["consistent"] = rep.criteria.consistent && rep.violations.empty();
    j["criteria"] = cr;
  }
  {
    Json aut;
    aut["reductive"] = rep.aut.reductive;
    aut["dim"] = jint(rep.aut.aut_dim);
    j["aut"] = aut;
  }
  {
    Json dec;
    if (rep.projective_factors) {
      Json f = Json::array();
      for (const Int& x : *rep.projective_factors) f.push_back(x.get_str());
      dec["projective_factors"] = f;
    } else {
      dec["projective_factors"] = nullptr;
    }
    if (rep.central) {
      Json c;
      c["k"] = jint(rep.central->split_k);
      c["g_dim"] = jint(rep.central->g ? rep.central->g->dim() : 0);
      c["extremal"] = rep.central->central_equiv[0];
      dec["central"] = c;
    } else {
      dec["central"] = nullptr;
    }
    if (rep.span && rep.span->applicable) {
      Json s;
      Json sizes = Json::array();
      for (const Int& c : rep.span->class_sizes) sizes.push_back(c.get_str());
      s["class_sizes"] = sizes;
      s["verified"] = rep.span->verified;
      dec["semisimple_span"] = s;
    } else {
      dec["semisimple_span"] = nullptr;
    }
    j["decompositions"] = dec;
  }
  {
    Json b;
    b["d"] = jint(rep.bounds.d);
    b["eta_u"] = jint(rep.bounds.eta_u);
    b["eta_r"] = jint(rep.bounds.eta_r);
    b["semisimple"] = jint(rep.bounds.s_count);
    b["roots"] = jint(rep.bounds.r_count);
    b["dim_lin_s"] = jint(rep.bounds.dim_lin_s);
    b["product_of_lines"] = rep.bounds.product_of_lines;
    b["projective_space"] = rep.bounds.projective_space;
    j["bounds"] = b;
  }
  {
    Json v = Json::array();
    for (const auto& s : rep.violations) v.push_back(s);
    j["violations"] = v;
  }
  return j.dump(2) + "\n";
}

std::string emit_report_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << rep.input << ": dim " << rep.dim;
  if (rep.reflexive) os << (*rep.reflexive ? ", reflexive" : ", not reflexive");
  os << ", roots " << rep.roots.all.size() << " (S " << rep.roots.s.size() << ", U "
     << rep.roots.u.size() << ")";
  os << ", aut " << (rep.aut.reductive ? "reductive" : "not reductive") << " dim "
     << rep.aut.aut_dim.get_str();
  if (rep.projective_factors) {
    os << ", product of projective spaces [";
    for (size_t i = 0; i < rep.projective_factors->size(); ++i) {
      if (i) os << ",";
      os << (*rep.projective_factors)[i].get_str();
    }
    os << "]";
  }
  if (rep.central) {
    os << ", central split k=" << rep.central->split_k << " g_dim="
       << (rep.central->g ? rep.central->g->dim() : 0);
  }
  if (!rep.violations.empty()) os << ", VIOLATIONS " << rep.violations.size();
  os << "\n";
  return os.str();
}

}  // namespace demroot
