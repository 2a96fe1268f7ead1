// demroot: exact analysis of Demazure roots, reductivity criteria and
// decompositions for complete fans and reflexive polytopes.
#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "demroot/runtime.hpp"
#include "demroot/verify.hpp"

namespace {

using namespace demroot;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string format = "json";
  int jobs = omp_get_max_threads();
  unsigned long seed = 12345;
  int box = 3;
  std::string corpus_path;
  bool rays = false;
};

// reports for a list of documents, computed in parallel, printed in order
int run_documents(const std::vector<InputDocument>& docs, const Options& opt) {
  const int n = static_cast<int>(docs.size());
  std::vector<std::string> out(n);
  std::vector<int> codes(n, 0);
#pragma omp parallel for schedule(dynamic) num_threads(runtime::jobs())
  for (int i = 0; i < n; ++i) {
    try {
      AnalysisReport rep = analyze_input(docs[i]);
      out[i] = opt.format == "text" ? emit_report_text(rep) : emit_report(rep);
      if (!rep.violations.empty()) codes[i] = 4;
    } catch (const Error& e) {
      out[i] = "";
      codes[i] = exit_code(e.kind);
      std::ostringstream os;
      os << docs[i].label << ": " << error_kind_name(e.kind) << ": " << e.what() << "\n";
      out[i] = os.str();  // reported on stderr below
      codes[i] = -codes[i];
    }
  }
  int status = 0;
  for (int i = 0; i < n; ++i) {
    if (codes[i] < 0) {
      std::cerr << out[i];
      status = std::max(status, -codes[i]);
    } else {
      std::cout << out[i];
      status = std::max(status, codes[i]);
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure roots and reductivity analysis for toric fans and reflexive polytopes"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("DEMROOT_FORMAT");
  app.add_option("--jobs", opt.jobs, "parallelism degree")->envname("DEMROOT_JOBS");
  app.add_option("--seed", opt.seed, "seed for randomized property checks")
      ->envname("DEMROOT_SEED");
  app.add_option("--box", opt.box, "coordinate box for the 2d enumeration")
      ->envname("DEMROOT_BOX");
  app.add_option("--corpus", opt.corpus_path, "extra corpus file for verify")
      ->envname("DEMROOT_CORPUS");

  std::vector<std::string> files;
  std::string file_a, file_b;

  auto* analyze = app.add_subcommand("analyze", "full analysis report per input polytope");
  analyze->add_option("files", files)->required()->expected(-1);
  analyze->add_flag("--rays", opt.rays, "treat input as fan ray generators");

  auto* roots_cmd = app.add_subcommand("roots", "list the Demazure roots");
  roots_cmd->add_option("files", files)->required()->expected(-1);
  roots_cmd->add_flag("--rays", opt.rays, "treat input as fan ray generators");

  auto* criteria_cmd = app.add_subcommand("criteria", "reductivity criteria report");
  criteria_cmd->add_option("files", files)->required()->expected(-1);
  criteria_cmd->add_flag("--rays", opt.rays, "treat input as fan ray generators");

  auto* decompose = app.add_subcommand("decompose", "product / centrally symmetric splits");
  decompose->add_option("files", files)->required()->expected(-1);

  auto* iso = app.add_subcommand("iso", "search a unimodular map between two polytopes");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();

  auto* verify = app.add_subcommand("verify", "run the full property suite over the corpus");

  auto* batch = app.add_subcommand("batch", "stream reports for a multi-polytope file");
  batch->add_option("files", files)->required()->expected(-1);
  batch->add_flag("--rays", opt.rays, "treat input as fan ray generators");

  CLI11_PARSE(app, argc, argv);
  runtime::set_jobs(opt.jobs);

  const auto kind =
      opt.rays ? InputDocument::Kind::FanRays : InputDocument::Kind::PolytopeVertices;

  try {
    if (app.got_subcommand(verify)) {
      VerifyOptions vo;
      vo.jobs = opt.jobs;
      vo.seed = opt.seed;
      vo.box = opt.box;
      if (!opt.corpus_path.empty()) vo.corpus_text = read_file(opt.corpus_path);
      VerifyResult res = run_verify(vo);
      std::cout << res.text;
      return res.violations == 0 ? 0 : 4;
    }
    if (app.got_subcommand(iso)) {
      auto A = LatticePolytope::hull(parse_matrix_document(read_file(file_a), kind).points);
      auto B = LatticePolytope::hull(parse_matrix_document(read_file(file_b), kind).points);
      auto m = lattice_isomorphism(A, B);
      if (!m) {
        std::cout << "none\n";
        return 1;
      }
      std::cout << "found\n";
      for (int i = 0; i < m->mat.rows; ++i) {
        for (int j = 0; j < m->mat.cols; ++j)
          std::cout << (j ? " " : "") << m->mat.at(i, j).get_str();
        std::cout << "\n";
      }
      return 0;
    }

    std::vector<InputDocument> docs;
    for (const auto& f : files) {
      if (app.got_subcommand(batch)) {
        auto batch_docs = parse_batch(read_file(f), kind);
        for (auto& d : batch_docs) {
          d.label = f + ":" + d.label;
          docs.push_back(std::move(d));
        }
      } else {
        auto d = parse_matrix_document(read_file(f), kind);
        if (d.label.rfind("doc", 0) == 0) d.label = f;
        docs.push_back(std::move(d));
      }
    }

    if (app.got_subcommand(roots_cmd)) {
      for (const auto& d : docs) {
        RootSet rs;
        if (d.kind == InputDocument::Kind::FanRays) {
          rs = compute_roots(RaySet::from_generators(d.points));
        } else {
          LatticePolytope P = LatticePolytope::hull(d.points);
          rs = is_reflexive(P) ? roots_of_reflexive(P)
                               : compute_roots(RaySet::normal_fan_rays(P));
        }
        std::cout << d.label << ": " << rs.all.size() << " roots\n";
        for (const Root& r : rs.all)
          std::cout << "  " << to_string(r.m) << "  eta " << to_string(rs.eta_vec(r))
                    << "  " << root_kind_name(r.kind) << "\n";
      }
      return 0;
    }
    if (app.got_subcommand(decompose)) {
      int status = 0;
      for (const auto& d : docs) {
        AnalysisReport rep = analyze_input(d);
        std::cout << rep.input << ":";
        if (rep.projective_factors) {
          std::cout << " product of projective spaces [";
          for (size_t i = 0; i < rep.projective_factors->size(); ++i)
            std::cout << (i ? "," : "") << (*rep.projective_factors)[i].get_str();
          std::cout << "]";
        } else {
          std::cout << " no full product structure";
        }
        if (rep.central)
          std::cout << "; central split k=" << rep.central->split_k
                    << " g_dim=" << (rep.central->g ? rep.central->g->dim() : 0);
        if (rep.span && rep.span->applicable) {
          std::cout << "; semisimple span = product of simplex duals [";
          for (size_t i = 0; i < rep.span->class_sizes.size(); ++i)
            std::cout << (i ? "," : "") << rep.span->class_sizes[i].get_str();
          std::cout << "]";
        }
        std::cout << "\n";
        if (!rep.violations.empty()) status = 4;
      }
      return status;
    }
    if (app.got_subcommand(criteria_cmd) || app.got_subcommand(analyze) ||
        app.got_subcommand(batch)) {
      return run_documents(docs, opt);
    }
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind) << ": " << e.what() << "\n";
    return exit_code(e.kind);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
