#include "demroot/io.hpp"

namespace demroot {

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LatticePolytope weight_simplex() {
  return LatticePolytope::hull(
      {iv({1, 0, 0}), iv({1, 3, 0}), iv({1, 0, 3}), iv({-5, -6, -3})});
}

long pow3(int d) {
  long r = 1;
  for (int i = 0; i < d; ++i) r *= 3;
  return r;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;

  // projective spaces: E_d^* has d^2 + d roots, all semisimple
  for (int d = 1; d <= 4; ++d) {
    CorpusEntry e;
    e.name = "pd-" + std::to_string(d) + "-dual";
    e.polytope = simplex_ed_dual(d);
    e.roots_all = static_cast<long>(d) * d + d;
    e.roots_semisimple = e.roots_all;
    e.roots_unipotent = 0;
    e.aut_dim = Int(static_cast<long>(d) * d + 2 * d);
    e.reductive = true;
    c.push_back(std::move(e));
  }
  for (int d = 2; d <= 4; ++d) {
    CorpusEntry e;
    e.name = "ed-" + std::to_string(d);
    e.polytope = simplex_ed(d);
    c.push_back(std::move(e));  // property-only
  }

  // cubes: 3^d lattice points, 2d roots, aut dim 3d
  for (int d = 2; d <= 4; ++d) {
    CorpusEntry e;
    e.name = "cube-" + std::to_string(d);
    e.polytope = cube(d);
    e.roots_all = 2 * d;
    e.roots_semisimple = 2 * d;
    e.roots_unipotent = 0;
    e.aut_dim = Int(3L * d);
    e.reductive = true;
    e.lattice_point_count = pow3(d);
    c.push_back(std::move(e));
  }

  // cross-polytopes are simplicial for d >= 3, hence root-free
  for (int d = 3; d <= 4; ++d) {
    CorpusEntry e;
    e.name = "cross-" + std::to_string(d);
    e.polytope = cross_polytope(d);
    e.roots_all = 0;
    e.roots_semisimple = 0;
    e.roots_unipotent = 0;
    e.aut_dim = Int(d);
    e.reductive = true;
    c.push_back(std::move(e));
  }

  {
    CorpusEntry e;
    e.name = "weight-1122";
    e.polytope = weight_simplex();
    e.roots_all = 10;
    e.roots_semisimple = 4;
    e.roots_unipotent = 6;
    e.aut_dim = Int(13);
    e.reductive = false;
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "weight-1122-dual";
    e.polytope = dual(weight_simplex()).as_lattice();
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "p2xp1";
    e.polytope = product(simplex_ed_dual(2), segment_e1());
    e.roots_all = 8;  // 6 + 2 from the factors
    e.roots_semisimple = 8;
    e.roots_unipotent = 0;
    e.aut_dim = Int(11);
    e.reductive = true;
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "e1xcross2";
    e.polytope = product(segment_e1(), cross_polytope(2));
    e.roots_all = 2;
    e.roots_semisimple = 2;
    e.roots_unipotent = 0;
    e.aut_dim = Int(5);
    e.reductive = true;
    c.push_back(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "p2xp2";
    e.polytope = product(simplex_ed_dual(2), simplex_ed_dual(2));
    e.roots_all = 12;
    e.roots_semisimple = 12;
    e.roots_unipotent = 0;
    e.aut_dim = Int(16);
    e.reductive = true;
    c.push_back(std::move(e));
  }
  {
    // centrally symmetric, not a product of lines
    CorpusEntry e;
    e.name = "delpezzo-3";
    e.polytope = LatticePolytope::hull({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}),
                                        iv({1, 1, 1}), iv({-1, 0, 0}), iv({0, -1, 0}),
                                        iv({0, 0, -1}), iv({-1, -1, -1})});
    c.push_back(std::move(e));
  }
  {
    // not reflexive; exercises the fan-level path and automorphism machinery
    CorpusEntry e;
    e.name = "asymmetric-2d";
    e.polytope = LatticePolytope::hull({iv({-1, 0}), iv({1, 0}), iv({0, 1}), iv({0, -2})});
    e.expect_reflexive = false;
    c.push_back(std::move(e));
  }
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& bundled_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

}  // namespace demroot
