// Benchmark of the OpenMP enumeration kernels against their serial reference
// implementations: lattice point scans over dilated polytopes and the 2d
// reflexive polygon sweep.
#include <omp.h>

#include <chrono>
#include <iostream>

#include "demroot/criteria.hpp"
#include "demroot/runtime.hpp"

using namespace demroot;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

LatticePolytope dilate(const LatticePolytope& P, long k) {
  std::vector<IntVec> verts;
  for (const auto& v : P.vertices()) verts.push_back(scale(Int(k), v));
  return LatticePolytope::hull(verts);
}

void bench_scan(const std::string& name, const LatticePolytope& P, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  auto serial = lattice_points_serial(P);
  auto t1 = std::chrono::steady_clock::now();
  runtime::set_jobs(jobs);
  auto parallel = lattice_points(P);
  auto t2 = std::chrono::steady_clock::now();
  runtime::set_jobs(1);
  const double ts = seconds(t0, t1), tp = seconds(t1, t2);
  std::cout << name << ": " << serial.size() << " points, serial " << ts << " s, parallel("
            << jobs << ") " << tp << " s, speedup " << (tp > 0 ? ts / tp : 0)
            << (serial == parallel ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = omp_get_max_threads();
  if (argc > 1) jobs = std::atoi(argv[1]);
  std::cout << "jobs: " << jobs << "\n";

  bench_scan("cross4 x12", dilate(cross_polytope(4), 12), jobs);
  bench_scan("cube3 x40", dilate(cube(3), 40), jobs);
  bench_scan("weight-like simplex x12",
             dilate(LatticePolytope::hull({{Int(1), Int(0), Int(0)},
                                           {Int(1), Int(3), Int(0)},
                                           {Int(1), Int(0), Int(3)},
                                           {Int(-5), Int(-6), Int(-3)}}),
                    12),
             jobs);

  {
    auto t0 = std::chrono::steady_clock::now();
    runtime::set_jobs(1);
    auto serial = enumerate_reflexive_2d(3);
    auto t1 = std::chrono::steady_clock::now();
    runtime::set_jobs(jobs);
    auto parallel = enumerate_reflexive_2d(3);
    auto t2 = std::chrono::steady_clock::now();
    runtime::set_jobs(1);
    bool same = serial.size() == parallel.size();
    for (size_t i = 0; same && i < serial.size(); ++i) same = serial[i] == parallel[i];
    std::cout << "polygon sweep: " << serial.size() << " classes, serial " << seconds(t0, t1)
              << " s, parallel(" << jobs << ") " << seconds(t1, t2) << " s"
              << (same ? "" : "  MISMATCH") << "\n";
  }
  return 0;
}
