#include <omp.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "demroot/criteria.hpp"
#include "demroot/runtime.hpp"

namespace demroot {

namespace {

// The polygon sweep works in plain 64-bit integers: coordinates are bounded
// by the enumeration box, so every cross product stays tiny.
using P2 = std::array<long, 2>;

long cross(const P2& o, const P2& a, const P2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// counterclockwise hull (monotone chain); collinear points are dropped
std::vector<P2> hull2d(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n < 3) return pts;
  std::vector<P2> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  const int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool contains(const std::vector<P2>& hull, const P2& p, bool strict) {
  const int n = static_cast<int>(hull.size());
  for (int i = 0; i < n; ++i) {
    long c = cross(hull[i], hull[(i + 1) % n], p);
    if (strict ? c <= 0 : c < 0) return false;
  }
  return true;
}

struct Sweep {
  int box;
  std::vector<P2> grid;  // box lattice points without the origin, lex order

  explicit Sweep(int k) : box(k) {
    for (long x = -k; x <= k; ++x)
      for (long y = -k; y <= k; ++y)
        if (x != 0 || y != 0) grid.push_back({x, y});
  }

  // valid node: full-dimensional, origin strictly inside, and no other
  // interior lattice point
  bool valid(const std::vector<P2>& hull) const {
    if (hull.size() < 3) return false;
    if (!contains(hull, {0, 0}, true)) return false;
    for (const P2& q : grid)
      if (contains(hull, q, true)) return false;
    return true;
  }

  std::vector<P2> key(std::vector<P2> hull) const {
    std::sort(hull.begin(), hull.end());
    return hull;
  }
};

long extgcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long x1, y1;
  long g = extgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long floordiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Canonical form under GL_2(Z): for every edge and reflection, map the edge
// onto the line y = -level with a shear-normalized chart, take the lex-least
// sorted vertex list. Two polygons (with 0 interior) get the same form iff
// they are unimodularly equivalent.
std::vector<P2> canonical_form(const std::vector<P2>& hull) {
  const int n = static_cast<int>(hull.size());
  std::vector<P2> best;
  for (int e = 0; e < n; ++e) {
    const P2& a = hull[e];
    const P2& b = hull[(e + 1) % n];
    long dx = b[0] - a[0], dy = b[1] - a[1];
    long nx = -dy, ny = dx;  // inner normal for a counterclockwise polygon
    {
      long t = std::gcd(std::abs(nx), std::abs(ny));
      nx /= t;
      ny /= t;
    }
    long level = -(nx * a[0] + ny * a[1]);
    // complete the primitive normal to a unimodular matrix
    long rx, ry;
    extgcd(ny, -nx, rx, ry);
    if (rx * ny - ry * nx < 0) {
      rx = -rx;
      ry = -ry;
    }
    for (int flip : {1, -1}) {
      long ux = flip * rx, uy = flip * ry;
      long ta = ux * a[0] + uy * a[1];
      long tb = ux * b[0] + uy * b[1];
      long shear = floordiv(std::min(ta, tb), level);
      std::vector<P2> img;
      img.reserve(n);
      for (const P2& v : hull) {
        long x = ux * v[0] + uy * v[1];
        long y = nx * v[0] + ny * v[1];
        img.push_back({x + shear * y, y});
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
  }
  return best;
}

bool reflexive2d(const std::vector<P2>& hull) {
  const int n = static_cast<int>(hull.size());
  for (int i = 0; i < n; ++i) {
    const P2& a = hull[i];
    const P2& b = hull[(i + 1) % n];
    long nx = -(b[1] - a[1]), ny = b[0] - a[0];
    long t = std::gcd(std::abs(nx), std::abs(ny));
    if ((nx * a[0] + ny * a[1]) != -t) return false;  // level must be one
  }
  return true;
}

}  // namespace

std::vector<LatticePolytope> enumerate_reflexive_2d(int box) {
  require(box >= 1 && box <= 24, ErrorKind::PreconditionFailed,
          "enumeration box must be between 1 and 24");
  Sweep sweep(box);
  const auto& grid = sweep.grid;
  const int n = static_cast<int>(grid.size());
  const int nthreads = runtime::jobs();

  // seeds: every valid triangle and quadrilateral (minimal point sets with 0
  // in the interior have at most four elements)
  std::set<std::vector<P2>> visited;
  std::vector<std::vector<P2>> frontier;
  {
    std::vector<std::vector<std::vector<P2>>> local(n);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          auto h = hull2d({grid[i], grid[j], grid[k]});
          if (sweep.valid(h)) local[i].push_back(h);
          for (int l = k + 1; l < n; ++l) {
            auto h4 = hull2d({grid[i], grid[j], grid[k], grid[l]});
            if (h4.size() == 4 && sweep.valid(h4)) local[i].push_back(h4);
          }
        }
    }
    for (auto& bucket : local)
      for (auto& h : bucket)
        if (visited.insert(sweep.key(h)).second) frontier.push_back(std::move(h));
  }

  // grow polygons one exterior point at a time; the interior-point condition
  // is monotone, so every admissible polygon is reached
  while (!frontier.empty()) {
    const int fsize = static_cast<int>(frontier.size());
    std::vector<std::vector<std::vector<P2>>> children(fsize);
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (int i = 0; i < fsize; ++i) {
      const auto& node = frontier[i];
      for (const P2& p : grid) {
        if (contains(node, p, false)) continue;
        auto grown = node;
        grown.push_back(p);
        auto h = hull2d(grown);
        if (sweep.valid(h)) children[i].push_back(std::move(h));
      }
    }
    std::vector<std::vector<P2>> next;
    for (auto& bucket : children)
      for (auto& h : bucket)
        if (visited.insert(sweep.key(h)).second) next.push_back(std::move(h));
    frontier = std::move(next);
  }

  // classes by canonical form; only reflexive polygons are kept (in two
  // dimensions the unique-interior-point condition already implies it)
  std::set<std::vector<P2>> classes;
  for (const auto& node_key : visited) {
    auto h = hull2d(std::vector<P2>(node_key));
    if (!reflexive2d(h)) continue;
    classes.insert(canonical_form(h));
  }

  std::vector<LatticePolytope> out;
  for (const auto& cls : classes) {
    std::vector<IntVec> pts;
    for (const P2& p : cls) pts.push_back({Int(p[0]), Int(p[1])});
    LatticePolytope rep = LatticePolytope::hull(pts);
    theorem_check(is_reflexive(rep), "polygon class representative not reflexive");
    out.push_back(std::move(rep));
  }
  // dedup oracle: representatives must be pairwise non-isomorphic
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      theorem_check(!lattice_isomorphism(out[i], out[j]).has_value(),
                    "two polygon classes are unimodularly equivalent");
  return out;
}

}  // namespace demroot
