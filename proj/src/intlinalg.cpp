#include "demroot/intlinalg.hpp"

#include <algorithm>

namespace demroot {

IntVec IntMat::row(int i) const {
  IntVec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i) {
    require(static_cast<int>(rows[i].size()) == m.cols, ErrorKind::DimensionMismatch,
            "from_rows: ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat mul(const IntMat& A, const IntMat& B) {
  require(A.cols == B.rows, ErrorKind::DimensionMismatch, "mul: shape mismatch");
  IntMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

IntVec mul(const IntMat& A, const IntVec& x) {
  require(A.cols == static_cast<int>(x.size()), ErrorKind::DimensionMismatch, "mul: shape");
  IntVec y(A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
  return y;
}

IntMat transpose(const IntMat& A) {
  IntMat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

std::pair<Int, IntVec> primitive_part(const IntVec& v) {
  require(!is_zero(v), ErrorKind::ZeroVector, "primitive_part: zero vector");
  Int g = 0;
  for (const Int& x : v) {
    Int ax = abs(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
  }
  IntVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
  return {g, w};
}

Int exact_determinant(const IntMat& A) {
  require(A.rows == A.cols, ErrorKind::NotSquare, "exact_determinant: not square");
  const int n = A.rows;
  if (n == 0) return 1;
  IntMat m = A;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

namespace {

// Row/column operations that keep u * a * v = (current matrix) while also
// maintaining vinv = v^(-1).
struct SnfWork {
  IntMat a, u, v, vinv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row i += k * row t
  void add_row(int i, int t, const Int& k) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) += k * a.at(t, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) += k * u.at(t, c);
  }
  // col j += k * col t
  void add_col(int j, int t, const Int& k) {
    for (int r = 0; r < a.rows; ++r) a.at(r, j) += k * a.at(r, t);
    for (int r = 0; r < v.rows; ++r) v.at(r, j) += k * v.at(r, t);
    for (int c = 0; c < vinv.cols; ++c) vinv.at(t, c) -= k * vinv.at(j, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMat& A) {
  SnfWork w;
  w.a = A;
  w.u = IntMat::identity(A.rows);
  w.v = IntMat::identity(A.cols);
  w.vinv = IntMat::identity(A.cols);

  const int n = std::min(A.rows, A.cols);
  int t = 0;
  while (t < n) {
    // smallest nonzero |entry| in the trailing block, lowest index wins ties
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < A.rows; ++i)
      for (int j = t; j < A.cols; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    const Int p = w.a.at(t, t);
    bool leftover = false;
    for (int i = t + 1; i < A.rows; ++i) {
      if (w.a.at(i, t) == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), w.a.at(i, t).get_mpz_t(), p.get_mpz_t());
      if (q != 0) w.add_row(i, t, -q);
      if (w.a.at(i, t) != 0) leftover = true;
    }
    for (int j = t + 1; j < A.cols; ++j) {
      if (w.a.at(t, j) == 0) continue;
      Int q;
      mpz_tdiv_q(q.get_mpz_t(), w.a.at(t, j).get_mpz_t(), p.get_mpz_t());
      if (q != 0) w.add_col(j, t, -q);
      if (w.a.at(t, j) != 0) leftover = true;
    }
    if (leftover) continue;  // smaller pivot now exists

    // divisibility d_t | trailing block
    int bi = -1;
    for (int i = t + 1; i < A.rows && bi < 0; ++i)
      for (int j = t + 1; j < A.cols; ++j)
        if (w.a.at(i, j) % p != 0) {
          bi = i;
          break;
        }
    if (bi >= 0) {
      w.add_row(t, bi, 1);
      continue;
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
    ++t;
  }

  SmithNormalForm out;
  out.rank = t;
  out.d = w.a;
  out.u = w.u;
  out.v = w.v;
  out.vinv = w.vinv;
  return out;
}

std::vector<Int> SmithNormalForm::divisors() const {
  std::vector<Int> ds;
  for (int i = 0; i < rank; ++i) ds.push_back(d.at(i, i));
  return ds;
}

AffineBasis affine_lattice_basis(const std::vector<IntVec>& points) {
  require(!points.empty(), ErrorKind::PreconditionFailed, "affine_lattice_basis: empty");
  AffineBasis out;
  out.origin = points[0];
  std::vector<IntVec> diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    IntVec d = sub(points[i], out.origin);
    if (!is_zero(d)) diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return out;
  SmithNormalForm snf = smith_normal_form(IntMat::from_rows(diffs));
  // rows of vinv form a Z-basis of Z^d whose first `rank` rows span the
  // saturation lin(diffs) cap Z^d
  for (int i = 0; i < snf.rank; ++i) out.basis.push_back(snf.vinv.row(i));
  return out;
}

std::optional<IntVec> affine_coordinates(const AffineBasis& ab, const IntVec& p) {
  IntVec x = sub(p, ab.origin);
  if (ab.basis.empty()) {
    if (is_zero(x)) return IntVec{};
    return std::nullopt;
  }
  auto t = span_coordinates(ab.basis, to_rat(x));
  if (!t || !all_integral(*t)) return std::nullopt;
  return to_int(*t);
}

// ---- rational elimination ----

RatMat rat_from_int(const IntMat& A) {
  RatMat M(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = Rat(A.at(i, j));
  return M;
}

RatVec mul(const RatMat& A, const RatVec& x) {
  require(A.cols == static_cast<int>(x.size()), ErrorKind::DimensionMismatch, "mul: shape");
  RatVec y(A.rows, Rat(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] += A.at(i, j) * x[j];
  return y;
}

RatMat mul(const RatMat& A, const RatMat& B) {
  require(A.cols == B.rows, ErrorKind::DimensionMismatch, "mul: shape");
  RatMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
    }
  return C;
}

int rat_rank(RatMat m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(piv, j));
    for (int i = rank + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / m.at(rank, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

int rank_of(const std::vector<IntVec>& vecs) {
  if (vecs.empty()) return 0;
  RatMat m(static_cast<int>(vecs.size()), static_cast<int>(vecs[0].size()));
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j < vecs[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = Rat(vecs[i][j]);
  return rat_rank(std::move(m));
}

std::optional<RatVec> solve_square(const RatMat& A, const RatVec& b) {
  require(A.rows == A.cols && A.rows == static_cast<int>(b.size()), ErrorKind::DimensionMismatch,
          "solve_square: shape");
  const int n = A.rows;
  RatMat m(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, n) = b[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j <= n; ++j) std::swap(m.at(col, j), m.at(piv, j));
    for (int i = 0; i < n; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / m.at(col, col);
      for (int j = col; j <= n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  RatVec x(n);
  for (int i = 0; i < n; ++i) x[i] = m.at(i, n) / m.at(i, i);
  return x;
}

std::optional<RatMat> rat_inverse(const RatMat& A) {
  require(A.rows == A.cols, ErrorKind::NotSquare, "rat_inverse: not square");
  const int n = A.rows;
  RatMat m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, n + i) = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(m.at(col, j), m.at(piv, j));
    Rat p = m.at(col, col);
    for (int j = 0; j < 2 * n; ++j) m.at(col, j) /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < 2 * n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = m.at(i, n + j);
  return inv;
}

std::optional<IntVec> kernel_primitive(const RatMat& A) {
  const int n = A.rows, d = A.cols;
  RatMat m = A;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < d && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < d; ++j) std::swap(m.at(r, j), m.at(piv, j));
    for (int i = 0; i < n; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / m.at(r, col);
      for (int j = col; j < d; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (d - r != 1) return std::nullopt;
  std::vector<bool> is_pivot(d, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  RatVec x(d, Rat(0));
  x[free_col] = 1;
  for (int i = r - 1; i >= 0; --i) {
    int c = pivot_col[i];
    Rat s = -m.at(i, free_col) * x[free_col];
    x[c] = s / m.at(i, c);
  }
  // clear denominators, then make primitive
  Int lcm = 1;
  for (const Rat& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  IntVec v(d);
  for (int i = 0; i < d; ++i) {
    Rat q = x[i] * Rat(lcm);
    v[i] = q.get_num();
  }
  return primitive_part(v).second;
}

std::optional<RatVec> span_coordinates(const std::vector<IntVec>& basis, const RatVec& x) {
  require(!basis.empty(), ErrorKind::PreconditionFailed, "span_coordinates: empty basis");
  const int k = static_cast<int>(basis.size());
  const int d = static_cast<int>(basis[0].size());
  RatMat m(d, k + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < k; ++j) m.at(i, j) = Rat(basis[j][i]);
    m.at(i, k) = x[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < k && r < d; ++col) {
    int piv = -1;
    for (int i = r; i < d; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j <= k; ++j) std::swap(m.at(r, j), m.at(piv, j));
    for (int i = 0; i < d; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) / m.at(r, col);
      for (int j = col; j <= k; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  require(r == k, ErrorKind::PreconditionFailed, "span_coordinates: basis not independent");
  for (int i = r; i < d; ++i)
    if (m.at(i, k) != 0) return std::nullopt;  // x outside the span
  RatVec t(k, Rat(0));
  for (int i = 0; i < r; ++i) t[pivot_col[i]] = m.at(i, k) / m.at(i, pivot_col[i]);
  return t;
}

}  // namespace demroot
