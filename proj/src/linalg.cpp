#include "iwahori/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace iwahori {

RMat rmat_inverse(const RMat& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("rmat_inverse: not square");
  RMat a = m;
  RMat inv = RMat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("rmat_inverse: singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rat d = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool solve_left(const RMat& a, const RVec& b, RVec& x) {
  // Solve x*A = b  <=>  A^T x^T = b^T; Gaussian elimination on A^T.
  std::size_t n = a.rows(), m = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_left: size mismatch");
  RMat t(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a(j, i);
    t(i, n) = b[i];
  }
  std::vector<long long> pivot_col(m, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && t(piv, c).is_zero()) ++piv;
    if (piv == m) continue;
    if (piv != r)
      for (std::size_t j = 0; j <= n; ++j) std::swap(t(piv, j), t(r, j));
    Rat d = t(r, c);
    for (std::size_t j = 0; j <= n; ++j) t(r, j) = t(r, j) / d;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t(i, c).is_zero()) continue;
      Rat f = t(i, c);
      for (std::size_t j = 0; j <= n; ++j) t(i, j) -= f * t(r, j);
    }
    pivot_col[r] = static_cast<long long>(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (!t(i, n).is_zero()) return false;
  x.assign(n, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = t(i, n);
  return true;
}

namespace {

bool is_lone_pivot(const IMat& a, std::size_t s) {
  for (std::size_t i = s + 1; i < a.rows(); ++i)
    if (a(i, s) != 0) return false;
  for (std::size_t j = s + 1; j < a.cols(); ++j)
    if (a(s, j) != 0) return false;
  return true;
}

}  // namespace

SmithResult smith_normal_form(const IMat& a0) {
  SmithResult res;
  res.d = a0;
  res.u = IMat::identity(a0.rows());
  res.v = IMat::identity(a0.cols());
  IMat& a = res.d;
  std::size_t nmin = std::min(a.rows(), a.cols());

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < res.u.cols(); ++k)
      std::swap(res.u(i, k), res.u(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < res.v.rows(); ++k)
      std::swap(res.v(k, i), res.v(k, j));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, long long f) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(dst, k) += f * a(src, k);
    for (std::size_t k = 0; k < res.u.cols(); ++k)
      res.u(dst, k) += f * res.u(src, k);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, long long f) {
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, dst) += f * a(k, src);
    for (std::size_t k = 0; k < res.v.rows(); ++k)
      res.v(k, dst) += f * res.v(k, src);
  };

  for (std::size_t s = 0; s < nmin; ++s) {
    for (;;) {
      // locate minimal nonzero entry in the trailing block
      long long best = 0;
      std::size_t bi = s, bj = s;
      for (std::size_t i = s; i < a.rows(); ++i)
        for (std::size_t j = s; j < a.cols(); ++j) {
          long long v = std::llabs(a(i, j));
          if (v != 0 && (best == 0 || v < best)) { best = v; bi = i; bj = j; }
        }
      if (best == 0) break;  // trailing block zero
      if (bi != s) swap_rows(bi, s);
      if (bj != s) swap_cols(bj, s);
      for (std::size_t i = s + 1; i < a.rows(); ++i)
        if (a(i, s) != 0) add_row(i, s, -(a(i, s) / a(s, s)));
      for (std::size_t j = s + 1; j < a.cols(); ++j)
        if (a(s, j) != 0) add_col(j, s, -(a(s, j) / a(s, s)));
      if (is_lone_pivot(a, s)) {
        // enforce divisibility d_s | everything below-right
        bool fixed = true;
        for (std::size_t i = s + 1; i < a.rows() && fixed; ++i)
          for (std::size_t j = s + 1; j < a.cols() && fixed; ++j)
            if (a(i, j) % a(s, s) != 0) {
              add_row(s, i, 1);
              fixed = false;
            }
        if (fixed) break;
      }
    }
    if (a(s, s) < 0) {
      for (std::size_t k = 0; k < a.cols(); ++k) a(s, k) = -a(s, k);
      for (std::size_t k = 0; k < res.u.cols(); ++k) res.u(s, k) = -res.u(s, k);
    }
  }
  res.diag.resize(nmin);
  for (std::size_t s = 0; s < nmin; ++s) res.diag[s] = a(s, s);
  return res;
}

IMat row_hnf(const IMat& a0) {
  std::vector<IVec> rows;
  for (std::size_t i = 0; i < a0.rows(); ++i) rows.push_back(a0.row(i));
  std::size_t cols = a0.cols();
  std::vector<IVec> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    // gcd-reduce column c below row r
    for (;;) {
      std::size_t piv = rows.size();
      long long best = 0;
      for (std::size_t i = r; i < rows.size(); ++i) {
        long long v = std::llabs(rows[i][c]);
        if (v != 0 && (best == 0 || v < best)) { best = v; piv = i; }
      }
      if (piv == rows.size()) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        long long f = rows[i][c] / rows[r][c];
        for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][c] < 0)
          for (std::size_t k = 0; k < cols; ++k) rows[r][k] = -rows[r][k];
        // reduce entries above the pivot
        for (std::size_t i = 0; i < r; ++i) {
          long long f = rows[i][c] >= 0 ? rows[i][c] / rows[r][c]
                                        : -((-rows[i][c] + rows[r][c] - 1) / rows[r][c]);
          if (f != 0)
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
        break;
      }
    }
    if (r == rows.size()) break;
  }
  IMat h(r, cols);
  for (std::size_t i = 0; i < r; ++i) h.set_row(i, rows[i]);
  return h;
}

bool hnf_contains(const IMat& h, const IVec& v, IVec* coeffs) {
  IVec rem = v;
  IVec cf(h.rows(), 0);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t c = 0;
    while (c < h.cols() && h(i, c) == 0) ++c;
    if (c == h.cols()) continue;
    if (rem[c] % h(i, c) != 0) {
      // pivot does not divide: keep going only if some later row could fix
      // it -- in echelon form it cannot.
      return false;
    }
    long long f = rem[c] / h(i, c);
    cf[i] = f;
    for (std::size_t k = 0; k < h.cols(); ++k) rem[k] -= f * h(i, k);
  }
  if (!ivec_is_zero(rem)) return false;
  if (coeffs) *coeffs = cf;
  return true;
}

std::optional<IVec> solve_integer_left(const IMat& a, const IVec& b) {
  // x A = b: with U A V = D, set z = x U^{-1}: z D = b V.
  auto snf = smith_normal_form(a);
  IVec c = vec_mat(b, snf.v);
  std::size_t d = a.rows(), n = a.cols();
  std::size_t nmin = std::min(d, n);
  IVec z(d, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long di = i < nmin ? snf.diag[i] : 0;
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      z[i] = c[i] / di;
    }
  }
  IVec x = vec_mat(z, snf.u);
  // kernel rows: rows i of U with diag 0 or beyond nmin
  std::vector<IVec> ker;
  for (std::size_t i = 0; i < d; ++i)
    if (i >= nmin || snf.diag[i] == 0) ker.push_back(snf.u.row(i));
  if (!ker.empty()) {
    IMat km(ker.size(), d);
    for (std::size_t i = 0; i < ker.size(); ++i) km.set_row(i, ker[i]);
    IMat kh = row_hnf(km);
    // reduce x into the canonical box mod the kernel lattice
    for (std::size_t i = 0; i < kh.rows(); ++i) {
      std::size_t piv = 0;
      while (piv < d && kh(i, piv) == 0) ++piv;
      if (piv == d) continue;
      long long p = kh(i, piv);
      long long f = x[piv] >= 0 ? x[piv] / p : -((-x[piv] + p - 1) / p);
      for (std::size_t k2 = 0; k2 < d; ++k2) x[k2] -= f * kh(i, k2);
    }
  }
  return x;
}

long long hnf_denominator(const IMat& h, const RVec& v) {
  // Solve y * H = v over Q; k = lcm of denominators of y.
  RVec y;
  RMat hq(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) hq(i, j) = Rat(h(i, j));
  if (!solve_left(hq, v, y)) return 0;
  long long k = 1;
  for (const Rat& r : y) k = std::lcm(k, r.den());
  return k;
}

}  // namespace iwahori
