#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

#include "iwahori/rational.hpp"

namespace iwahori {

using IVec = std::vector<long long>;
using RVec = std::vector<Rat>;

// Row-major dense matrix. Vectors are rows throughout the library: a lattice
// element with coordinate row c against basis matrix B is the vector c*B.
template <class T>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t r, std::size_t c, T fill = T())
      : rows_(r), cols_(c), data_(r * c, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        T aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out(i, j) += aik * b(k, j);
      }
    return out;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    assert(v.size() == cols_);
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using IMat = Matrix<long long>;
using RMat = Matrix<Rat>;

// row vector * matrix
template <class T, class S>
std::vector<T> vec_mat(const std::vector<T>& v, const Matrix<S>& m) {
  assert(v.size() == m.rows());
  std::vector<T> out(m.cols(), T(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == T(0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * T(m(i, j));
  }
  return out;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IVec ivec_neg(const IVec& a) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline bool ivec_is_zero(const IVec& a) {
  for (auto x : a) if (x != 0) return false;
  return true;
}

inline RVec to_rvec(const IVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

// Gauss-Jordan inverse over Q.
RMat rmat_inverse(const RMat& m);

// Solve x * A = b over Q (x a row vector); returns false if inconsistent.
// When the solution space is positive-dimensional an arbitrary solution is
// produced (free variables set to zero).
bool solve_left(const RMat& a, const RVec& b, RVec& x);

// Smith normal form: U * A * V = D with U, V unimodular, D diagonal with
// d_1 | d_2 | ... Returns D's diagonal (extended with zeros up to min(r,c)).
struct SmithResult {
  IMat u, v, d;
  std::vector<long long> diag;
};
SmithResult smith_normal_form(const IMat& a);

// Row-style Hermite normal form of the lattice spanned by the rows of `a`
// (zero rows dropped). Rows come out in echelon form with positive pivots.
IMat row_hnf(const IMat& a);

// Does the lattice spanned by rows of `h` (an HNF) contain v?  If yes and
// coeffs != nullptr, the integer combination is stored there.
bool hnf_contains(const IMat& h, const IVec& v, IVec* coeffs = nullptr);

// Least k >= 1 with k*v in the row lattice of h; 0 if none exists (v not in
// the Q-span).
long long hnf_denominator(const IMat& h, const RVec& v);

// Integer solution of x * A = b, canonicalized by reduction modulo the
// integer kernel lattice of A (deterministic representative). Empty optional
// if no integer solution exists.
std::optional<IVec> solve_integer_left(const IMat& a, const IVec& b);

}  // namespace iwahori
