#pragma once

#include <sstream>
#include <string>

#include "truncata/eigen_support.hpp"
#include "truncata/errors.hpp"

namespace truncata {

template <typename S>
DenseMat<S> identity(Eigen::Index n) {
  return DenseMat<S>::Identity(n, n);
}

template <typename S>
DenseMat<S> zero(Eigen::Index rows, Eigen::Index cols) {
  return DenseMat<S>::Zero(rows, cols);
}

template <typename S>
bool is_zero(const DenseMat<S>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <typename S>
bool is_identity(const DenseMat<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == j ? !m(i, j).is_one() : !m(i, j).is_zero()) return false;
    }
  return true;
}

template <typename S>
bool is_diagonal(const DenseMat<S>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

/// Tensor (Kronecker) product with index convention (i (x) j) -> i*cols(B)+j.
template <typename S>
DenseMat<S> kron(const DenseMat<S>& a, const DenseMat<S>& b) {
  DenseMat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

template <typename S>
DenseMat<S> comm(const DenseMat<S>& a, const DenseMat<S>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw ShapeError("comm: operands must be square of equal dimension");
  return a * b - b * a;
}

/// Twisted commutator a*b - t*b*a.
template <typename S>
DenseMat<S> qcomm(const DenseMat<S>& a, const DenseMat<S>& b, const S& t) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw ShapeError("qcomm: operands must be square of equal dimension");
  DenseMat<S> ba = b * a;
  for (Eigen::Index j = 0; j < ba.cols(); ++j)
    for (Eigen::Index i = 0; i < ba.rows(); ++i) ba(i, j) *= t;
  return a * b - ba;
}

/// Exact inverse by Gauss-Jordan elimination, pivoting on the first nonzero
/// entry of each column. Throws SingularMatrixError carrying the failing
/// column.
template <typename S>
DenseMat<S> exact_inverse(const DenseMat<S>& m) {
  if (m.rows() != m.cols()) throw ShapeError("exact_inverse: matrix not square");
  const Eigen::Index n = m.rows();
  DenseMat<S> a = m;
  DenseMat<S> inv = identity<S>(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < n; ++row)
      if (!a(row, col).is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw SingularMatrixError(static_cast<int>(col));
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const S p = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || a(row, col).is_zero()) continue;
      const S f = a(row, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(row, j) -= f * a(col, j);
        inv(row, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

template <typename S>
DenseMat<S> mat_pow(const DenseMat<S>& m, long e) {
  if (m.rows() != m.cols()) throw ShapeError("mat_pow: matrix not square");
  if (e < 0) return mat_pow(exact_inverse(m), -e);
  DenseMat<S> r = identity<S>(m.rows());
  DenseMat<S> b = m;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

/// exp of a nilpotent matrix as the finite sum 1 + m + m^2/2! + ...
/// Throws if m is not nilpotent (no zero power up to dim).
template <typename S>
DenseMat<S> exp_nilpotent(const DenseMat<S>& m) {
  if (m.rows() != m.cols()) throw ShapeError("exp_nilpotent: matrix not square");
  DenseMat<S> term = identity<S>(m.rows());
  DenseMat<S> sum = term;
  for (long k = 1; k <= m.rows(); ++k) {
    S inv_k = S(1);
    inv_k /= S(static_cast<int>(k));
    term = term * m;  // term = m^k / (k-1)!
    for (Eigen::Index j = 0; j < term.cols(); ++j)
      for (Eigen::Index i = 0; i < term.rows(); ++i) term(i, j) *= inv_k;
    if (is_zero(term)) return sum;
    sum += term;
  }
  throw Error("exp_nilpotent: argument is not nilpotent");
}

template <typename S>
DenseMat<S> scalar_mul(const S& c, const DenseMat<S>& m) {
  DenseMat<S> r = m;
  for (Eigen::Index j = 0; j < r.cols(); ++j)
    for (Eigen::Index i = 0; i < r.rows(); ++i) r(i, j) *= c;
  return r;
}

/// Nested bracket list, e.g. "[[1, 1/2], [0, 1]]".
template <typename S>
std::string mat_str(const DenseMat<S>& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

// Expression-friendly forwarding: any Eigen expression evaluates once and
// reuses the dense-matrix implementations above.

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& e) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return is_zero(m);
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& e) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return is_identity(m);
}

template <typename Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& e) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return is_diagonal(m);
}

template <typename DA, typename DB>
DenseMat<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a,
                                   const Eigen::MatrixBase<DB>& b) {
  const DenseMat<typename DA::Scalar> am = a.derived();
  const DenseMat<typename DB::Scalar> bm = b.derived();
  return kron(am, bm);
}

template <typename DA, typename DB>
DenseMat<typename DA::Scalar> comm(const Eigen::MatrixBase<DA>& a,
                                   const Eigen::MatrixBase<DB>& b) {
  const DenseMat<typename DA::Scalar> am = a.derived();
  const DenseMat<typename DB::Scalar> bm = b.derived();
  return comm(am, bm);
}

template <typename DA, typename DB>
DenseMat<typename DA::Scalar> qcomm(const Eigen::MatrixBase<DA>& a,
                                    const Eigen::MatrixBase<DB>& b,
                                    const typename DA::Scalar& t) {
  const DenseMat<typename DA::Scalar> am = a.derived();
  const DenseMat<typename DB::Scalar> bm = b.derived();
  return qcomm(am, bm, t);
}

template <typename Derived>
DenseMat<typename Derived::Scalar> exact_inverse(const Eigen::MatrixBase<Derived>& e) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return exact_inverse(m);
}

template <typename Derived>
DenseMat<typename Derived::Scalar> mat_pow(const Eigen::MatrixBase<Derived>& e, long k) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return mat_pow(m, k);
}

template <typename Derived>
DenseMat<typename Derived::Scalar> exp_nilpotent(const Eigen::MatrixBase<Derived>& e) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return exp_nilpotent(m);
}

template <typename Derived>
DenseMat<typename Derived::Scalar> scalar_mul(const typename Derived::Scalar& c,
                                              const Eigen::MatrixBase<Derived>& e) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return scalar_mul(c, m);
}

template <typename Derived>
std::string mat_str(const Eigen::MatrixBase<Derived>& e) {
  const DenseMat<typename Derived::Scalar> m = e.derived();
  return mat_str(m);
}

}  // namespace truncata
