#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "errors.hpp"

namespace tenfold {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Entrywise max-norm; every tolerance in the library is stated in it.
template <typename Derived>
double max_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

inline double hermiticity_residual(const CMat& h) { return max_norm(h - h.adjoint()); }

inline double unitarity_residual(const CMat& u) {
  return max_norm(u.adjoint() * u - CMat::Identity(u.rows(), u.cols()));
}

inline void require_square(const CMat& m, Eigen::Index n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(n) + "x" +
                          std::to_string(n) + " matrix, got " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
}

inline void require_unitary(const CMat& u, double tol, const char* what) {
  if (u.rows() != u.cols()) throw InvalidArgument(std::string(what) + ": matrix is not square");
  const double r = unitarity_residual(u);
  if (r > tol)
    throw NonUnitary(std::string(what) + ": matrix is not unitary (residual " + std::to_string(r) +
                     ")");
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline RMat kron(const RMat& a, const RMat& b) {
  RMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace pauli {
inline CMat id() { return CMat::Identity(2, 2); }
inline CMat x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline CMat y() {
  CMat m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}
inline CMat z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
/// [[0,-1],[1,0]] = -i*sigma_y
inline CMat eps() {
  CMat m(2, 2);
  m << 0, -1, 1, 0;
  return m;
}
}  // namespace pauli

/// Wrap an angle to (-pi, pi].
inline double wrap_phase(double a) {
  a = std::remainder(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  return a;
}

}  // namespace tenfold
