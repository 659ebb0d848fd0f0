#pragma once

#include <cmath>
#include <utility>

#include "linalg.hpp"

namespace tenfold {

inline constexpr double kAntisymmetryTol = 1e-10;

/// Pfaffian of a real antisymmetric matrix.
///
/// Skew-symmetric Gaussian elimination (Parlett-Reid): at each step the largest
/// entry below the diagonal in column k is pivoted into row k+1, every swap
/// flips the sign, and the pivot A(k,k+1) is accumulated. The result satisfies
/// Pf(A)^2 = det(A).
inline double pfaffian(RMat a) {
  if (a.rows() != a.cols()) throw NotAntisymmetric("pfaffian: matrix is not square");
  const double asym = max_norm(a + a.transpose());
  if (asym >= kAntisymmetryTol)
    throw NotAntisymmetric("pfaffian: |A + A^T|_max = " + std::to_string(asym));
  const Eigen::Index n = a.rows();
  if (n % 2 == 1) return 0.0;
  double pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    Eigen::Index kp = k + 1;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == 0.0) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index rest = n - k - 2;
      const RVec tau = a.row(k).tail(rest).transpose() / a(k, k + 1);
      const RVec col = a.col(k + 1).tail(rest);
      a.bottomRightCorner(rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

}  // namespace tenfold
