#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it checks.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
constexpr double pi = 3.14159265358979323846;

/// Pfaffian as the signed sum over perfect matchings (recursive expansion on row 0).
inline double pfaffian_matchings(const RMat& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1.0;
  if (n % 2) return 0.0;
  double total = 0.0;
  for (Eigen::Index j = 1; j < n; ++j) {
    if (a(0, j) == 0.0) continue;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index r = 1; r < n; ++r)
      if (r != j) keep.push_back(r);
    RMat minor(n - 2, n - 2);
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < keep.size(); ++c) minor(r, c) = a(keep[r], keep[c]);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    total += sign * a(0, j) * pfaffian_matchings(minor);
  }
  return total;
}

/// Projector onto the negative-energy eigenvectors.
inline CMat filled_projector(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const auto& v = es.eigenvectors();
  CMat p = CMat::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    if (es.eigenvalues()(i) < 0) p += v.col(i) * v.col(i).adjoint();
  return p;
}

/// Chern number as the midpoint-rule integral of Tr(P [dP/dkx, dP/dky]) / (2 pi i),
/// derivatives by central differences.
inline double chern_quadrature(const std::function<CMat(double, double)>& h, int n = 120,
                               double step = 1e-5) {
  const double dk = 2 * pi / n;
  cplx total = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double kx = (a + 0.5) * dk, ky = (b + 0.5) * dk;
      const CMat p = filled_projector(h(kx, ky));
      const CMat px = (filled_projector(h(kx + step, ky)) - filled_projector(h(kx - step, ky))) / (2 * step);
      const CMat py = (filled_projector(h(kx, ky + step)) - filled_projector(h(kx, ky - step))) / (2 * step);
      total += (p * (px * py - py * px)).trace();
    }
  }
  return (total * dk * dk / (cplx(0, 2 * pi))).real();
}

/// Signed number of times the curve z(k), k in [0, 2 pi], crosses the positive real axis.
inline int winding_crossings(const std::function<cplx(double)>& z, int samples = 4001) {
  // Start off the k = 0 axis so no sample lands exactly on a crossing.
  const double k0 = 0.1234;
  int count = 0;
  cplx prev = z(k0);
  for (int i = 1; i <= samples; ++i) {
    const cplx cur = z(k0 + 2 * pi * i / samples);
    const bool crosses = (prev.imag() < 0) != (cur.imag() < 0);
    if (crosses) {
      const double t = prev.imag() / (prev.imag() - cur.imag());
      const double x = prev.real() + t * (cur.real() - prev.real());
      if (x > 0) count += cur.imag() >= 0 ? 1 : -1;
    }
    prev = cur;
  }
  return count;
}

/// Kitaev chain Majorana number from the explicit Nambu -> Majorana basis change
/// W = [[1, 1], [i, -i]] / sqrt(2), in which particle-hole symmetry tau_x K is bare K.
inline int kitaev_majorana(const std::function<CMat(double)>& h) {
  CMat w(2, 2);
  w << 1, 1, cplx(0, 1), cplx(0, -1);
  w /= std::sqrt(2.0);
  double sign = 1.0;
  for (double k : {0.0, pi}) {
    const CMat a = cplx(0, -1) * w * h(k) * w.adjoint();
    sign *= pfaffian_matchings(a.real());
  }
  return sign < 0 ? -1 : 1;
}

// Hand-rolled generators for property tests.

inline CMat random_complex(std::mt19937& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

inline CMat random_hermitian(std::mt19937& rng, Eigen::Index n) {
  const CMat m = random_complex(rng, n);
  return (m + m.adjoint()) / 2.0;
}

inline CMat random_unitary(std::mt19937& rng, Eigen::Index n) {
  Eigen::HouseholderQR<CMat> qr(random_complex(rng, n));
  return qr.householderQ() * CMat::Identity(n, n);
}

inline RMat random_antisymmetric(std::mt19937& rng, Eigen::Index n) {
  std::normal_distribution<double> g(0.0, 1.0);
  RMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g(rng);
  return m - m.transpose();
}

}  // namespace oracle
