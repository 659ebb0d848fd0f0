#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace tenfold::clifford {

inline constexpr int kMaxGenerators = 10;

/// Mutually anticommuting orthogonal complex structures J_1..J_k on R^N:
/// J_i J_j + J_j J_i = -2 delta_ij I.
struct ComplexStructureSet {
  Eigen::Index n = 0;
  std::vector<RMat> j;

  std::size_t size() const { return j.size(); }
  /// 1-based access matching the usual J_1..J_k numbering.
  const RMat& at(std::size_t i) const { return j.at(i - 1); }
};

namespace detail {
inline RMat eps() {
  RMat m(2, 2);
  m << 0, -1, 1, 0;
  return m;
}
inline RMat rho1() {
  RMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace detail

/// Tensor-chain construction J_i = rho1^(i-1) (x) eps (x) I^(k-i), N = 2^k.
inline ComplexStructureSet generate(int k) {
  if (k < 1 || k > kMaxGenerators)
    throw InvalidArgument("clifford::generate: k must be in 1.." + std::to_string(kMaxGenerators));
  ComplexStructureSet set;
  set.n = Eigen::Index{1} << k;
  set.j.reserve(k);
  const RMat id2 = RMat::Identity(2, 2);
  for (int i = 1; i <= k; ++i) {
    RMat m = RMat::Identity(1, 1);
    for (int pos = 1; pos <= k; ++pos) {
      const RMat& factor = pos < i ? detail::rho1() : (pos == i ? detail::eps() : id2);
      m = kron(m, factor);
    }
    set.j.push_back(std::move(m));
  }
  return set;
}

/// max_{i,j} |J_i J_j + J_j J_i + 2 delta_ij I|_max
inline double clifford_residual(const ComplexStructureSet& set) {
  double r = 0.0;
  const RMat id = RMat::Identity(set.n, set.n);
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a; b < set.size(); ++b) {
      RMat anti = set.j[a] * set.j[b] + set.j[b] * set.j[a];
      if (a == b) anti += 2.0 * id;
      r = std::max(r, max_norm(anti));
    }
  }
  return r;
}

inline double orthogonality_residual(const RMat& m) {
  return max_norm(m.transpose() * m - RMat::Identity(m.rows(), m.cols()));
}

/// Generator of the geodesic through index i: J_1 for i = 0, else -J_i J_{i+1}.
inline RMat geodesic_generator(const ComplexStructureSet& set, int i) {
  if (i < 0) throw InvalidArgument("geodesic index must be >= 0");
  if (i == 0) {
    if (set.size() < 1) throw InvalidArgument("geodesic i=0 needs J_1");
    return set.at(1);
  }
  if (static_cast<std::size_t>(i) + 1 > set.size())
    throw InvalidArgument("geodesic index " + std::to_string(i) + " needs J_" +
                          std::to_string(i + 1) + " but the set has " +
                          std::to_string(set.size()) + " elements");
  return -set.at(i) * set.at(i + 1);
}

/// L(lambda): exp(lambda J_1) for i = 0, J_i exp(lambda A_i) otherwise.
/// Both exponentials are evaluated as cos + sin since the generators square to -I.
inline RMat geodesic(const ComplexStructureSet& set, int i, double lambda) {
  const RMat a = geodesic_generator(set, i);
  const RMat id = RMat::Identity(set.n, set.n);
  RMat e = std::cos(lambda) * id + std::sin(lambda) * a;
  if (i == 0) return e;
  return set.at(i) * e;
}

inline double midpoint_residual(const ComplexStructureSet& set, int i) {
  const RMat mid = geodesic(set, i, kPi / 2);
  const RMat& target = set.at(static_cast<std::size_t>(i) + 1);
  return max_norm(mid - target);
}

struct StructureCheck {
  bool ok = false;
  double orthogonality = 0.0;
  double square = 0.0;        // |J^2 + I|_max
  double anticommutator = 0.0;  // max over prefix of |J P + P J|_max
};

/// Is J a complex structure anticommuting with every element of the prefix?
inline StructureCheck is_complex_structure(const RMat& j, std::span<const RMat> prefix,
                                           double tol = 1e-10) {
  if (j.rows() != j.cols()) throw InvalidArgument("complex structure must be square");
  StructureCheck c;
  const RMat id = RMat::Identity(j.rows(), j.cols());
  c.orthogonality = orthogonality_residual(j);
  c.square = max_norm(j * j + id);
  for (const RMat& p : prefix) {
    if (p.rows() != j.rows() || p.cols() != j.cols())
      throw InvalidArgument("prefix element shape differs from J");
    c.anticommutator = std::max(c.anticommutator, max_norm(j * p + p * j));
  }
  c.ok = c.orthogonality < tol && c.square < tol && c.anticommutator < tol;
  return c;
}

}  // namespace tenfold::clifford
