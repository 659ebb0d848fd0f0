#include <gtest/gtest.h>

#include <random>

#include "tenfold/clifford.hpp"

using namespace tenfold;
using namespace tenfold::clifford;

namespace {
RMat eps2() {
  RMat m(2, 2);
  m << 0, -1, 1, 0;
  return m;
}
RMat rho1() {
  RMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace

TEST(Generate, BaseCases) {
  const auto one = generate(1);
  EXPECT_EQ(one.n, 2);
  EXPECT_EQ(max_norm(one.at(1) - eps2()), 0.0);

  const auto two = generate(2);
  EXPECT_EQ(two.n, 4);
  EXPECT_EQ(max_norm(two.at(1) - kron(eps2(), RMat(RMat::Identity(2, 2)))), 0.0);
  EXPECT_EQ(max_norm(two.at(2) - kron(rho1(), eps2())), 0.0);
  EXPECT_EQ(clifford_residual(two), 0.0);
}

TEST(Generate, EightGeneratorsOnR256) {
  const auto set = generate(8);
  EXPECT_EQ(set.n, 256);
  EXPECT_LT(clifford_residual(set), 1e-12);
  for (const auto& j : set.j) EXPECT_LT(orthogonality_residual(j), 1e-12);
}

TEST(Generate, RejectsOutOfRange) {
  EXPECT_THROW(generate(0), InvalidArgument);
  EXPECT_THROW(generate(kMaxGenerators + 1), InvalidArgument);
}

TEST(Residual, SmallSets) {
  EXPECT_LT(clifford_residual(generate(3)), 1e-13);
  ComplexStructureSet dup{2, {eps2(), eps2()}};
  EXPECT_NEAR(clifford_residual(dup), 2.0, 1e-15);
  ComplexStructureSet single{2, {eps2()}};
  EXPECT_EQ(clifford_residual(single), 0.0);
}

TEST(Geodesic, EndpointsAndMidpoints) {
  const auto set = generate(4);
  const RMat id = RMat::Identity(16, 16);
  EXPECT_LT(max_norm(geodesic(set, 0, 0.0) - id), 1e-12);
  EXPECT_LT(max_norm(geodesic(set, 0, kPi) + id), 1e-12);
  EXPECT_LT(max_norm(geodesic(set, 0, kPi / 2) - set.at(1)), 1e-12);
  EXPECT_LT(max_norm(geodesic(set, 1, kPi / 2) - set.at(2)), 1e-12);
  for (int i = 1; i < 4; ++i) {
    EXPECT_LT(max_norm(geodesic(set, i, 0.0) - set.at(i)), 1e-12);
    EXPECT_LT(max_norm(geodesic(set, i, kPi) + set.at(i)), 1e-12);
  }
}

TEST(Geodesic, PeriodicInLambda) {
  const auto set = generate(5);
  for (int i = 0; i < 4; ++i)
    for (double lambda : {0.3, 1.7, 4.0})
      EXPECT_LT(max_norm(geodesic(set, i, lambda + kTwoPi) - geodesic(set, i, lambda)), 1e-12);
}

TEST(Geodesic, StaysInConstraintSet) {
  const auto set = generate(6);
  const RMat id = RMat::Identity(set.n, set.n);
  for (int i = 1; i < 6; ++i) {
    for (int step = 0; step < 64; ++step) {
      const double lambda = kTwoPi * step / 64;
      const RMat l = geodesic(set, i, lambda);
      EXPECT_LT(max_norm(l * l + id), 1e-12);
      for (int p = 1; p < i; ++p) EXPECT_LT(max_norm(l * set.at(p) + set.at(p) * l), 1e-12);
    }
  }
}

TEST(Geodesic, GeneratorAlgebra) {
  const auto set = generate(6);
  for (int i = 1; i < 6; ++i) {
    const RMat a = geodesic_generator(set, i);
    for (int p = 1; p < i; ++p) EXPECT_LT(max_norm(a * set.at(p) - set.at(p) * a), 1e-12);
    EXPECT_LT(max_norm(a * set.at(i) + set.at(i) * a), 1e-12);
  }
  EXPECT_THROW(geodesic(set, 6, 0.0), InvalidArgument);
}

TEST(Midpoint, ExactIdentity) {
  const auto set = generate(4);
  EXPECT_LT(midpoint_residual(set, 0), 1e-13);
  EXPECT_LT(midpoint_residual(set, 2), 1e-13);
}

TEST(Midpoint, FlagsPerturbedGenerator) {
  auto set = generate(4);
  std::mt19937 rng(4);
  std::normal_distribution<double> g(0.0, 1.0);
  RMat noise(set.n, set.n);
  for (Eigen::Index r = 0; r < set.n; ++r)
    for (Eigen::Index c = 0; c < set.n; ++c) noise(r, c) = g(rng);
  set.j[2] += 1e-3 * noise;
  // The geodesic from J_3 no longer ends on J_4.
  const double r = midpoint_residual(set, 3);
  EXPECT_GT(r, 1e-4);
  EXPECT_LT(r, 1e-1);
  EXPECT_LT(midpoint_residual(set, 0), 1e-13);
}

TEST(Structure, Checks) {
  EXPECT_TRUE(is_complex_structure(eps2(), {}).ok);
  const auto bad = is_complex_structure(rho1(), {});
  EXPECT_FALSE(bad.ok);
  EXPECT_NEAR(bad.square, 2.0, 1e-15);
  const auto set = generate(3);
  EXPECT_TRUE(is_complex_structure(set.at(3), std::span<const RMat>(set.j.data(), 2)).ok);
}

TEST(Structure, NestingForEveryPrefix) {
  const auto set = generate(8);
  for (std::size_t m = 0; m < set.size(); ++m)
    EXPECT_TRUE(is_complex_structure(set.j[m], std::span<const RMat>(set.j.data(), m)).ok) << m;
  // Prefix order matters: J_1 does not anticommute with itself.
  EXPECT_FALSE(is_complex_structure(set.j[0], std::span<const RMat>(set.j.data(), 1)).ok);
}
