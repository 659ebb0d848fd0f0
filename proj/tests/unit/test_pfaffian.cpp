#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "tenfold/pfaffian.hpp"

using namespace tenfold;

TEST(Pfaffian, TwoByTwo) {
  RMat a(2, 2);
  a << 0, 1.7, -1.7, 0;
  EXPECT_DOUBLE_EQ(pfaffian(a), 1.7);
}

TEST(Pfaffian, BlockDiagonalMultiplies) {
  RMat a = RMat::Zero(4, 4);
  a(0, 1) = 2.0;
  a(1, 0) = -2.0;
  a(2, 3) = -3.0;
  a(3, 2) = 3.0;
  EXPECT_NEAR(pfaffian(a), -6.0, 1e-14);
}

TEST(Pfaffian, MatchesPerfectMatchingSum) {
  std::mt19937 rng(8);
  for (int n : {2, 4, 6, 8, 10}) {
    for (int trial = 0; trial < 5; ++trial) {
      const RMat a = oracle::random_antisymmetric(rng, n);
      const double ref = oracle::pfaffian_matchings(a);
      EXPECT_NEAR(pfaffian(a), ref, 1e-9 * std::max(1.0, std::abs(ref))) << "n=" << n;
    }
  }
}

TEST(Pfaffian, SquareIsDeterminant) {
  std::mt19937 rng(9);
  for (int n : {4, 8, 12, 16}) {
    const RMat a = oracle::random_antisymmetric(rng, n);
    const double pf = pfaffian(a);
    const double det = a.determinant();
    EXPECT_NEAR(pf * pf, det, 1e-9 * std::abs(det)) << "n=" << n;
  }
}

TEST(Pfaffian, CongruenceScalesByDeterminant) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 * (1 + trial % 5);
    const RMat a = oracle::random_antisymmetric(rng, n);
    Eigen::HouseholderQR<RMat> qr(oracle::random_antisymmetric(rng, n) + RMat::Identity(n, n));
    const RMat v = qr.householderQ() * RMat::Identity(n, n);
    const double lhs = pfaffian(v.transpose() * a * v);
    const double rhs = v.determinant() * pfaffian(a);
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Pfaffian, OddDimensionAndErrors) {
  EXPECT_EQ(pfaffian(RMat::Zero(3, 3)), 0.0);
  RMat sym = RMat::Identity(2, 2);
  EXPECT_THROW(pfaffian(sym), NotAntisymmetric);
  EXPECT_EQ(pfaffian(RMat::Zero(0, 0)), 1.0);
}
