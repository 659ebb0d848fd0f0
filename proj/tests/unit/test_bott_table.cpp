#include <gtest/gtest.h>

#include "tenfold/bott_table.hpp"

using namespace tenfold;
using G = InvariantGroup;

TEST(Pi0, ClassifyingSpaces) {
  EXPECT_EQ(pi0(Family::Real, 0), G::Z);
  EXPECT_EQ(pi0(Family::Real, 3), G::Zero);
  EXPECT_EQ(pi0(Family::Complex, 1), G::Zero);
  EXPECT_EQ(classifying_space(Family::Real, 4).label, "{Sp(4n)/(Sp(2n)×Sp(2n))}×Z");
  EXPECT_EQ(classifying_space(Family::Complex, 0).label, "U(2n)/(U(n)×U(n))×Z");
}

TEST(GroupAt, TableCells) {
  EXPECT_EQ(group_at(Family::Real, 4, 2), G::Z2);
  EXPECT_EQ(group_at(Family::Real, 0, 0), G::Z);
  EXPECT_EQ(group_at(Family::Complex, 1, 3), G::Z);
}

TEST(Shifts, WrapAround) {
  EXPECT_EQ(loop_shift(TableIndex(Family::Real, 7, 3)), TableIndex(Family::Real, 0, 3));
  EXPECT_EQ(loop_shift(TableIndex(Family::Complex, 1, 0)), TableIndex(Family::Complex, 0, 0));
  EXPECT_EQ(suspend_shift(TableIndex(Family::Real, 2, 7)), TableIndex(Family::Real, 2, 0));
  EXPECT_EQ(suspend_shift(suspend_shift(TableIndex(Family::Real, 0, 0))), TableIndex(Family::Real, 0, 2));
}

TEST(Shifts, LoopThenSuspendPreservesGroup) {
  for (Family f : {Family::Complex, Family::Real})
    for (int s = 0; s < period(f); ++s)
      for (int d = 0; d < period(f); ++d) {
        const TableIndex idx(f, s, d);
        EXPECT_EQ(group_at(suspend_shift(loop_shift(idx))), group_at(idx));
      }
}

TEST(Table, RegeneratesAllEightyCells) {
  const auto diff = generate_table();
  EXPECT_EQ(diff.compared, 80u);
  EXPECT_TRUE(diff.ok());
  EXPECT_EQ(diff.matched(), 80u);
}

TEST(Table, DetectsCorruptedCell) {
  ReferenceTable bad = kReferenceTable;
  bad[reference_row(Family::Real, 2)][1] = "Z";  // D, d=1 is Z2
  const auto diff = generate_table(bad);
  ASSERT_EQ(diff.mismatches.size(), 1u);
  const auto& m = diff.mismatches[0];
  EXPECT_EQ(m.family, Family::Real);
  EXPECT_EQ(m.s, 2);
  EXPECT_EQ(m.d, 1);
  EXPECT_EQ(m.generated, G::Z2);
  EXPECT_EQ(m.reference, "Z");
}

TEST(Table, RealColumnsHaveTwoZTwoZ2FourTrivial) {
  for (int d = 0; d < 8; ++d) {
    int z = 0, z2 = 0, zero = 0;
    for (int s = 0; s < 8; ++s) {
      const auto g = group_at(Family::Real, s, d);
      z += g == G::Z;
      z2 += g == G::Z2;
      zero += g == G::Zero;
    }
    EXPECT_EQ(z, 2) << "d=" << d;
    EXPECT_EQ(z2, 2) << "d=" << d;
    EXPECT_EQ(zero, 4) << "d=" << d;
  }
}

TEST(Table, DependsOnlyOnSMinusD) {
  for (Family f : {Family::Complex, Family::Real}) {
    const int p = period(f);
    for (int s = -2 * p; s < 2 * p; ++s)
      for (int d = -2 * p; d < 2 * p; ++d) EXPECT_EQ(group_at(f, s, d), pi0(f, reduce(s - d, f)));
  }
}

TEST(Table, PeriodicityReportPasses) {
  const auto checks = check_periodicities();
  ASSERT_EQ(checks.size(), 3u);
  EXPECT_EQ(checks[0].name, "(1,1)-periodicity");
  for (const auto& c : checks) {
    EXPECT_TRUE(c.ok()) << c.name;
    EXPECT_GT(c.checked, 0u);
  }
}

TEST(Groups, ParseAndPrint) {
  for (G g : {G::Zero, G::Z2, G::Z}) EXPECT_EQ(parse_group(to_string(g)), g);
  EXPECT_FALSE(parse_group("Z3").has_value());
  EXPECT_EQ(cartan_label(Family::Real, 9), "BDI");
}
