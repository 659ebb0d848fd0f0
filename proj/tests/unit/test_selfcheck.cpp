#include <gtest/gtest.h>

#include <sstream>

#include "tenfold/acceptance.hpp"

using namespace tenfold;

namespace {

const acceptance::CriterionResult& find(const std::vector<acceptance::CriterionResult>& rs, int id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  throw std::runtime_error("criterion missing");
}

}  // namespace

TEST(SelfCheck, CorruptedTableCellIsNamed) {
  acceptance::Config cfg;
  cfg.reference[reference_row(Family::Real, 4)][2] = "Z";  // AII, d=2
  std::ostringstream out;
  EXPECT_EQ(acceptance::selfcheck(out, cfg), 1);
  const std::string text = out.str();
  EXPECT_NE(text.find("FAIL  1"), std::string::npos) << text;
  EXPECT_NE(text.find("real s=4 d=2 (AII)"), std::string::npos) << text;
}

TEST(SelfCheck, FlippedChernOrientationFailsQwzCriterion) {
  acceptance::Config cfg;
  cfg.chern_orientation = PlaquetteOrientation::KyKx;
  const auto results = acceptance::run(cfg);
  EXPECT_FALSE(find(results, 6).pass);
  EXPECT_TRUE(find(results, 1).pass);
  EXPECT_TRUE(find(results, 5).pass);
}

TEST(SelfCheck, QuietPrintsNothing) {
  acceptance::Config cfg;
  cfg.reference[0][0] = "0";
  std::ostringstream out;
  EXPECT_EQ(acceptance::selfcheck(out, cfg, true), 1);
  EXPECT_TRUE(out.str().empty());
}
